#include <cstdio>
#include <iostream>

#include "cybmw/diagram.hpp"
#include "cybmw/engine.hpp"
#include "cybmw/errors.hpp"
#include "cybmw/params.hpp"

using namespace cybmw;

static void dump(const char* label, const AlgElem& x) {
  std::cout << label << ": " << x.terms.size() << " terms\n";
  for (const auto& [t, c] : x.terms) {
    std::cout << "  a=[";
    for (int v : t.a) std::cout << v << ",";
    std::cout << "] d0=(";
    for (size_t i = 0; i < t.d0.mate.size(); ++i)
      std::cout << t.d0.mate[i] << (i + 1 < t.d0.mate.size() ? "," : "");
    std::cout << ") b=[";
    for (int v : t.b) std::cout << v << ",";
    std::cout << "]  coeff=" << c.to_string() << "\n";
  }
}

int main() {
  try {
    auto pp = Params::make_universal_admissible(2, Branch::A); const Params& p = *pp;

    // identity at n=2
    GenWord wid; wid.n = 2;
    dump("empty word n=2", reduce_word(wid, p));

    // g1^{-1}
    GenWord gneg; gneg.n = 2; gneg.toks = {Tok::g(1, -1)};
    dump("g1^-1", reduce_word(gneg, p));

    // e1 y1 e1  -> delta_1 e1
    GenWord eye; eye.n = 2; eye.toks = {Tok::e(1), Tok::y(+1), Tok::e(1)};
    dump("e1 y1 e1", reduce_word(eye, p));

    // y1^r with r=2 -> -(a0 + a1 y1)
    GenWord yr; yr.n = 2; yr.toks = {Tok::y(+1), Tok::y(+1)};
    dump("y1^2 (r=2)", reduce_word(yr, p));

    // g1^2
    GenWord g2; g2.n = 2; g2.toks = {Tok::g(1, +1), Tok::g(1, +1)};
    dump("g1^2", reduce_word(g2, p));

    // y1 g1 y1 g1 vs g1 y1 g1 y1 (must agree)
    GenWord l4; l4.n = 2; l4.toks = {Tok::y(+1), Tok::g(1,+1), Tok::y(+1), Tok::g(1,+1)};
    GenWord r4; r4.n = 2; r4.toks = {Tok::g(1,+1), Tok::y(+1), Tok::g(1,+1), Tok::y(+1)};
    AlgElem L = reduce_word(l4, p), R = reduce_word(r4, p);
    dump("y g y g", L);
    std::cout << "y g y g == g y g y: " << (L == R ? "YES" : "NO") << "\n";

    // e1 y1 g1 y1 -> rho e1
    GenWord e8; e8.n = 2; e8.toks = {Tok::e(1), Tok::y(+1), Tok::g(1,+1), Tok::y(+1)};
    dump("e1 y1 g1 y1", reduce_word(e8, p));

    // n=3: g1 g2 g1 vs g2 g1 g2
    GenWord b1; b1.n = 3; b1.toks = {Tok::g(1,+1), Tok::g(2,+1), Tok::g(1,+1)};
    GenWord b2; b2.n = 3; b2.toks = {Tok::g(2,+1), Tok::g(1,+1), Tok::g(2,+1)};
    std::cout << "braid: " << (reduce_word(b1, p) == reduce_word(b2, p) ? "YES" : "NO") << "\n";

    // n=3: e1 e2 e1 = e1
    GenWord z1; z1.n = 3; z1.toks = {Tok::e(1), Tok::e(2), Tok::e(1)};
    GenWord z2; z2.n = 3; z2.toks = {Tok::e(1)};
    std::cout << "e1e2e1==e1: " << (reduce_word(z1, p) == reduce_word(z2, p) ? "YES" : "NO") << "\n";

    // y'2 = g1 y1 g1^{-1}; check y'2 e1 reduces (cap-flip path)
    GenWord c1; c1.n = 2; c1.toks = {Tok::g(1,+1), Tok::y(+1), Tok::g(1,-1), Tok::e(1)};
    dump("y'2 e1", reduce_word(c1, p));

    // product of random-ish basis elements via mul
    auto basis = basis_enumerate(2, 2);
    std::cout << "basis(2,2) size " << basis.size() << "\n";
    AlgElem x = alg_basis(basis[3], p), y = alg_basis(basis[7], p);
    dump("b3*b7", mul(x, y, p));

    EngineStats st = engine_stats();
    std::cout << "stats: steps=" << st.step_entries << " hits=" << st.step_hits
              << " misses=" << st.step_misses << " solver=" << st.solver_runs << "\n";
  } catch (const Error& e) {
    std::cout << "ERROR kind=" << static_cast<int>(e.kind()) << ": " << e.what() << "\n";
    return 1;
  }
  return 0;
}
