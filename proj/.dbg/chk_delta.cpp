#include <cybmw/params.hpp>
#include <cybmw/ring.hpp>
#include <iostream>
using namespace cybmw;

int main() {
  for (int r = 1; r <= 3; ++r) {
    for (auto br : {Branch::A, Branch::B}) {
      auto pp = Params::make_universal_admissible(r, br);
      const Params& p = *pp;
      RingElem zb = p.zbar(), ri = p.rho().inverse();
      bool ok = true;
      for (long m = 1; m <= 4; ++m) {
        RingElem rhs = ri * ri * p.delta(m);
        RingElem corr = p.zero();
        for (long k = 1; k <= m - 1; ++k)
          corr += p.delta(k) * p.delta(k - m) - p.delta(2 * k - m);
        rhs += zb * ri * corr;
        if (!(p.delta(-m) - rhs).is_zero()) {
          ok = false;
          std::cout << "r=" << r << " branch=" << (br == Branch::A ? "A" : "B")
                    << " MISMATCH at m=" << m << "\n";
        }
      }
      if (ok)
        std::cout << "r=" << r << " branch=" << (br == Branch::A ? "A" : "B")
                  << " loop-reversal OK m=1..4\n";
    }
  }
  return 0;
}
