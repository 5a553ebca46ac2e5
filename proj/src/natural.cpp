#include "unshuffle/natural.hpp"

namespace unshuffle {

Natural factorial(unsigned n) {
  Natural out = 1;
  for (unsigned k = 2; k <= n; ++k) out *= k;
  return out;
}

Natural pow2(unsigned e) { return Natural(1) << e; }

}  // namespace unshuffle
