#include "c2zhu/numeric.hpp"

namespace c2zhu {

Integer binomial(long n, long r) {
  if (r < 0 || n < 0 || r > n) return 0;
  if (r > n - r) r = n - r;
  Integer result = 1;
  for (long i = 1; i <= r; ++i) {
    result *= n - r + i;
    result /= i;
  }
  return result;
}

}  // namespace c2zhu
