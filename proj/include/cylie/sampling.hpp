#ifndef CYLIE_SAMPLING_HPP
#define CYLIE_SAMPLING_HPP

#include <cstdint>

#include "cylie/matrix.hpp"

namespace cylie {

// Deterministic generator for the randomized property checks (splitmix64).
// Same seed, same samples, byte-identical reports.
class Sampler {
public:
  explicit Sampler(uint64_t seed) : state_(seed) {}

  uint64_t next();
  // Uniform in [lo, hi].
  int64_t range(int64_t lo, int64_t hi);

  // Small rationals keep intermediate products within the checked 64-bit
  // backing even after a few multiplications.
  Rational rational(int64_t max_num = 9, int64_t max_den = 9);
  Gauss gauss(int64_t max_num = 9, int64_t max_den = 9);
  Tower tower(int64_t max_num = 9, int64_t max_den = 9);

  // Rational point on the unit circle: (1 - t^2 + 2ti) / (1 + t^2).
  Gauss circle_point();

  Mat rational_matrix(int n, int64_t max_num = 5, int64_t max_den = 3);
  // Unipotent upper-triangular with rational entries above the diagonal.
  Mat unipotent_upper(int n);
  // Random SL2 over Q from the generators [[1,q],[0,1]] and [[1,0],[q,1]].
  Mat sl2_rational(int words = 4);

private:
  uint64_t state_;
};

}  // namespace cylie

#endif
