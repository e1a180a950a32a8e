#include "cylie/sampling.hpp"

namespace cylie {

uint64_t Sampler::next() {
  state_ += 0x9e3779b97f4a7c15ULL;
  uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

int64_t Sampler::range(int64_t lo, int64_t hi) {
  return lo + int64_t(next() % uint64_t(hi - lo + 1));
}

Rational Sampler::rational(int64_t max_num, int64_t max_den) {
  return Rational(range(-max_num, max_num), range(1, max_den));
}

Gauss Sampler::gauss(int64_t max_num, int64_t max_den) {
  return Gauss(rational(max_num, max_den), rational(max_num, max_den));
}

Tower Sampler::tower(int64_t max_num, int64_t max_den) {
  return Tower(rational(max_num, max_den), rational(max_num, max_den), rational(max_num, max_den),
               rational(max_num, max_den));
}

Gauss Sampler::circle_point() {
  Rational t = rational(6, 4);
  Rational den = Rational(1) + t * t;
  return Gauss((Rational(1) - t * t) / den, (Rational(2) * t) / den);
}

Mat Sampler::rational_matrix(int n, int64_t max_num, int64_t max_den) {
  std::vector<Scalar> es;
  es.reserve(size_t(n) * n);
  for (int k = 0; k < n * n; ++k) es.push_back(Scalar(rational(max_num, max_den)));
  return Mat(n, n, std::move(es));
}

Mat Sampler::unipotent_upper(int n) {
  std::vector<Scalar> es(size_t(n) * n, Scalar(0));
  for (int i = 0; i < n; ++i) {
    es[size_t(i) * n + i] = Scalar(1);
    for (int j = i + 1; j < n; ++j) es[size_t(i) * n + j] = Scalar(rational(4, 3));
  }
  return Mat(n, n, std::move(es));
}

Mat Sampler::sl2_rational(int words) {
  Mat m = Mat::identity(2);
  for (int w = 0; w < words; ++w) {
    Rational q = rational(3, 2);
    Mat gen = (next() & 1) ? Mat{{Scalar(1), Scalar(q)}, {Scalar(0), Scalar(1)}}
                           : Mat{{Scalar(1), Scalar(0)}, {Scalar(q), Scalar(1)}};
    m = m * gen;
  }
  return m;
}

}  // namespace cylie
