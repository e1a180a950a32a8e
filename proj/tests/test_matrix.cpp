#include "doctest.h"

#include <algorithm>

#include "cylie/matrix.hpp"
#include "cylie/sampling.hpp"

using namespace cylie;

namespace {

Scalar gi(int64_t re, int64_t im) { return Scalar(Gauss(Rational(re), Rational(im))); }

// The displayed 8x8 monodromy log at r = s = t = 1, hardcoded entrywise;
// used here as test input for rank/profile, independent of the borcea
// module's construction.
Mat n111() {
  Mat n(8, 8);
  auto put = [&](int i, int j) { n = n.with_entry(i - 1, j - 1, Scalar(2)); };
  put(1, 2), put(1, 3), put(1, 5);
  put(2, 4), put(2, 6);
  put(3, 4), put(3, 7);
  put(4, 8);
  put(5, 6), put(5, 7);
  put(6, 8), put(7, 8);
  return n;
}

// Independent oracle: rank over Q by naive elimination on int64 fractions
// avoided entirely -- uses integer row operations (multiply-and-subtract),
// so it shares no code path with Mat's field elimination.
int int_rank_oracle(std::vector<std::vector<int64_t>> m) {
  size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  size_t prow = 0;
  for (size_t col = 0; col < cols && prow < rows; ++col) {
    size_t piv = prow;
    while (piv < rows && m[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[prow], m[piv]);
    for (size_t i = prow + 1; i < rows; ++i) {
      if (m[i][col] == 0) continue;
      int64_t a = m[prow][col], b = m[i][col];
      for (size_t j = 0; j < cols; ++j) m[i][j] = m[i][j] * a - m[prow][j] * b;
    }
    ++prow;
  }
  return int(prow);
}

std::vector<std::vector<int64_t>> to_ints(const Mat& m) {
  std::vector<std::vector<int64_t>> out(m.rows(), std::vector<int64_t>(m.cols()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      REQUIRE(m.at(i, j).as_rational().den() == 1);
      out[i][j] = m.at(i, j).as_rational().num();
    }
  return out;
}

}  // namespace

TEST_CASE("commutator basics and the displayed [N1,N2] value") {
  Sampler rng(23);
  Mat m = rng.rational_matrix(4);
  CHECK(commutator(m, m).is_zero());

  Mat n1(4, 4), n2(4, 4);
  n1 = n1.with_entry(1, 2, Scalar(1)).with_entry(2, 1, Scalar(1));
  n2 = n2.with_entry(1, 2, gi(0, 1)).with_entry(2, 1, gi(0, -1));
  Mat expect = Mat::diagonal({gi(0, 0), gi(0, -2), gi(0, 2), gi(0, 0)});
  CHECK(commutator(n1, n2) == expect);

  CHECK_THROWS_AS(commutator(Mat::identity(2), Mat::identity(3)), Error);
}

TEST_CASE("jacobi identity on random rational 4x4 triples") {
  Sampler rng(29);
  for (int k = 0; k < 1000; ++k) {
    Mat a = rng.rational_matrix(4, 3, 2), b = rng.rational_matrix(4, 3, 2), c = rng.rational_matrix(4, 3, 2);
    Mat j = commutator(a, commutator(b, c)) + commutator(b, commutator(c, a)) +
            commutator(c, commutator(a, b));
    CHECK(j.is_zero());
  }
}

TEST_CASE("kronecker products") {
  CHECK(kron(Mat::identity(2), Mat::identity(2)) == Mat::identity(4));

  Mat a{{Scalar(1), Scalar(2)}, {Scalar(0), Scalar(1)}};
  Mat cube = kron(kron(a, a), a);
  CHECK(cube.rows() == 8);
  CHECK(cube.at(0, 7) == Scalar(8));  // 2^3 in the corner

  Sampler rng(31);
  for (int k = 0; k < 1000; ++k) {
    Mat p = rng.rational_matrix(2), q = rng.rational_matrix(2);
    Mat r = rng.rational_matrix(2), s = rng.rational_matrix(2);
    CHECK(kron(p, q) * kron(r, s) == kron(p * r, q * s));
  }
}

TEST_CASE("kernel bases are exact and correctly sized") {
  CHECK(kernel_basis(Mat::identity(4)).empty());
  CHECK(kernel_basis(Mat(2, 2)).size() == 2);

  // Commuting with diag(i,-i,i,-i) and diag(3i,i,-i,-3i) forces diagonal:
  // stack the two bracket conditions as a linear system on the 16 entries.
  Mat d1 = Mat::diagonal({gi(0, 1), gi(0, -1), gi(0, 1), gi(0, -1)});
  Mat d2 = Mat::diagonal({gi(0, 3), gi(0, 1), gi(0, -1), gi(0, -3)});
  Mat sys(32, 16, Ring::Gauss);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      // [X, D](i,j) = X(i,j) (D(j,j) - D(i,i))
      sys = sys.with_entry(i * 4 + j, i * 4 + j, d1.at(j, j) - d1.at(i, i));
      sys = sys.with_entry(16 + i * 4 + j, i * 4 + j, d2.at(j, j) - d2.at(i, i));
    }
  auto kb = kernel_basis(sys);
  REQUIRE(kb.size() == 4);
  for (const auto& v : kb) {
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        if (i != j) CHECK(v.at(i * 4 + j, 0).is_zero());
  }

  Sampler rng(37);
  for (int k = 0; k < 200; ++k) {
    Mat m = rng.rational_matrix(4 + int(rng.range(0, 1)));
    auto basis = kernel_basis(m);
    CHECK(int(basis.size()) + rank(m) == m.cols());
    for (const auto& v : basis) CHECK((m * v).is_zero());
    Mat m2 = rng.rational_matrix(m.rows());
    CHECK(rank(m * m2) <= std::min(rank(m), rank(m2)));
  }

  CHECK_THROWS_AS(kernel_basis(Mat(2, 2, Ring::Poly)), Error);
}

TEST_CASE("rank of the 8x8 monodromy log and its powers") {
  Mat n = n111();
  // Frozen from the brute-force rank sequence of the displayed matrix:
  // (8, 5, 2, 1, 0). Cross-checked by the integer elimination oracle.
  CHECK(rank(n) == 5);
  CHECK(int_rank_oracle(to_ints(n)) == 5);
  Mat n2 = n * n, n3 = n2 * n;
  CHECK(rank(n2) == 2);
  CHECK(int_rank_oracle(to_ints(n2)) == 2);
  CHECK(rank(n3) == 1);
  CHECK(n3.at(0, 7) == Scalar(48));
  CHECK((n3 * n).is_zero());
  CHECK(rank(Mat::identity(4)) == 4);
}

TEST_CASE("nilpotent profiles from the rank sequence") {
  CHECK(nilpotent_profile(Mat(4, 4)) == std::vector<int>{1, 1, 1, 1});

  Mat j4(4, 4);
  for (int i = 0; i < 3; ++i) j4 = j4.with_entry(i, i + 1, Scalar(1));
  CHECK(nilpotent_profile(j4) == std::vector<int>{4});

  CHECK(nilpotent_profile(n111()) == std::vector<int>{4, 2, 2});

  CHECK_THROWS_AS(nilpotent_profile(Mat::identity(3)), Error);
}

TEST_CASE("unipotent log and nilpotent exp") {
  CHECK(unipotent_log(Mat::identity(3)).is_zero());

  Mat rho{{Scalar(1), Scalar(2)}, {Scalar(0), Scalar(1)}};
  Mat log_rho{{Scalar(0), Scalar(2)}, {Scalar(0), Scalar(0)}};
  CHECK(unipotent_log(rho) == log_rho);
  CHECK(nilpotent_exp(log_rho) == rho);

  Mat j3(3, 3);
  j3 = j3.with_entry(0, 1, Scalar(1)).with_entry(1, 2, Scalar(1));
  Mat u = j3 + Mat::identity(3);
  Mat expect{{Scalar(0), Scalar(1), Scalar(Rational(-1, 2))},
             {Scalar(0), Scalar(0), Scalar(1)},
             {Scalar(0), Scalar(0), Scalar(0)}};
  CHECK(unipotent_log(u) == expect);
  CHECK(nilpotent_exp(expect) == u);

  CHECK(nilpotent_exp(Mat(2, 2)) == Mat::identity(2));
  Mat t = nilpotent_exp(n111());
  Mat w = t - Mat::identity(8);
  CHECK_FALSE((w * w * w).is_zero());

  CHECK_THROWS_AS(unipotent_log(Mat(2, 2)), Error);           // 0 is not unipotent
  CHECK_THROWS_AS(nilpotent_exp(Mat::identity(2)), Error);    // I is not nilpotent

  Sampler rng(41);
  for (int k = 0; k < 1000; ++k) {
    Mat m = rng.unipotent_upper(4);
    CHECK(nilpotent_exp(unipotent_log(m)) == m);
  }
}

TEST_CASE("determinants over fields and over the polynomial ring") {
  CHECK(det(Mat::identity(4)) == Scalar(1));

  // The alternating form of the fixed frame: antidiagonal (-i,-i,i,i).
  Mat q(4, 4, Ring::Gauss);
  q = q.with_entry(0, 3, gi(0, -1)).with_entry(1, 2, gi(0, -1));
  q = q.with_entry(2, 1, gi(0, 1)).with_entry(3, 0, gi(0, 1));
  CHECK(det(q) == Scalar(1));

  Sampler rng(43);
  for (int k = 0; k < 300; ++k) {
    Mat a = rng.rational_matrix(3), b = rng.rational_matrix(3);
    CHECK(det(a * b) == det(a) * det(b));
  }

  // Polynomial 2x2 via Laplace
  Mat sym{{Scalar(Poly::var(Var::a)), Scalar(Poly::var(Var::b))},
          {Scalar(Poly::var(Var::c)), Scalar(Poly::var(Var::d))}};
  Poly ad_bc = Poly::var(Var::a) * Poly::var(Var::d) - Poly::var(Var::b) * Poly::var(Var::c);
  CHECK(det(sym) == Scalar(ad_bc));
}

TEST_CASE("ring mixing promotes upward, tower/poly mixes are rejected") {
  Mat m{{Scalar(1), Scalar::i()}, {Scalar(0), Scalar(1)}};
  CHECK(m.ring() == Ring::Gauss);
  Mat t{{Scalar(Tower::sqrt3()), Scalar(0)}, {Scalar(0), Scalar(1)}};
  CHECK(t.ring() == Ring::Tower);
  CHECK_THROWS_AS(Mat({{Scalar(Tower::sqrt3()), Scalar(Poly::var(Var::a))}}), Error);
  CHECK_THROWS_AS(rank(Mat(2, 2, Ring::Poly)), Error);
  CHECK_THROWS_AS(det(Mat(2, 3)), Error);
}
