#include "doctest.h"

#include "cylie/borcea.hpp"
#include "cylie/sampling.hpp"

using namespace cylie;

namespace {

Poly pvr() { return Poly::var(Var::r); }
Poly pvs() { return Poly::var(Var::s); }
Poly pvt() { return Poly::var(Var::t); }

// The displayed 8x8 matrix of the triple-product monodromy log, entry by
// entry with symbolic r, s, t.
Mat displayed_nrst() {
  Mat n(8, 8, Ring::Poly);
  auto put = [&](int i, int j, const Poly& p) {
    n = n.with_entry(i - 1, j - 1, Scalar(Poly(2) * p));
  };
  put(1, 2, pvt()), put(1, 3, pvs()), put(1, 5, pvr());
  put(2, 4, pvs()), put(2, 6, pvr());
  put(3, 4, pvt()), put(3, 7, pvr());
  put(4, 8, pvr());
  put(5, 6, pvt()), put(5, 7, pvs());
  put(6, 8, pvs());
  put(7, 8, pvt());
  return n;
}

Mat rotation(const Gauss& z) {
  return Mat{{Scalar(z.re()), Scalar(z.im())}, {Scalar(-z.im()), Scalar(z.re())}};
}

// Factor-swap operators on the tensor basis.
Mat tensor_swap(int f1, int f2) {
  Mat p(8, 8);
  for (int idx = 0; idx < 8; ++idx) {
    int bits[3] = {(idx >> 2) & 1, (idx >> 1) & 1, idx & 1};
    std::swap(bits[f1], bits[f2]);
    int tgt = bits[0] * 4 + bits[1] * 2 + bits[2];
    p = p.with_entry(tgt, idx, Scalar(1));
  }
  return p;
}

}  // namespace

TEST_CASE("legendre monodromy generator") {
  Mat a = legendre_monodromy();
  CHECK(a == Mat{{Scalar(1), Scalar(2)}, {Scalar(0), Scalar(1)}});
  Mat n = a - Mat::identity(2);
  CHECK((n * n).is_zero());
  CHECK(unipotent_log(a) == Mat{{Scalar(0), Scalar(2)}, {Scalar(0), Scalar(0)}});
  CHECK(det(a) == Scalar(1));
}

TEST_CASE("the 8x8 monodromy log matches the displayed matrix entrywise") {
  CHECK(borcea_nilpotent_symbolic() == displayed_nrst());

  Mat n100 = borcea_nilpotent(Rational(1), Rational(0), Rational(0));
  int nonzero = 0;
  for (const auto& e : n100.entries()) nonzero += e.is_zero() ? 0 : 1;
  CHECK(nonzero == 4);
  CHECK(n100.at(0, 4) == Scalar(2));
  CHECK(n100.at(1, 5) == Scalar(2));
  CHECK(n100.at(2, 6) == Scalar(2));
  CHECK(n100.at(3, 7) == Scalar(2));

  Mat n = borcea_nilpotent(Rational(1), Rational(2), Rational(3));
  CHECK(n.at(0, 1) == Scalar(6));  // 2t
  CHECK(n.at(0, 2) == Scalar(4));  // 2s
  CHECK(n.at(0, 4) == Scalar(2));  // 2r

  CHECK(borcea_nilpotent(Rational(0), Rational(0), Rational(0)).is_zero());

  CHECK(tensor_basis_labels().size() == 8);
  CHECK(tensor_basis_labels()[0] == "a1*a2*a3");
  CHECK(tensor_basis_labels()[7] == "b1*b2*b3");
}

TEST_CASE("the monodromy log is linear in (r, s, t)") {
  Sampler rng(89);
  for (int k = 0; k < 100; ++k) {
    Rational r1 = rng.rational(), s1 = rng.rational(), t1 = rng.rational();
    Rational r2 = rng.rational(), s2 = rng.rational(), t2 = rng.rational();
    CHECK(borcea_nilpotent(r1 + r2, s1 + s2, t1 + t2) ==
          borcea_nilpotent(r1, s1, t1) + borcea_nilpotent(r2, s2, t2));
  }
}

TEST_CASE("log commutes with tensoring against identities") {
  Sampler rng(97);
  Mat i2 = Mat::identity(2);
  for (int k = 0; k < 200; ++k) {
    Mat a = rng.unipotent_upper(2);
    Mat log_a = unipotent_log(a);
    CHECK(unipotent_log(kron(kron(a, i2), i2)) == kron(kron(log_a, i2), i2));
    CHECK(unipotent_log(kron(kron(i2, a), i2)) == kron(kron(i2, log_a), i2));
  }
}

TEST_CASE("maximal unipotency holds at (1,1,1) and fails for one factor") {
  Mat n111 = borcea_nilpotent(Rational(1), Rational(1), Rational(1));
  CHECK(max_unipotent_check(n111));
  Mat cube = n111 * n111 * n111;
  CHECK(cube.at(0, 7) == Scalar(48));
  CHECK(rank(cube) == 1);

  Mat n100 = borcea_nilpotent(Rational(1), Rational(0), Rational(0));
  CHECK((n100 * n100).is_zero());
  CHECK_FALSE(max_unipotent_check(n100));

  Mat j4(4, 4);
  for (int i = 0; i < 3; ++i) j4 = j4.with_entry(i, i + 1, Scalar(1));
  CHECK(max_unipotent_check(j4));

  CHECK_THROWS_AS(max_unipotent_check(Mat::identity(4)), Error);
}

TEST_CASE("sym3 of simple matrices") {
  CHECK(sym3_matrix(Mat::identity(2)) == Mat::identity(4));

  Mat rho{{Scalar(1), Scalar(2)}, {Scalar(0), Scalar(1)}};
  Mat expect{{Scalar(1), Scalar(6), Scalar(12), Scalar(8)},
             {Scalar(0), Scalar(1), Scalar(4), Scalar(4)},
             {Scalar(0), Scalar(0), Scalar(1), Scalar(2)},
             {Scalar(0), Scalar(0), Scalar(0), Scalar(1)}};
  CHECK(sym3_matrix(rho) == expect);

  CHECK_THROWS_AS(sym3_matrix(Mat::identity(3)), Error);
}

TEST_CASE("sym3_matrix is exactly the restriction of the Kronecker cube") {
  // Symbolically: the induced matrix on the symmetric-orbit basis equals
  // the cubic-entry matrix, including the (3,2) entry 2acd + bc^2.
  Mat sym{{Scalar(Poly::var(Var::a)), Scalar(Poly::var(Var::b))},
          {Scalar(Poly::var(Var::c)), Scalar(Poly::var(Var::d))}};
  CHECK(sym3_restriction_check(sym));
  Poly entry32 = Poly(2) * Poly::var(Var::a) * Poly::var(Var::c) * Poly::var(Var::d) +
                 Poly::var(Var::b) * Poly::var(Var::c) * Poly::var(Var::c);
  CHECK(sym3_matrix(sym).at(2, 1) == Scalar(entry32));

  Sampler rng(101);
  for (int k = 0; k < 100; ++k) CHECK(sym3_restriction_check(rng.rational_matrix(2)));
}

TEST_CASE("sym3 is a homomorphism") {
  CHECK(sym3_hom_check(Mat::identity(2), Mat::identity(2)));

  Sampler rng(103);
  for (int k = 0; k < 100; ++k) CHECK(sym3_hom_check(rng.sl2_rational(), rng.sl2_rational()));

  // fully symbolic in 8 indeterminates
  Mat a{{Scalar(Poly::var(Var::a)), Scalar(Poly::var(Var::b))},
        {Scalar(Poly::var(Var::c)), Scalar(Poly::var(Var::d))}};
  Mat b{{Scalar(Poly::var(Var::e)), Scalar(Poly::var(Var::f))},
        {Scalar(Poly::var(Var::g)), Scalar(Poly::var(Var::h))}};
  CHECK(sym3_hom_check(a, b));
}

TEST_CASE("sym3 cube identities, with the sampling oracle for the analogues") {
  Sym3Identities res = sym3_polynomial_identities();
  CHECK(res.all_hold);
  CHECK(res.identities.size() == 5);
  for (const auto& [name, ok] : res.identities) {
    INFO(name);
    CHECK(ok);
  }

  // Oracle: recover the analogue coefficients from random evaluations and
  // confirm the frozen values (8, 4/3, 2/3, 1) for the (2,3) identity and
  // (1, 2/3, 4/3, 8) for (3,3).
  Sampler rng(107);
  auto entry = [](const Mat& r, int i, int j) { return r.at(i - 1, j - 1); };
  auto solve_coeffs = [&](int ti, int tj, int fi, int fj) {
    // cube(target) = factor * (l1 m11 m44 + l2 m12 m43 + l3 m13 m42 + l4 m14 m41)
    Mat sys(4, 4);
    Mat rhs(4, 1);
    int row = 0;
    while (row < 4) {
      Mat m = rng.rational_matrix(2, 4, 2);
      Mat r = sym3_matrix(m);
      Scalar f = entry(r, fi, fj);
      if (f.is_zero()) continue;
      Scalar mono[4] = {entry(r, 1, 1) * entry(r, 4, 4), entry(r, 1, 2) * entry(r, 4, 3),
                        entry(r, 1, 3) * entry(r, 4, 2), entry(r, 1, 4) * entry(r, 4, 1)};
      for (int c = 0; c < 4; ++c) sys = sys.with_entry(row, c, mono[c]);
      Scalar t = entry(r, ti, tj);
      rhs = rhs.with_entry(row, 0, t * t * t / f);
      ++row;
      if (row == 4 && rank(sys) < 4) row = 0;  // resample a degenerate batch
    }
    return solve(sys, rhs).value();
  };

  Mat c23 = solve_coeffs(2, 3, 1, 4);
  CHECK(c23.at(0, 0) == Scalar(8));
  CHECK(c23.at(1, 0) == Scalar(Rational(4, 3)));
  CHECK(c23.at(2, 0) == Scalar(Rational(2, 3)));
  CHECK(c23.at(3, 0) == Scalar(1));

  Mat c33 = solve_coeffs(3, 3, 4, 4);
  CHECK(c33.at(0, 0) == Scalar(1));
  CHECK(c33.at(1, 0) == Scalar(Rational(2, 3)));
  CHECK(c33.at(2, 0) == Scalar(Rational(4, 3)));
  CHECK(c33.at(3, 0) == Scalar(8));
}

TEST_CASE("sym3 of a transpose is the transpose up to diag(1,3,3,1)") {
  Sampler rng(109);
  Mat d = Mat::diagonal({Scalar(1), Scalar(3), Scalar(3), Scalar(1)});
  Mat d_inv = inverse(d);
  for (int k = 0; k < 100; ++k) {
    Mat m = rng.rational_matrix(2);
    CHECK(sym3_matrix(m.transpose()) == d_inv * sym3_matrix(m).transpose() * d);
  }
}

TEST_CASE("sym3 respects the circle: rational rotations stay volume-preserving") {
  Sampler rng(113);
  for (int k = 0; k < 100; ++k) {
    Mat rot = rotation(rng.circle_point());
    CHECK(det(sym3_matrix(rot)) == Scalar(1));
    CHECK(sym3_hom_check(rot, rotation(rng.circle_point())));
    CHECK(sym3_restriction_check(rot));
  }
  Mat r35 = rotation(Gauss(Rational(3, 5), Rational(4, 5)));
  CHECK(det(sym3_matrix(r35)) == Scalar(1));
}

TEST_CASE("the Kronecker cube commutes with factor permutations") {
  Sampler rng(127);
  for (int k = 0; k < 50; ++k) {
    Mat m = rng.rational_matrix(2);
    Mat cube = kron(kron(m, m), m);
    for (auto [f1, f2] : {std::pair{0, 1}, std::pair{1, 2}, std::pair{0, 2}}) {
      Mat p = tensor_swap(f1, f2);
      CHECK(p * cube == cube * p);
    }
  }
  // and therefore fixes the symmetric vectors
  for (const Mat& s : sym_basis_vectors())
    for (auto [f1, f2] : {std::pair{0, 1}, std::pair{1, 2}}) CHECK(tensor_swap(f1, f2) * s == s);
}
