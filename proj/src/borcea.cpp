#include "cylie/borcea.hpp"

namespace cylie {

namespace {
Poly pv(Var v) { return Poly::var(v); }
}

std::vector<std::string> tensor_basis_labels() {
  std::vector<std::string> out;
  for (int i1 = 0; i1 < 2; ++i1)
    for (int i2 = 0; i2 < 2; ++i2)
      for (int i3 = 0; i3 < 2; ++i3)
        out.push_back(std::string(i1 ? "b1" : "a1") + "*" + (i2 ? "b2" : "a2") + "*" +
                      (i3 ? "b3" : "a3"));
  return out;
}

Mat legendre_monodromy() {
  return Mat{{Scalar(1), Scalar(2)}, {Scalar(0), Scalar(1)}};
}

namespace {
// Logs of the three one-factor monodromies on the tensor basis.
std::vector<Mat> factor_logs() {
  Mat a = legendre_monodromy();
  Mat i2 = Mat::identity(2);
  return {unipotent_log(kron(kron(a, i2), i2)), unipotent_log(kron(kron(i2, a), i2)),
          unipotent_log(kron(kron(i2, i2), a))};
}
}  // namespace

Mat borcea_nilpotent(const Rational& r, const Rational& s, const Rational& t) {
  auto logs = factor_logs();
  return Scalar(r) * logs[0] + Scalar(s) * logs[1] + Scalar(t) * logs[2];
}

Mat borcea_nilpotent_symbolic() {
  auto logs = factor_logs();
  return Scalar(pv(Var::r)) * logs[0] + Scalar(pv(Var::s)) * logs[1] + Scalar(pv(Var::t)) * logs[2];
}

bool max_unipotent_check(const Mat& n) {
  if (!is_nilpotent(n)) throw Error(ErrorKind::NotNilpotent, "max_unipotent_check");
  Mat n3 = n * n * n;
  return !n3.is_zero() && (n3 * n).is_zero();
}

std::vector<Mat> sym_basis_vectors() {
  auto unit = [](std::initializer_list<int> positions) {
    std::vector<Scalar> v(8, Scalar(0));
    for (int p : positions) v[p] = Scalar(1);
    return Mat::column(v);
  };
  // index = 4*(factor1) + 2*(factor2) + (factor3), 0 = e1, 1 = e2
  return {unit({0}), unit({1, 2, 4}), unit({3, 5, 6}), unit({7})};
}

Mat sym3_matrix(const Mat& m) {
  if (m.rows() != 2 || m.cols() != 2) throw Error(ErrorKind::ShapeMismatch, "sym3_matrix needs 2x2");
  const Scalar &a = m.at(0, 0), &b = m.at(0, 1), &c = m.at(1, 0), &d = m.at(1, 1);
  Scalar k2(2), k3(3);
  return Mat{
      {a * a * a, k3 * a * a * b, k3 * a * b * b, b * b * b},
      {a * a * c, a * a * d + k2 * a * b * c, k2 * a * b * d + b * b * c, b * b * d},
      {a * c * c, k2 * a * c * d + b * c * c, a * d * d + k2 * b * c * d, b * d * d},
      {c * c * c, k3 * c * c * d, k3 * c * d * d, d * d * d},
  };
}

bool sym3_hom_check(const Mat& a, const Mat& b) {
  return sym3_matrix(a * b) == sym3_matrix(a) * sym3_matrix(b);
}

bool sym3_restriction_check(const Mat& m) {
  Mat cube = kron(kron(m, m), m);
  auto sym = sym_basis_vectors();
  Mat induced(4, 4, cube.ring());
  for (int j = 0; j < 4; ++j) {
    Mat w = cube * sym[j].promote(cube.ring());
    // Images must have equal coordinates across each symmetric orbit.
    if (w.at(1, 0) != w.at(2, 0) || w.at(1, 0) != w.at(4, 0)) return false;
    if (w.at(3, 0) != w.at(5, 0) || w.at(3, 0) != w.at(6, 0)) return false;
    Scalar coords[4] = {w.at(0, 0), w.at(1, 0), w.at(3, 0), w.at(7, 0)};
    for (int i = 0; i < 4; ++i) induced = induced.with_entry(i, j, coords[i]);
  }
  return induced == sym3_matrix(m);
}

Sym3Identities sym3_polynomial_identities() {
  Mat m{{Scalar(pv(Var::a)), Scalar(pv(Var::b))}, {Scalar(pv(Var::c)), Scalar(pv(Var::d))}};
  Mat r = sym3_matrix(m);
  auto e = [&](int i, int j) { return r.at(i - 1, j - 1).as_poly(); };

  Sym3Identities out;

  Poly det_r = det(r).as_poly();
  Poly ad_bc = pv(Var::a) * pv(Var::d) - pv(Var::b) * pv(Var::c);
  Poly ad_bc6 = ad_bc * ad_bc * ad_bc * ad_bc * ad_bc * ad_bc;
  out.identities.push_back({"det(r(M)) = (ad-bc)^6", det_r == ad_bc6});

  auto cube = [](const Poly& p) { return p * p * p; };
  Poly c23 = Poly(Rational(2, 3)), c43 = Poly(Rational(4, 3)), c8 = Poly(8);

  // the printed identity and its three analogues (coefficients confirmed
  // by the sampling oracle in the test suite)
  Poly inner_a = e(1, 1) * e(4, 4) + c23 * e(1, 2) * e(4, 3) + c43 * e(1, 3) * e(4, 2) +
                 c8 * e(1, 4) * e(4, 1);
  Poly inner_b = c8 * e(1, 1) * e(4, 4) + c43 * e(1, 2) * e(4, 3) + c23 * e(1, 3) * e(4, 2) +
                 e(1, 4) * e(4, 1);
  out.identities.push_back({"m22^3 = m11 (m11 m44 + 2/3 m12 m43 + 4/3 m13 m42 + 8 m14 m41)",
                            cube(e(2, 2)) == e(1, 1) * inner_a});
  out.identities.push_back({"m23^3 = m14 (8 m11 m44 + 4/3 m12 m43 + 2/3 m13 m42 + m14 m41)",
                            cube(e(2, 3)) == e(1, 4) * inner_b});
  out.identities.push_back({"m32^3 = m41 (8 m11 m44 + 4/3 m12 m43 + 2/3 m13 m42 + m14 m41)",
                            cube(e(3, 2)) == e(4, 1) * inner_b});
  out.identities.push_back({"m33^3 = m44 (m11 m44 + 2/3 m12 m43 + 4/3 m13 m42 + 8 m14 m41)",
                            cube(e(3, 3)) == e(4, 4) * inner_a});

  out.all_hold = true;
  for (const auto& [name, ok] : out.identities) out.all_hold = out.all_hold && ok;
  return out;
}

}  // namespace cylie
