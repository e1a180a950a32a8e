#include "cylie/checks.hpp"

#include <algorithm>
#include <chrono>

#include "cylie/borcea.hpp"
#include "cylie/gx_family.hpp"
#include "cylie/sampling.hpp"

namespace cylie {

namespace {

Scalar gi(int64_t re, int64_t im) { return Scalar(Gauss(Rational(re), Rational(im))); }

const HodgeFrame& frame() {
  static HodgeFrame f = HodgeFrame::canonical();
  return f;
}

const Subalgebra& sp4() {
  static Subalgebra s = sp_basis(frame());
  return s;
}

Mat hx_generator() { return Mat::diagonal({gi(0, 3), gi(0, 1), gi(0, -1), gi(0, -3)}); }

Subalgebra cder(CircleKind kind) {
  return derived_subalgebra(centralizer({circle_action(kind, Gauss::i())}, sp4()));
}

Subalgebra lie_h() {
  Mat prod = circle_action(CircleKind::hG, Gauss::i()) * circle_action(CircleKind::hW, Gauss::i());
  return centralizer({prod}, sp4());
}

Tower gx_default_x() { return Tower(Rational(2)) * Tower::sqrt3().inv(); }

bool expect(json& details, const std::string& what, bool ok) {
  if (!ok) details["failed"].push_back(what);
  return ok;
}

// ---------------------------------------------------------------- rings --

bool check_field_axioms(uint64_t seed, json& details) {
  Sampler rng(seed);
  bool ok = true;
  for (int k = 0; k < 1000; ++k) {
    Tower a = rng.tower(), b = rng.tower(), c = rng.tower();
    ok = ok && (a + b) + c == a + (b + c) && (a * b) * c == a * (b * c) &&
         a * (b + c) == a * b + a * c && a * b == b * a;
    if (!a.is_zero()) ok = ok && a * a.inv() == Tower(Rational(1));
    Gauss g = rng.gauss(), h = rng.gauss();
    ok = ok && (g + h) * (g - h) == g * g - h * h;
    if (!g.is_zero()) ok = ok && g * g.inv() == Gauss(Rational(1));
    if (!ok) break;
  }
  details["samples"] = 1000;
  return expect(details, "field axioms on random samples", ok);
}

bool check_conj_normsq(uint64_t seed, json& details) {
  Sampler rng(seed + 1);
  bool ok = true;
  for (int k = 0; k < 1000 && ok; ++k) {
    Tower z = rng.tower(), w = rng.tower();
    ok = z.conj().conj() == z && (z * w).conj() == z.conj() * w.conj() &&
         (z * w).normsq() == z.normsq() * w.normsq() && z.normsq().is_real();
  }
  details["samples"] = 1000;
  return expect(details, "conj involution and normsq multiplicativity", ok);
}

bool check_tower_norm(uint64_t, json& details) {
  Tower x = gx_default_x();
  details["x"] = scalar_to_json(Scalar(x));
  details["normsq"] = scalar_to_json(Scalar(x.normsq()));
  bool ok = expect(details, "|2/sqrt(3)|^2 = 4/3", x.normsq() == Tower(Rational(4, 3)));
  Tower s_third = Tower::sqrt3() * Tower(Rational(1, 3));
  ok = expect(details, "inv(s/3) = s", s_third.inv() == Tower::sqrt3()) && ok;
  ok = expect(details, "normsq(2+i) = 5",
              Gauss(Rational(2), Rational(1)).normsq() == Rational(5)) && ok;
  return ok;
}

bool check_poly_substitution(uint64_t, json& details) {
  Tower x0 = gx_default_x();
  Tower y0 = Tower::i() * x0;
  std::map<Var, Tower> env{{Var::x, x0}, {Var::xbar, x0.conj()}, {Var::y, y0}, {Var::ybar, y0.conj()}};
  Poly norm = Poly::var(Var::x) * Poly::var(Var::xbar) - Poly(Rational(4, 3));
  Poly skew = Poly::var(Var::xbar) * Poly::var(Var::y) - Poly::var(Var::x) * Poly::var(Var::ybar);
  Tower skew_val = skew.substitute(env);
  details["skew_value"] = scalar_to_json(Scalar(skew_val));
  bool ok = expect(details, "x xbar - 4/3 vanishes", norm.substitute(env).is_zero());
  ok = expect(details, "xbar y - x ybar = (8/3) i",
              skew_val == Tower(Rational(0), Rational(8, 3), Rational(0), Rational(0))) && ok;
  return ok;
}

bool check_gauss_tower_embedding(uint64_t seed, json& details) {
  Sampler rng(seed + 2);
  bool ok = true;
  for (int k = 0; k < 1000 && ok; ++k) {
    Gauss g = rng.gauss(), h = rng.gauss();
    ok = Tower(g) * Tower(h) == Tower(g * h) && Tower(g) + Tower(h) == Tower(g + h);
  }
  details["samples"] = 1000;
  return expect(details, "tower arithmetic restricts to Gauss arithmetic", ok);
}

// ------------------------------------------------------------- matrices --

bool check_bracket_n1n2(uint64_t, json& details) {
  Mat n1(4, 4), n2(4, 4);
  n1 = n1.with_entry(1, 2, Scalar(1)).with_entry(2, 1, Scalar(1));
  n2 = n2.with_entry(1, 2, gi(0, 1)).with_entry(2, 1, gi(0, -1));
  Mat got = commutator(n1, n2);
  Mat want = Mat::diagonal({gi(0, 0), gi(0, -2), gi(0, 2), gi(0, 0)});
  details["bracket"] = mat_to_json(got);
  return expect(details, "[N1, N2] = diag(0, -2i, 2i, 0)", got == want);
}

bool check_jacobi(uint64_t seed, json& details) {
  Sampler rng(seed + 3);
  bool ok = true;
  for (int k = 0; k < 1000 && ok; ++k) {
    Mat a = rng.rational_matrix(4, 3, 2), b = rng.rational_matrix(4, 3, 2),
        c = rng.rational_matrix(4, 3, 2);
    ok = (commutator(a, commutator(b, c)) + commutator(b, commutator(c, a)) +
          commutator(c, commutator(a, b)))
             .is_zero();
  }
  details["samples"] = 1000;
  return expect(details, "Jacobi identity", ok);
}

bool check_kron_mixed(uint64_t seed, json& details) {
  Sampler rng(seed + 4);
  bool ok = true;
  for (int k = 0; k < 1000 && ok; ++k) {
    Mat a = rng.rational_matrix(2), b = rng.rational_matrix(2);
    Mat c = rng.rational_matrix(2), d = rng.rational_matrix(2);
    ok = kron(a, b) * kron(c, d) == kron(a * c, b * d);
  }
  details["samples"] = 1000;
  return expect(details, "kron mixed-product identity", ok);
}

bool check_kernel_rank(uint64_t seed, json& details) {
  Sampler rng(seed + 5);
  bool ok = kernel_basis(Mat::identity(4)).empty() && kernel_basis(Mat(2, 2)).size() == 2;
  for (int k = 0; k < 300 && ok; ++k) {
    Mat m = rng.rational_matrix(4);
    auto basis = kernel_basis(m);
    ok = int(basis.size()) + rank(m) == m.cols();
    for (const auto& v : basis) ok = ok && (m * v).is_zero();
  }
  details["samples"] = 300;
  return expect(details, "exact kernels: A v = 0 and rank-nullity", ok);
}

bool check_logexp(uint64_t seed, json& details) {
  Sampler rng(seed + 6);
  bool ok = true;
  for (int k = 0; k < 1000 && ok; ++k) {
    Mat m = rng.unipotent_upper(4);
    ok = nilpotent_exp(unipotent_log(m)) == m;
  }
  Mat rho = legendre_monodromy();
  ok = ok && unipotent_log(rho) == Mat{{Scalar(0), Scalar(2)}, {Scalar(0), Scalar(0)}};
  details["samples"] = 1000;
  return expect(details, "log/exp round trip on unipotent samples", ok);
}

bool check_monodromy_rank_profile(uint64_t, json& details) {
  Mat n = borcea_nilpotent(Rational(1), Rational(1), Rational(1));
  std::vector<int> ranks{rank(n), rank(n * n), rank(n * n * n)};
  details["rank_sequence"] = ranks;
  auto profile = nilpotent_profile(n);
  details["profile"] = profile;
  bool ok = expect(details, "rank sequence (5, 2, 1)", ranks == std::vector<int>{5, 2, 1});
  ok = expect(details, "Jordan profile [4, 2, 2]", profile == std::vector<int>{4, 2, 2}) && ok;
  return ok;
}

// ---------------------------------------------------------------- frame --

bool check_q_matrix(uint64_t, json& details) {
  BasisOrdering ord({Label::v30, Label::v12, Label::v21, Label::v03});
  Mat q = q_matrix(ord);
  Mat want(4, 4, Ring::Gauss);
  want = want.with_entry(0, 3, gi(0, -1)).with_entry(1, 2, gi(0, -1));
  want = want.with_entry(2, 1, gi(0, 1)).with_entry(3, 0, gi(0, 1));
  details["q"] = mat_to_json(q);
  bool ok = expect(details, "antidiagonal (-i, -i, i, i)", q == want);
  ok = expect(details, "det Q = 1", det(q) == Scalar(1)) && ok;
  for (const auto& o2 : {BasisOrdering::canonical(), ord,
                         BasisOrdering({Label::v30, Label::v03, Label::v21, Label::v12})}) {
    ok = expect(details, "reorder round trip",
                reorder_form(reorder_form(q, ord, o2), o2, ord) == q) && ok;
  }
  return ok;
}

bool check_circle_actions(uint64_t seed, json& details) {
  Sampler rng(seed + 7);
  bool ok = true;
  for (int k = 0; k < 1000 && ok; ++k) {
    Gauss z = rng.circle_point();
    Mat hx = circle_action(CircleKind::hX, z);
    Mat hw = circle_action(CircleKind::hW, z);
    Mat hg = circle_action(CircleKind::hG, z);
    ok = hg * hg * hw == hx && in_sp(hx, frame(), SpLevel::group) &&
         in_sp(hw, frame(), SpLevel::group) && in_sp(hg, frame(), SpLevel::group);
  }
  ok = ok && circle_action(CircleKind::hX, Gauss(Rational(-1))) == -Mat::identity(4);
  details["samples"] = 1000;
  return expect(details, "h = h_G^2 h_W on the rational circle, inside Sp, real", ok);
}

bool check_complex_structures(uint64_t, json& details) {
  Mat hw = circle_action(CircleKind::hW, Gauss::i());
  Mat hg = circle_action(CircleKind::hG, Gauss::i());
  bool ok = expect(details, "h_W(i) = diag(i, -i, i, -i)",
                   hw == Mat::diagonal({gi(0, 1), gi(0, -1), gi(0, 1), gi(0, -1)}));
  ok = expect(details, "h_G(i) = diag(i, i, -i, -i)",
              hg == Mat::diagonal({gi(0, 1), gi(0, 1), gi(0, -1), gi(0, -1)})) && ok;
  ok = expect(details, "h_W(i) = -h_X(i)", hw == -circle_action(CircleKind::hX, Gauss::i())) && ok;
  ok = expect(details, "J^2 = -1", complex_structure_check(hw, frame()) &&
                                       complex_structure_check(hg, frame())) && ok;
  return ok;
}

bool check_hermitian_signatures(uint64_t, json& details) {
  auto f2 = hermitian_signature(frame(), {Label::v30, Label::v21});
  auto weil = hermitian_signature(frame(), {Label::v30, Label::v12});
  details["griffiths"] = {f2.first, f2.second};
  details["weil"] = {weil.first, weil.second};
  bool ok = expect(details, "F^2 pairing is indefinite (1,1)", f2 == std::pair<int, int>(1, 1));
  ok = expect(details, "Weil pairing is definite",
              weil.first + weil.second == 2 && weil.first * weil.second == 0) && ok;
  return ok;
}

bool check_cartan_positivity(uint64_t, json& details) {
  std::string diag;
  bool ok = expect(details, "Q(h_W(i) ., .) > 0",
                   positive_form_check(circle_action(CircleKind::hW, Gauss::i()), frame()));
  ok = expect(details, "Q(h_G(i) ., .) not positive",
              !positive_form_check(circle_action(CircleKind::hG, Gauss::i()), frame(), &diag)) && ok;
  details["hg_diagnostic"] = diag;
  ok = expect(details, "-h_W(i) fails",
              !positive_form_check(-circle_action(CircleKind::hW, Gauss::i()), frame())) && ok;
  return ok;
}

bool check_komzen_product(uint64_t, json& details) {
  Poly z = Poly::var(Var::x), zb = Poly::var(Var::xbar);
  Poly y = Poly::var(Var::y), yb = Poly::var(Var::ybar);
  Poly zero, ii = Poly(Gauss::i());
  Mat m{{Scalar(z), Scalar(zero), Scalar(yb), Scalar(zero)},
        {Scalar(zero), Scalar(z), Scalar(zero), Scalar(-yb)},
        {Scalar(-y), Scalar(zero), Scalar(zb), Scalar(zero)},
        {Scalar(zero), Scalar(y), Scalar(zero), Scalar(zb)}};
  BasisOrdering ord({Label::v30, Label::v12, Label::v21, Label::v03});
  Mat prod = m.transpose() * q_matrix(ord).promote(Ring::Poly) * m;
  Poly nd = ii * y * yb - ii * z * zb;
  Poly tiyz = Poly(2) * ii * y * z;
  Mat want{{Scalar(zero), Scalar(-tiyz), Scalar(zero), Scalar(nd)},
           {Scalar(tiyz), Scalar(zero), Scalar(nd), Scalar(zero)},
           {Scalar(zero), Scalar(-nd), Scalar(zero), Scalar(-Poly(2) * ii * yb * zb)},
           {Scalar(-nd), Scalar(zero), Scalar(Poly(2) * ii * yb * zb), Scalar(zero)}};
  bool ok = expect(details, "M^t Q M equals the displayed matrix", prod == want);
  // hence symplectic iff y = 0 and |z| = 1
  HodgeFrame f = HodgeFrame::with_ordering(ord);
  Mat m_bad(4, 4);
  m_bad = m_bad.with_entry(0, 0, Scalar(1)).with_entry(1, 1, Scalar(1));
  m_bad = m_bad.with_entry(2, 2, Scalar(1)).with_entry(3, 3, Scalar(1));
  m_bad = m_bad.with_entry(0, 2, Scalar(1)).with_entry(1, 3, Scalar(-1));
  m_bad = m_bad.with_entry(2, 0, Scalar(-1)).with_entry(3, 1, Scalar(1));
  ok = expect(details, "y = 1, z = 1 is not symplectic", !in_sp(m_bad, f, SpLevel::group)) && ok;
  Mat m_good = Mat::diagonal({gi(0, 1), gi(0, 1), gi(0, -1), gi(0, -1)});
  ok = expect(details, "y = 0, z = i is symplectic", in_sp(m_good, f, SpLevel::group)) && ok;
  return ok;
}

// ------------------------------------------------------------------ lie --

bool check_sp_dimension(uint64_t, json& details) {
  details["dim"] = sp4().dim();
  bool ok = expect(details, "dim sp(4) = 10", sp4().dim() == 10);
  ok = expect(details, "sp closes under brackets", closure_check(sp4())) && ok;
  ok = expect(details, "h_X generator lies in sp", sp4().contains(hx_generator())) && ok;
  return ok;
}

bool check_hx_centralizer(uint64_t, json& details) {
  Subalgebra c = centralizer({hx_generator()}, sp4());
  details["frame"] = frame_to_json(frame());
  details["dim"] = c.dim();
  bool ok = expect(details, "centralizer of the circle is 2-dimensional", c.dim() == 2);
  for (const auto& b : c.basis())
    ok = expect(details, "centralizer elements are diagonal", b.is_diagonal()) && ok;
  auto structures = torus_complex_structures(c);
  details["complex_structures"] = json::array();
  for (const auto& s : structures) details["complex_structures"].push_back(mat_to_json(s));
  ok = expect(details, "exactly 4 complex structures", structures.size() == 4) && ok;
  Mat hw = circle_action(CircleKind::hW, Gauss::i());
  Mat hg = circle_action(CircleKind::hG, Gauss::i());
  for (const Mat& want : {hw, -hw, hg, -hg}) {
    bool found = false;
    for (const auto& s : structures) found = found || s == want;
    ok = expect(details, "contains +-h_W(i), +-h_G(i)", found) && ok;
  }
  return ok;
}

bool check_character_decomposition(uint64_t, json& details) {
  auto pieces = character_decomposition(hx_generator(), sp4());
  json dims = json::object();
  int total = 0;
  for (const auto& [k, mats] : pieces) {
    dims[std::to_string(k)] = mats.size();
    total += int(mats.size());
  }
  details["dims"] = dims;
  std::map<int, size_t> want{{0, 2}, {1, 2}, {-1, 2}, {2, 1}, {-2, 1}, {3, 1}, {-3, 1}};
  bool ok = expect(details, "dimension pattern {0:2, +-1:2, +-2:1, +-3:1}", [&] {
    if (pieces.size() != want.size()) return false;
    for (const auto& [k, mats] : pieces)
      if (!want.count(k) || want.at(k) != mats.size()) return false;
    return true;
  }());
  ok = expect(details, "pieces sum to 10", total == 10) && ok;

  // grading [p_j, p_k] subset p_{j+k}
  auto in_span = [&](const std::vector<Mat>& span, const Mat& m) {
    if (m.is_zero()) return true;
    Mat a(16, int(span.size()), Ring::Gauss);
    for (int c = 0; c < int(span.size()); ++c) {
      Mat v = chart_vec(span[c], frame());
      for (int r = 0; r < 16; ++r) a = a.with_entry(r, c, v.at(r, 0));
    }
    return solve(a, chart_vec(m, frame()).promote(Ring::Gauss)).has_value();
  };
  bool graded = true;
  for (const auto& [k1, m1s] : pieces)
    for (const auto& [k2, m2s] : pieces)
      for (const auto& m1 : m1s)
        for (const auto& m2 : m2s) {
          Mat br = commutator(m1, m2);
          auto it = pieces.find(k1 + k2);
          graded = graded && (it == pieces.end() ? br.is_zero() : in_span(it->second, br));
        }
  ok = expect(details, "bracket grading [p_j, p_k] in p_{j+k}", graded) && ok;
  return ok;
}

bool check_komzen_centralizer(uint64_t, json& details) {
  Subalgebra z = centralizer(cder(CircleKind::hW).basis(), sp4());
  details["dim"] = z.dim();
  bool ok = expect(details, "centralizer of su(2) is 1-dimensional", z.dim() == 1);
  Mat hw_gen = Mat::diagonal({gi(0, 1), gi(0, -1), gi(0, 1), gi(0, -1)});
  ok = expect(details, "spanned by the h_W circle generator", z.contains(hw_gen)) && ok;
  return ok;
}

bool check_prop2b_centralizer(uint64_t, json& details) {
  Subalgebra z = centralizer(cder(CircleKind::hG).basis(), lie_h());
  details["dim"] = z.dim();
  bool ok = expect(details, "1-dimensional", z.dim() == 1);
  Mat b = z.basis()[0];
  details["generator"] = mat_to_json(b);
  ok = expect(details, "diagonal", b.is_diagonal()) && ok;
  // diag(xi, xibar, xi, xibar) on {v30, v03, v21, v12}, i.e. the h_G line
  ok = expect(details, "of the form diag(xi, xi, conj xi, conj xi)",
              b.at(0, 0) == b.at(1, 1) && b.at(2, 2) == b.at(3, 3) &&
                  b.at(2, 2) == conj(b.at(0, 0))) && ok;
  return ok;
}

bool check_killing_signatures(uint64_t, json& details) {
  KillingData su2 = killing(cder(CircleKind::hW));
  KillingData su11 = killing(cder(CircleKind::hG));
  KillingData torus = killing(centralizer({hx_generator()}, sp4()));
  details["su2"] = {su2.pos, su2.neg, su2.zero};
  details["su11"] = {su11.pos, su11.neg, su11.zero};
  details["torus"] = {torus.pos, torus.neg, torus.zero};
  bool ok = expect(details, "C^der(h_W(i)) Killing signature (0,3,0)",
                   std::tuple(su2.pos, su2.neg, su2.zero) == std::tuple(0, 3, 0));
  ok = expect(details, "C^der(h_G(i)) Killing signature (2,1,0)",
              std::tuple(su11.pos, su11.neg, su11.zero) == std::tuple(2, 1, 0)) && ok;
  ok = expect(details, "torus Killing form vanishes",
              std::tuple(torus.pos, torus.neg, torus.zero) == std::tuple(0, 0, 2)) && ok;
  return ok;
}

bool check_h_ideal_split(uint64_t, json& details) {
  Subalgebra h = lie_h();
  details["dim"] = h.dim();
  bool ok = expect(details, "dim Lie(H) = 6", h.dim() == 6);
  Subalgebra p1 = subalgebra_supported_on(h, {Label::v30, Label::v03});
  Subalgebra p2 = subalgebra_supported_on(h, {Label::v21, Label::v12});
  ok = expect(details, "two 3-dimensional blocks", p1.dim() == 3 && p2.dim() == 3) && ok;
  ok = expect(details, "commuting ideal split", verify_ideal_split(h, p1, p2)) && ok;
  ok = expect(details, "split is symmetric", verify_ideal_split(h, p2, p1)) && ok;
  KillingData k1 = killing(p1), k2 = killing(p2);
  ok = expect(details, "each factor has signature (2,1,0)",
              std::tuple(k1.pos, k1.neg, k1.zero) == std::tuple(2, 1, 0) &&
                  std::tuple(k2.pos, k2.neg, k2.zero) == std::tuple(2, 1, 0)) && ok;
  return ok;
}

// ------------------------------------------------------------------- gx --

bool check_gx_constraints(uint64_t, json& details) {
  ConstraintSet cs = derive_constraints();
  details["constraints"] = json::array();
  for (const auto& p : cs.polys) details["constraints"].push_back(poly_to_json(p));
  Poly y_minus_ix = Poly::var(Var::y) - Poly(Gauss::i()) * Poly::var(Var::x);
  Poly norm = Poly::var(Var::x) * Poly::var(Var::xbar) - Poly(Rational(4, 3));
  bool ok = expect(details, "two constraints", cs.polys.size() == 2);
  ok = expect(details, "y - ix up to a unit", cs.polys[0].equal_up_to_unit(y_minus_ix)) && ok;
  ok = expect(details, "x xbar - 4/3 up to a unit", cs.polys[1].equal_up_to_unit(norm)) && ok;
  GxGenerators g = gx_symbolic(false);
  Mat br = commutator(g.v, g.u);
  ok = expect(details, "bracket entry (1,3) is ix - y",
              br.at(0, 2).as_poly() ==
                  Poly(Gauss::i()) * Poly::var(Var::x) - Poly::var(Var::y)) && ok;
  return ok;
}

bool check_gx_instantiate(uint64_t, json& details) {
  Subalgebra g = gx_instantiate(gx_default_x(), frame());
  details["subalgebra"] = subalgebra_to_json(g);
  bool ok = expect(details, "3-dimensional", g.dim() == 3);
  ok = expect(details, "closes under brackets", closure_check(g)) && ok;
  ok = expect(details, "contains the h_X generator", g.contains(hx_generator())) && ok;
  KillingData kd = killing(g);
  details["killing"] = {kd.pos, kd.neg, kd.zero};
  ok = expect(details, "Killing signature (2,1,0)",
              std::tuple(kd.pos, kd.neg, kd.zero) == std::tuple(2, 1, 0)) && ok;
  const Mat &t = g.basis()[0], &u = g.basis()[1], &v = g.basis()[2];
  ok = expect(details, "[v,t] = 2u", commutator(v, t) == Scalar(2) * u) && ok;
  ok = expect(details, "[t,u] = 2v", commutator(t, u) == Scalar(2) * v) && ok;
  ok = expect(details, "[v,u] = (2/3) t", commutator(v, u) == Scalar(Rational(2, 3)) * t) && ok;
  bool threw = false;
  try {
    gx_instantiate(Tower(Rational(1)), frame());
  } catch (const Error& e) {
    threw = e.kind() == ErrorKind::ConstraintViolated;
  }
  ok = expect(details, "|x| = 1 is rejected", threw) && ok;
  return ok;
}

bool check_gx_circle_family(uint64_t seed, json& details) {
  Sampler rng(seed + 8);
  bool ok = true;
  int count = 8;
  for (int k = 0; k < count && ok; ++k) {
    Rational t = rng.rational(5, 3);
    Rational den = Rational(1) + t * t;
    Gauss unit((Rational(1) - t * t) / den, (Rational(2) * t) / den);
    Tower xv = gx_default_x() * Tower(unit);
    Subalgebra g = gx_instantiate(xv, frame());
    KillingData kd = killing(g);
    ok = g.dim() == 3 && closure_check(g) && g.contains(hx_generator()) &&
         std::tuple(kd.pos, kd.neg, kd.zero) == std::tuple(2, 1, 0);
  }
  details["samples"] = count;
  return expect(details, "instantiation along the rational circle of x values", ok);
}

bool check_gx_no_square_zero(uint64_t, json& details) {
  Subalgebra g = gx_instantiate(gx_default_x(), frame());
  bool ok = expect(details, "square-zero case analysis certificate", nilpotent_square_check(g));
  // a concrete nilpotent: a = 1, b = sqrt 3, c = 0 kills the Killing norm
  Mat n = g.basis()[0] + Scalar(Tower::sqrt3()) * g.basis()[1];
  auto profile = nilpotent_profile(n);
  details["sample_nilpotent_profile"] = profile;
  ok = expect(details, "sampled nilpotent has a Jordan block of length >= 3",
              !profile.empty() && profile[0] >= 3) && ok;
  return ok;
}

// --------------------------------------------------------------- borcea --

bool check_legendre(uint64_t, json& details) {
  Mat a = legendre_monodromy();
  details["matrix"] = mat_to_json(a);
  bool ok = expect(details, "rho(gamma) = [[1,2],[0,1]]",
                   a == Mat{{Scalar(1), Scalar(2)}, {Scalar(0), Scalar(1)}});
  ok = expect(details, "(M - 1)^2 = 0",
              ((a - Mat::identity(2)) * (a - Mat::identity(2))).is_zero()) && ok;
  ok = expect(details, "log = [[0,2],[0,0]]",
              unipotent_log(a) == Mat{{Scalar(0), Scalar(2)}, {Scalar(0), Scalar(0)}}) && ok;
  ok = expect(details, "det = 1", det(a) == Scalar(1)) && ok;
  return ok;
}

bool check_nrst_display(uint64_t, json& details) {
  Mat got = borcea_nilpotent_symbolic();
  Mat want(8, 8, Ring::Poly);
  auto put = [&](int i, int j, Var v) {
    want = want.with_entry(i - 1, j - 1, Scalar(Poly(2) * Poly::var(v)));
  };
  put(1, 2, Var::t), put(1, 3, Var::s), put(1, 5, Var::r);
  put(2, 4, Var::s), put(2, 6, Var::r);
  put(3, 4, Var::t), put(3, 7, Var::r);
  put(4, 8, Var::r);
  put(5, 6, Var::t), put(5, 7, Var::s);
  put(6, 8, Var::s), put(7, 8, Var::t);
  details["matrix"] = mat_to_json(got);
  bool ok = expect(details, "symbolic N_{r,s,t} equals the displayed 8x8 matrix", got == want);
  Mat n100 = borcea_nilpotent(Rational(1), Rational(0), Rational(0));
  int nonzero = 0;
  for (const auto& e : n100.entries()) nonzero += e.is_zero() ? 0 : 1;
  ok = expect(details, "N_{1,0,0} has four entries 2 at (1,5),(2,6),(3,7),(4,8)",
              nonzero == 4 && n100.at(0, 4) == Scalar(2) && n100.at(1, 5) == Scalar(2) &&
                  n100.at(2, 6) == Scalar(2) && n100.at(3, 7) == Scalar(2)) && ok;
  return ok;
}

bool check_max_unipotent(uint64_t, json& details) {
  Mat n111 = borcea_nilpotent(Rational(1), Rational(1), Rational(1));
  Mat cube = n111 * n111 * n111;
  details["n3_corner"] = scalar_to_json(cube.at(0, 7));
  bool ok = expect(details, "N_{1,1,1}^3 != 0 and N^4 = 0", max_unipotent_check(n111));
  ok = expect(details, "corner entry of N^3 is 48", cube.at(0, 7) == Scalar(48)) && ok;
  Mat n100 = borcea_nilpotent(Rational(1), Rational(0), Rational(0));
  ok = expect(details, "N_{1,0,0} is not maximally unipotent", !max_unipotent_check(n100)) && ok;
  return ok;
}

// ----------------------------------------------------------------- sym3 --

bool check_sym3_matrix(uint64_t, json& details) {
  Mat sym{{Scalar(Poly::var(Var::a)), Scalar(Poly::var(Var::b))},
          {Scalar(Poly::var(Var::c)), Scalar(Poly::var(Var::d))}};
  bool ok = expect(details, "symbolic restriction equals the cubic-entry matrix",
                   sym3_restriction_check(sym));
  Mat rho{{Scalar(1), Scalar(2)}, {Scalar(0), Scalar(1)}};
  Mat want{{Scalar(1), Scalar(6), Scalar(12), Scalar(8)},
           {Scalar(0), Scalar(1), Scalar(4), Scalar(4)},
           {Scalar(0), Scalar(0), Scalar(1), Scalar(2)},
           {Scalar(0), Scalar(0), Scalar(0), Scalar(1)}};
  ok = expect(details, "value at the monodromy generator", sym3_matrix(rho) == want) && ok;
  ok = expect(details, "identity maps to identity",
              sym3_matrix(Mat::identity(2)) == Mat::identity(4)) && ok;
  return ok;
}

bool check_sym3_homomorphism(uint64_t seed, json& details) {
  Mat a{{Scalar(Poly::var(Var::a)), Scalar(Poly::var(Var::b))},
        {Scalar(Poly::var(Var::c)), Scalar(Poly::var(Var::d))}};
  Mat b{{Scalar(Poly::var(Var::e)), Scalar(Poly::var(Var::f))},
        {Scalar(Poly::var(Var::g)), Scalar(Poly::var(Var::h))}};
  bool ok = expect(details, "symbolic homomorphism identity in 8 indeterminates",
                   sym3_hom_check(a, b));
  Sampler rng(seed + 9);
  bool samples_ok = true;
  for (int k = 0; k < 100 && samples_ok; ++k)
    samples_ok = sym3_hom_check(rng.sl2_rational(), rng.sl2_rational());
  details["samples"] = 100;
  ok = expect(details, "100 random SL2 pairs", samples_ok) && ok;
  return ok;
}

bool check_sym3_restriction(uint64_t seed, json& details) {
  Sampler rng(seed + 10);
  bool ok = true;
  for (int k = 0; k < 100 && ok; ++k) ok = sym3_restriction_check(rng.rational_matrix(2));
  details["samples"] = 100;
  return expect(details, "Kronecker cube preserves Sym^3 and induces r(M)", ok);
}

bool check_sym3_identities(uint64_t, json& details) {
  Sym3Identities res = sym3_polynomial_identities();
  details["identities"] = json::array();
  for (const auto& [name, holds] : res.identities)
    details["identities"].push_back(json{{"name", name}, {"holds", holds}});
  return expect(details, "all five symbolic identities", res.all_hold);
}

bool check_sym3_circle(uint64_t seed, json& details) {
  Sampler rng(seed + 11);
  bool ok = true;
  for (int k = 0; k < 100 && ok; ++k) {
    Gauss z = rng.circle_point();
    Mat rot{{Scalar(z.re()), Scalar(z.im())}, {Scalar(-z.im()), Scalar(z.re())}};
    Gauss w = rng.circle_point();
    Mat rot2{{Scalar(w.re()), Scalar(w.im())}, {Scalar(-w.im()), Scalar(w.re())}};
    ok = det(sym3_matrix(rot)) == Scalar(1) && sym3_hom_check(rot, rot2) &&
         sym3_restriction_check(rot);
  }
  details["samples"] = 100;
  return expect(details, "rational rotations push to volume-preserving Sym^3 action", ok);
}

}  // namespace

const std::vector<CheckDef>& check_registry() {
  static const std::vector<CheckDef> registry = [] {
    std::vector<CheckDef> r{
        {"rings.field_axioms", "exact coefficient fields Q, Q(i), Q(i,sqrt 3)", check_field_axioms},
        {"rings.conj_normsq", "reality structure w -> w + conj w; |.|^2 multiplicative",
         check_conj_normsq},
        {"rings.tower_norm", "the exotic classification case: |x| = 2/sqrt(3), so x xbar = 4/3", check_tower_norm},
        {"rings.poly_substitution", "closure relations: xbar y - x ybar = (8/3) i",
         check_poly_substitution},
        {"rings.gauss_tower_embedding", "Q(i) embeds in Q(i, sqrt 3)", check_gauss_tower_embedding},
        {"mat.bracket_n1n2", "[N_1, N_2] = diag(0, -2i, 2i, 0)", check_bracket_n1n2},
        {"mat.jacobi", "Lie bracket Jacobi identity", check_jacobi},
        {"mat.kron_mixed_product", "Kr^3(M) = M x M x M respects products", check_kron_mixed},
        {"mat.kernel_rank", "exact nullspaces behind centralizer and eigenspace solves",
         check_kernel_rank},
        {"mat.logexp_roundtrip", "log M_1 = M_1 - E_2 for unipotents; exp inverts log",
         check_logexp},
        {"mat.monodromy_rank_profile", "rank sequence and Jordan profile of N_{1,1,1}",
         check_monodromy_rank_profile},
        {"frame.q_matrix", "cup-product form: Q(i v30, v03) = Q(-i v21, v12) = 1", check_q_matrix},
        {"frame.circle_actions", "h(z) = h_G^2(z) h_W(z); actions are real symplectic",
         check_circle_actions},
        {"frame.complex_structures", "C(h(S^1)) complex structures +-h_W(i), +-h_G(i)",
         check_complex_structures},
        {"frame.hermitian_signatures", "C(h_G(i)) = U(1,1), C(h_W(i)) = U(2) via H = iQ(., conj .)",
         check_hermitian_signatures},
        {"frame.cartan_positivity", "Q(h_W(i) ., .) > 0; h_G(i) gives no Cartan involution",
         check_cartan_positivity},
        {"frame.komzen_product", "M^t Q M forces y = 0 and |z| = 1", check_komzen_product},
        {"lie.sp_dimension", "10 = dim Sp(H^3(X,R), Q)", check_sp_dimension},
        {"lie.hx_centralizer_torus", "C(h(S^1)) = S^1 x S^1 of diagonal matrices",
         check_hx_centralizer},
        {"lie.character_decomposition", "sp(4) characters (z/zbar)^k, k in {0,+-1,+-2,+-3}",
         check_character_decomposition},
        {"lie.komzen_centralizer", "centralizer of C^der(h_W(i)) is Z(C(h_W(i)))",
         check_komzen_centralizer},
        {"lie.prop2b_centralizer", "only diag(xi, xibar, xi, xibar) commutes with C^der(h_G(i)) in H",
         check_prop2b_centralizer},
        {"lie.killing_signatures", "su(2) negative definite; su(1,1) signature (2,1)",
         check_killing_signatures},
        {"lie.h_ideal_split", "H = SU(1,1) x SU(1,1) as commuting ideals", check_h_ideal_split},
        {"gx.constraints", "closure forces y = ix and 2|x|^2 = 8/3", check_gx_constraints},
        {"gx.instantiate", "span{t, u, v} closes with Killing signature (2,1)", check_gx_instantiate},
        {"gx.circle_family", "every x with |x| = 2/sqrt(3) instantiates", check_gx_circle_family},
        {"gx.no_square_zero", "m_{1,2} of M^2 is 4ai(b+ci): Jordan blocks of length >= 3",
         check_gx_no_square_zero},
        {"borcea.legendre", "unipotent monodromy rho(gamma) = [[1,2],[0,1]] around 0",
         check_legendre},
        {"borcea.nrst_display", "N_{r,s,t} = r log rho_1 + s log rho_2 + t log rho_3",
         check_nrst_display},
        {"borcea.max_unipotent", "maximally unipotent monodromy at r = s = t = 1",
         check_max_unipotent},
        {"sym3.matrix", "r(M) acts on Sym^3 by the displayed cubic matrix", check_sym3_matrix},
        {"sym3.homomorphism", "r respects matrix multiplication", check_sym3_homomorphism},
        {"sym3.restriction", "Kr^3(M)(Sym^3) = Sym^3 with induced action r(M)",
         check_sym3_restriction},
        {"sym3.identities", "det r(M) = det^6(M); m_22^3 = (a(ad+2bc))^3 and analogues",
         check_sym3_identities},
        {"sym3.circle_compatibility", "h' = r o h_lambda stays in the symplectic circle",
         check_sym3_circle},
    };
    std::sort(r.begin(), r.end(), [](const CheckDef& a, const CheckDef& b) { return a.id < b.id; });
    return r;
  }();
  return registry;
}

std::vector<CheckResult> run_checks(const std::string& selector, uint64_t seed) {
  std::vector<const CheckDef*> selected;
  for (const auto& def : check_registry())
    if (selector == "all" || def.id.rfind(selector, 0) == 0) selected.push_back(&def);
  if (selected.empty())
    throw Error(ErrorKind::UnknownSelector, "no registered check matches '" + selector + "'");

  std::vector<CheckResult> results;
  for (const CheckDef* def : selected) {
    CheckResult res;
    res.id = def->id;
    res.citation = def->citation;
    res.details = json::object();
    auto start = std::chrono::steady_clock::now();
    try {
      bool ok = def->run(seed, res.details);
      res.status = ok ? "pass" : "fail";
    } catch (const std::exception& e) {
      res.status = "error";
      res.details["exception"] = e.what();
    }
    auto stop = std::chrono::steady_clock::now();
    res.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
    results.push_back(std::move(res));
  }
  return results;
}

json report_to_json(const std::vector<CheckResult>& results, uint64_t seed) {
  json out;
  out["seed"] = seed;
  out["results"] = json::array();
  int pass = 0, fail = 0, error = 0;
  for (const auto& r : results) {
    out["results"].push_back(json{{"id", r.id},
                                  {"status", r.status},
                                  {"paper_citation", r.citation},
                                  {"details", r.details},
                                  {"elapsed_ms", r.elapsed_ms}});
    (r.status == "pass" ? pass : (r.status == "fail" ? fail : error))++;
  }
  out["summary"] = json{{"pass", pass}, {"fail", fail}, {"error", error}};
  return out;
}

std::string report_to_text(const std::vector<CheckResult>& results) {
  std::string out;
  for (const auto& r : results) {
    std::string line = (r.status == "pass" ? "PASS" : (r.status == "fail" ? "FAIL" : "ERROR"));
    line += "  " + r.id;
    line.append(line.size() < 42 ? 42 - line.size() : 1, ' ');
    line += r.citation + "\n";
    out += line;
  }
  int pass = 0;
  for (const auto& r : results) pass += r.status == "pass";
  out += std::to_string(pass) + "/" + std::to_string(results.size()) + " checks passed\n";
  return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (r.status != "pass") return false;
  return true;
}

}  // namespace cylie
