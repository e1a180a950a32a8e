#include "cylie/gx_family.hpp"

namespace cylie {

namespace {
Scalar P(const Poly& p) { return Scalar(p); }
Poly pv(Var v) { return Poly::var(v); }
Poly pi() { return Poly(Gauss::i()); }
}  // namespace

GxGenerators gx_symbolic(bool substitute_y) {
  Mat t = Mat::diagonal({Scalar(Gauss(Rational(0), Rational(3))), Scalar(Gauss::i()),
                         Scalar(-Gauss::i()), Scalar(Gauss(Rational(0), Rational(-3)))});
  Poly zero;
  Mat u{{P(zero), P(Poly(1)), P(zero), P(zero)},
        {P(Poly(1)), P(zero), P(pv(Var::x)), P(zero)},
        {P(zero), P(pv(Var::xbar)), P(zero), P(Poly(1))},
        {P(zero), P(zero), P(Poly(1)), P(zero)}};
  Poly y = substitute_y ? pi() * pv(Var::x) : pv(Var::y);
  Poly ybar = y.conj();
  Mat v{{P(zero), P(pi()), P(zero), P(zero)},
        {P(-pi()), P(zero), P(y), P(zero)},
        {P(zero), P(ybar), P(zero), P(pi())},
        {P(zero), P(zero), P(-pi()), P(zero)}};
  return GxGenerators{std::move(t), std::move(u), std::move(v)};
}

ConstraintSet derive_constraints() {
  GxGenerators g = gx_symbolic(false);
  Mat br = commutator(g.v, g.u);

  // [v, u] must land in span{t}, the only diagonal direction. Its (1,3)
  // entry is ix - y; the other off-pattern entries are forced along by
  // reality.
  Poly off = br.at(0, 2).as_poly();
  Poly y_minus_ix = pv(Var::y) - pi() * pv(Var::x);
  if (!off.equal_up_to_unit(y_minus_ix))
    throw Error(ErrorKind::ConstraintViolated, "unexpected off-diagonal bracket entry");

  // Diagonal consistency: [v,u] = lambda t needs lambda = (1,1)-ratio 2/3,
  // and the (2,2) residue is xbar y - x ybar - (8/3) i.
  Poly lambda = Poly(Rational(2, 3));
  Poly residue = br.at(1, 1).as_poly() - lambda * g.t.at(1, 1).promote(Ring::Poly).as_poly();

  // After y = ix the residue becomes 2i (x xbar - 4/3).
  std::map<Var, Poly> sub{{Var::y, pi() * pv(Var::x)}, {Var::ybar, -pi() * pv(Var::xbar)}};
  Poly norm_constraint = residue.substitute_poly(sub) * Poly(Gauss(Rational(0), Rational(-1, 2)));

  Poly norm_expected = pv(Var::x) * pv(Var::xbar) - Poly(Rational(4, 3));
  if (norm_constraint != norm_expected)
    throw Error(ErrorKind::ConstraintViolated, "unexpected norm constraint");

  return ConstraintSet{{y_minus_ix, norm_constraint}};
}

Subalgebra gx_instantiate(const Tower& x_val, const HodgeFrame& frame) {
  if (x_val.normsq() != Tower(Rational(4, 3)))
    throw Error(ErrorKind::ConstraintViolated, "|x|^2 must be exactly 4/3");
  GxGenerators g = gx_symbolic(false);
  Tower y_val = Tower::i() * x_val;
  std::map<Var, Tower> env{{Var::x, x_val},
                           {Var::xbar, x_val.conj()},
                           {Var::y, y_val},
                           {Var::ybar, y_val.conj()}};
  auto instantiate_mat = [&](const Mat& m) {
    std::vector<Scalar> es;
    es.reserve(16);
    for (const auto& e : m.entries()) es.push_back(Scalar(e.as_poly().substitute(env)));
    return demote(Mat(4, 4, std::move(es)));
  };
  std::vector<Mat> basis{g.t, instantiate_mat(g.u), instantiate_mat(g.v)};
  return Subalgebra::from_basis(std::move(basis), frame);
}

bool nilpotent_square_check(const Subalgebra& g) {
  // The certificate is uniform in x and so covers the given instance.
  if (g.dim() != 3) return false;
  GxGenerators gen = gx_symbolic(true);

  Mat m = P(pv(Var::a)) * gen.t + P(pv(Var::b)) * gen.u + P(pv(Var::c)) * gen.v;
  Mat m2 = m * m;

  // m12 of M^2 factors as 4 a i (b + c i)
  Poly m12 = m.at(0, 1).as_poly();  // b + ci
  Poly expect12 = Poly(4) * pv(Var::a) * pi() * m12;
  if (m2.at(0, 1).as_poly() != expect12) return false;

  // a = 0: (b u + c v)^2 has (1,1) entry b^2 + c^2, positive definite.
  Mat w = P(pv(Var::b)) * gen.u + P(pv(Var::c)) * gen.v;
  Mat w2 = w * w;
  Poly posdef = pv(Var::b) * pv(Var::b) + pv(Var::c) * pv(Var::c);
  if (w2.at(0, 0).as_poly() != posdef) return false;

  // b = c = 0: (a t)^2 = a^2 diag(-9, -1, -1, -9), nonzero for a != 0.
  Mat t2 = (P(pv(Var::a)) * gen.t) * (P(pv(Var::a)) * gen.t);
  Poly a2 = pv(Var::a) * pv(Var::a);
  Mat expect_t2 = Mat::diagonal({P(Poly(-9) * a2), P(-a2), P(-a2), P(Poly(-9) * a2)});
  return t2 == expect_t2;
}

}  // namespace cylie
