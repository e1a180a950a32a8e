#include "doctest.h"

#include "cylie/sampling.hpp"
#include "cylie/scalar.hpp"

using namespace cylie;

TEST_CASE("rationals are always reduced with positive denominator") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(2, -4).num() == -1);
  CHECK(Rational(2, -4).den() == 2);
  CHECK(Rational(0, 7).den() == 1);
  CHECK(Rational(6, 3).str() == "2");
  CHECK(Rational(-3, 4).str() == "-3/4");
  CHECK(Rational::parse("-3/4") == Rational(-3, 4));
  CHECK(Rational::parse("5") == Rational(5));
  CHECK_THROWS_AS(Rational(1, 0), Error);
  CHECK_THROWS_AS(Rational(1).inv() + Rational(0).inv(), Error);
}

TEST_CASE("checked integer arithmetic fails loudly") {
  CHECK_THROWS_AS(checked_mul(INT64_MAX, 2), Error);
  CHECK_THROWS_AS(checked_add(INT64_MAX, 1), Error);
  CHECK(checked_mul(1 << 20, 1 << 20) == int64_t(1) << 40);
}

TEST_CASE("conj fixes reals and inverts imaginary parts") {
  CHECK(conj(Scalar(Rational(3, 4))) == Scalar(Rational(3, 4)));
  Gauss z(Rational(2), Rational(5));
  CHECK(conj(Scalar(z)) == Scalar(Gauss(Rational(2), Rational(-5))));
  // conj(x*ybar + i) = xbar*y - i
  Poly p = Poly::var(Var::x) * Poly::var(Var::ybar) + Poly(Gauss::i());
  Poly expect = Poly::var(Var::xbar) * Poly::var(Var::y) - Poly(Gauss::i());
  CHECK(conj(Scalar(p)) == Scalar(expect));
}

TEST_CASE("inverses in the three field rings") {
  CHECK(inv(Scalar(2)) == Scalar(Rational(1, 2)));
  CHECK(inv(Scalar::i()) == Scalar(-Gauss::i()));
  // inv(s/3) = s, since (s/3)*s = 1
  Tower s_third = Tower::sqrt3() * Tower(Rational(1, 3));
  CHECK(s_third.inv() == Tower::sqrt3());
  CHECK_THROWS_AS(inv(Scalar(Poly::var(Var::a))), Error);
  CHECK_THROWS_AS(inv(Scalar(Tower())), Error);
}

TEST_CASE("normsq at the exotic-case value 2/sqrt(3)") {
  CHECK(normsq(Scalar(Gauss(Rational(2), Rational(1)))) == Scalar(5));
  Tower x = Tower(Rational(2)) * Tower::sqrt3().inv();
  CHECK(x.normsq() == Tower(Rational(4, 3)));
  CHECK(x.normsq().is_real());
  // normsq(x + i) = x*xbar + i*xbar - i*x + 1
  Poly p = Poly::var(Var::x) + Poly(Gauss::i());
  Poly expect = Poly::var(Var::x) * Poly::var(Var::xbar) +
                Poly(Gauss::i()) * Poly::var(Var::xbar) - Poly(Gauss::i()) * Poly::var(Var::x) +
                Poly(1);
  CHECK(p.normsq() == expect);
}

TEST_CASE("substitution instantiates the G_x constraints") {
  Tower x0 = Tower(Rational(2)) * Tower::sqrt3().inv();
  std::map<Var, Tower> env{{Var::x, x0}, {Var::xbar, x0.conj()}};

  Poly constraint = Poly::var(Var::x) * Poly::var(Var::xbar) - Poly(Rational(4, 3));
  CHECK(constraint.substitute(env).is_zero());

  CHECK(Poly(7).substitute({}) == Tower(Rational(7)));

  // xbar*y - x*ybar at x = 2/sqrt(3), y = 2i/sqrt(3) evaluates to (8/3)i
  Tower y0 = Tower::i() * x0;
  std::map<Var, Tower> env2 = env;
  env2[Var::y] = y0;
  env2[Var::ybar] = y0.conj();
  Poly bracket_term = Poly::var(Var::xbar) * Poly::var(Var::y) - Poly::var(Var::x) * Poly::var(Var::ybar);
  CHECK(bracket_term.substitute(env2) == Tower(Rational(0), Rational(8, 3), Rational(0), Rational(0)));

  CHECK_THROWS_AS(bracket_term.substitute(env), Error);  // y unassigned
  std::map<Var, Tower> bad = env2;
  bad[Var::ybar] = y0;  // breaks the pairing
  CHECK_THROWS_AS(bracket_term.substitute(bad), Error);
}

TEST_CASE("substitution commutes with conj on pairing-respecting envs") {
  Sampler rng(11);
  for (int k = 0; k < 200; ++k) {
    Poly p = Poly(Gauss(rng.rational(), rng.rational())) * Poly::var(Var::x) +
             Poly(Gauss(rng.rational(), rng.rational())) * Poly::var(Var::y) * Poly::var(Var::xbar) +
             Poly(Gauss(rng.rational(), rng.rational()));
    Tower xv = rng.tower(3, 3);
    Tower yv = rng.tower(3, 3);
    std::map<Var, Tower> env{
        {Var::x, xv}, {Var::xbar, xv.conj()}, {Var::y, yv}, {Var::ybar, yv.conj()}};
    CHECK(p.conj().substitute(env) == p.substitute(env).conj());
  }
}

template <typename T>
static void field_axioms(Sampler& rng, T sample(Sampler&), int iters) {
  for (int k = 0; k < iters; ++k) {
    T a = sample(rng), b = sample(rng), c = sample(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a + (-a) == T());
    if (!a.is_zero()) CHECK(a * a.inv() == T(Rational(1)));
  }
}

TEST_CASE("field axioms hold on random samples in all three fields") {
  Sampler rng(7);
  field_axioms<Rational>(rng, [](Sampler& r) { return r.rational(); }, 1000);
  field_axioms<Gauss>(rng, [](Sampler& r) { return r.gauss(); }, 1000);
  field_axioms<Tower>(rng, [](Sampler& r) { return r.tower(); }, 1000);
}

TEST_CASE("conj is involutive and normsq multiplicative") {
  Sampler rng(13);
  for (int k = 0; k < 1000; ++k) {
    Tower z = rng.tower(), w = rng.tower();
    CHECK(z.conj().conj() == z);
    CHECK((z * w).conj() == z.conj() * w.conj());
    CHECK((z * w).normsq() == z.normsq() * w.normsq());
    CHECK(z.normsq().is_real());
    Gauss g = rng.gauss(), h = rng.gauss();
    CHECK(g.conj().conj() == g);
    CHECK((g * h).normsq() == g.normsq() * h.normsq());
  }
}

TEST_CASE("poly ring is commutative with idempotent canonical form") {
  Sampler rng(17);
  auto rand_poly = [&rng]() {
    Poly p;
    for (int t = 0; t < 4; ++t) {
      Poly term(Gauss(rng.rational(), rng.rational()));
      term *= Poly::var(static_cast<Var>(rng.range(0, kNumVars - 1)));
      if (rng.next() & 1) term *= Poly::var(static_cast<Var>(rng.range(0, kNumVars - 1)));
      p += term;
    }
    return p;
  };
  for (int k = 0; k < 300; ++k) {
    Poly p = rand_poly(), q = rand_poly();
    CHECK(p * q == q * p);
    CHECK(p - p == Poly());
    CHECK((p + q) - q == p);
  }
  CHECK(Poly::var(Var::a).equal_up_to_unit(Poly(Gauss::i()) * Poly::var(Var::a)));
  CHECK_FALSE(Poly::var(Var::a).equal_up_to_unit(Poly::var(Var::b)));
}

TEST_CASE("tower arithmetic extends Gaussian arithmetic") {
  Sampler rng(19);
  for (int k = 0; k < 1000; ++k) {
    Gauss g = rng.gauss(), h = rng.gauss();
    CHECK(Tower(g) * Tower(h) == Tower(g * h));
    CHECK(Tower(g) + Tower(h) == Tower(g + h));
    CHECK(Tower(g).conj() == Tower(g.conj()));
    if (!g.is_zero()) CHECK(Tower(g).inv() == Tower(g.inv()));
  }
}

TEST_CASE("scalar promotion embeds upward and rejects tower/poly mixes") {
  Scalar r(Rational(1, 2));
  CHECK(r + Scalar::i() == Scalar(Gauss(Rational(1, 2), Rational(1))));
  CHECK(Scalar(Tower::sqrt3()) * Scalar(2) == Scalar(Tower::sqrt3() + Tower::sqrt3()));
  CHECK_THROWS_AS(Scalar(Tower::sqrt3()) + Scalar(Poly::var(Var::a)), Error);
  CHECK(Scalar(Poly::var(Var::a)) * Scalar::i() == Scalar(Poly(Gauss::i()) * Poly::var(Var::a)));
}
