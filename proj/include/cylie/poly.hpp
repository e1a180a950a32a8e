#ifndef CYLIE_POLY_HPP
#define CYLIE_POLY_HPP

#include <array>
#include <map>
#include <string>
#include <vector>

#include "cylie/tower.hpp"

namespace cylie {

// The fixed indeterminate alphabet. x/xbar and y/ybar are swapped by
// conjugation; the remaining letters stand for real quantities and are
// fixed. Declaration order is the lexicographic order used for the
// canonical form.
enum class Var : int {
  x = 0,
  xbar,
  y,
  ybar,
  a,
  b,
  c,
  d,
  e,
  f,
  g,
  h,
  r,
  s,
  t,
};

constexpr int kNumVars = 15;

const char* var_name(Var v);
Var var_from_name(const std::string& name);  // throws ParseError
Var conj_var(Var v);

using Monomial = std::array<uint8_t, kNumVars>;

// Multivariate polynomial over Q(i). Canonical form: monomials sorted
// lexicographically, no zero coefficients stored, so equality is map
// equality.
class Poly {
public:
  Poly() = default;
  Poly(const Gauss& constant);
  Poly(const Rational& constant) : Poly(Gauss(constant)) {}
  Poly(int64_t constant) : Poly(Gauss(Rational(constant))) {}

  static Poly var(Var v);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Gauss constant_term() const;

  const std::map<Monomial, Gauss>& terms() const { return terms_; }

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  bool operator==(const Poly& o) const { return terms_ == o.terms_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  // Swaps paired indeterminates and conjugates coefficients.
  Poly conj() const;

  // p * conj(p)
  Poly normsq() const { return *this * conj(); }

  // True when p = unit * q for a nonzero Gaussian-rational unit.
  bool equal_up_to_unit(const Poly& q) const;

  // Evaluate over the tower. env must assign every variable that occurs
  // and respect the pairing env(conj v) = conj(env(v)); violations throw
  // MissingAssignment / PairingViolation.
  Tower substitute(const std::map<Var, Tower>& env) const;

  // Ring substitution Var -> Poly; unassigned variables stay themselves.
  // The env must still respect pairing on assigned conjugate pairs.
  Poly substitute_poly(const std::map<Var, Poly>& env) const;

  std::string str() const;

private:
  void add_term(const Monomial& m, const Gauss& coeff);
  std::map<Monomial, Gauss> terms_;
};

}  // namespace cylie

#endif
