#ifndef CYLIE_SCALAR_HPP
#define CYLIE_SCALAR_HPP

#include <string>
#include <variant>

#include "cylie/poly.hpp"

namespace cylie {

// Which exact ring a scalar lives in. Rational embeds in Gauss, which
// embeds in both Tower and Poly (as constants); Tower and Poly do not mix.
enum class Ring { Rational = 0, Gauss = 1, Tower = 2, Poly = 3 };

const char* ring_name(Ring r);

// RingMismatch when one side is Tower and the other Poly.
Ring ring_join(Ring a, Ring b);

// A scalar from any of the four rings. Arithmetic between different rings
// promotes upward along the embeddings.
class Scalar {
public:
  Scalar() : v_(Rational(0)) {}
  Scalar(Rational r) : v_(std::move(r)) {}
  Scalar(int64_t n) : v_(Rational(n)) {}
  Scalar(Gauss g) : v_(std::move(g)) {}
  Scalar(Tower t) : v_(std::move(t)) {}
  Scalar(Poly p) : v_(std::move(p)) {}

  static Scalar i() { return Scalar(Gauss::i()); }

  Ring ring() const { return static_cast<Ring>(v_.index()); }

  const Rational& as_rational() const { return std::get<Rational>(v_); }
  const Gauss& as_gauss() const { return std::get<Gauss>(v_); }
  const Tower& as_tower() const { return std::get<Tower>(v_); }
  const Poly& as_poly() const { return std::get<Poly>(v_); }

  // Re-express in ring r (upward only; throws RingMismatch otherwise).
  Scalar promote(Ring r) const;

  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  std::string str() const;

private:
  std::variant<Rational, Gauss, Tower, Poly> v_;
};

// The toolkit-level scalar operations.

// Involutive ring automorphism fixing the reals.
Scalar conj(const Scalar& e);

// Multiplicative inverse in the field rings; UnsupportedRing on Poly,
// ZeroInverse on zero.
Scalar inv(const Scalar& e);

// z * conj(z).
Scalar normsq(const Scalar& z);

Scalar operator/(const Scalar& a, const Scalar& b);

// Instantiates a symbolic scalar over the tower (ring homomorphism).
Tower poly_substitute(const Poly& p, const std::map<Var, Tower>& env);

}  // namespace cylie

#endif
