#ifndef CYLIE_TOWER_HPP
#define CYLIE_TOWER_HPP

#include <array>
#include <string>

#include "cylie/gauss.hpp"

namespace cylie {

// Element of the degree-4 tower Q(i, s) with s^2 = 3, stored on the basis
// {1, i, s, i*s} as c0 + c1*i + c2*s + c3*i*s.
class Tower {
public:
  Tower() = default;
  Tower(Rational c0) { c_[0] = c0; }
  Tower(int64_t c0) { c_[0] = Rational(c0); }
  Tower(Rational c0, Rational c1, Rational c2, Rational c3) : c_{c0, c1, c2, c3} {}
  explicit Tower(const Gauss& g) { c_[0] = g.re(), c_[1] = g.im(); }

  static Tower i() { return Tower(Rational(0), Rational(1), Rational(0), Rational(0)); }
  static Tower sqrt3() { return Tower(Rational(0), Rational(0), Rational(1), Rational(0)); }

  const Rational& coord(int k) const { return c_[k]; }

  bool is_zero() const;
  bool is_one() const { return c_[0].is_one() && c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero(); }
  // Lies in the real subfield Q(sqrt 3), i.e. fixed by conj.
  bool is_real() const { return c_[1].is_zero() && c_[3].is_zero(); }
  // Lies in Q(i), i.e. no sqrt-3 components.
  bool is_gauss() const { return c_[2].is_zero() && c_[3].is_zero(); }
  Gauss to_gauss() const;

  // i -> -i, s -> s: the involutive field automorphism extending complex
  // conjugation.
  Tower conj() const { return Tower(c_[0], -c_[1], c_[2], -c_[3]); }
  // s -> -s, i -> i: used internally to rationalize denominators.
  Tower conj_s() const { return Tower(c_[0], c_[1], -c_[2], -c_[3]); }

  Tower normsq() const { return *this * conj(); }

  Tower operator-() const { return Tower(-c_[0], -c_[1], -c_[2], -c_[3]); }
  Tower operator+(const Tower& o) const;
  Tower operator-(const Tower& o) const;
  Tower operator*(const Tower& o) const;
  Tower inv() const;
  Tower operator/(const Tower& o) const { return *this * o.inv(); }

  Tower& operator+=(const Tower& o) { return *this = *this + o; }
  Tower& operator-=(const Tower& o) { return *this = *this - o; }
  Tower& operator*=(const Tower& o) { return *this = *this * o; }

  bool operator==(const Tower& o) const { return c_ == o.c_; }
  bool operator!=(const Tower& o) const { return !(*this == o); }

  // Sign of an element of the real subfield (throws on elements with
  // i-components, whose sign is meaningless).
  int sign_real() const;

  std::string str() const;

private:
  std::array<Rational, 4> c_{};
};

}  // namespace cylie

#endif
