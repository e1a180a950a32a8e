#ifndef CYLIE_RATIONAL_HPP
#define CYLIE_RATIONAL_HPP

#include <cstdint>
#include <string>

#include "cylie/error.hpp"

namespace cylie {

// Checked 64-bit integer arithmetic. The matrices in play have tiny
// entries, but symbolic determinant expansion multiplies coefficients up
// into the thousands; a silent wraparound would invalidate every
// verification downstream, so all paths throw Overflow instead.
int64_t checked_add(int64_t a, int64_t b);
int64_t checked_sub(int64_t a, int64_t b);
int64_t checked_mul(int64_t a, int64_t b);
int64_t checked_neg(int64_t a);

// Exact rational number, always reduced, denominator >= 1, zero is 0/1.
class Rational {
public:
  Rational() : num_(0), den_(1) {}
  Rational(int64_t n) : num_(n), den_(1) {}
  Rational(int64_t n, int64_t d);

  int64_t num() const { return num_; }
  int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_one() const { return num_ == 1 && den_ == 1; }
  int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

  Rational operator-() const;
  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;  // throws ZeroInverse on o = 0
  Rational inv() const;

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const;

  // "p/q" form, e.g. "-3/4"; integers render without the "/1".
  std::string str() const;
  static Rational parse(const std::string& s);

private:
  void reduce();
  int64_t num_;
  int64_t den_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace cylie

#endif
