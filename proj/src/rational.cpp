#include "cylie/rational.hpp"

#include <cstdlib>
#include <numeric>

namespace cylie {

int64_t checked_add(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "integer add");
  return r;
}

int64_t checked_sub(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "integer sub");
  return r;
}

int64_t checked_mul(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "integer mul");
  return r;
}

int64_t checked_neg(int64_t a) {
  if (a == INT64_MIN) throw Error(ErrorKind::Overflow, "integer negate");
  return -a;
}

namespace {
int64_t gcd64(int64_t a, int64_t b) {
  if (a == INT64_MIN || b == INT64_MIN) throw Error(ErrorKind::Overflow, "gcd");
  return std::gcd(std::abs(a), std::abs(b));
}
}  // namespace

Rational::Rational(int64_t n, int64_t d) : num_(n), den_(d) {
  if (d == 0) throw Error(ErrorKind::ZeroInverse, "zero denominator");
  reduce();
}

void Rational::reduce() {
  if (den_ < 0) {
    num_ = checked_neg(num_);
    den_ = checked_neg(den_);
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  int64_t g = gcd64(num_, den_);
  num_ /= g;
  den_ /= g;
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = checked_neg(num_);
  r.den_ = den_;
  return r;
}

Rational Rational::operator+(const Rational& o) const {
  // Reduce cross terms by gcd of denominators first to keep magnitudes down.
  int64_t g = gcd64(den_, o.den_);
  int64_t a = checked_mul(num_, o.den_ / g);
  int64_t b = checked_mul(o.num_, den_ / g);
  return Rational(checked_add(a, b), checked_mul(den_ / g, o.den_));
}

Rational Rational::operator-(const Rational& o) const { return *this + (-o); }

Rational Rational::operator*(const Rational& o) const {
  int64_t g1 = gcd64(num_, o.den_);
  int64_t g2 = gcd64(o.num_, den_);
  return Rational(checked_mul(num_ / g1, o.num_ / g2), checked_mul(den_ / g2, o.den_ / g1));
}

Rational Rational::operator/(const Rational& o) const { return *this * o.inv(); }

Rational Rational::inv() const {
  if (num_ == 0) throw Error(ErrorKind::ZeroInverse, "inverse of rational zero");
  return Rational(den_, num_);
}

bool Rational::operator<(const Rational& o) const {
  // den > 0 on both sides
  return checked_mul(num_, o.den_) < checked_mul(o.num_, den_);
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(const std::string& s) {
  if (s.empty()) throw Error(ErrorKind::ParseError, "empty rational literal");
  size_t slash = s.find('/');
  try {
    size_t pos = 0;
    int64_t n = std::stoll(s.substr(0, slash), &pos);
    if (pos != (slash == std::string::npos ? s.size() : slash))
      throw Error(ErrorKind::ParseError, "bad rational literal: " + s);
    if (slash == std::string::npos) return Rational(n);
    int64_t d = std::stoll(s.substr(slash + 1), &pos);
    if (pos != s.size() - slash - 1) throw Error(ErrorKind::ParseError, "bad rational literal: " + s);
    return Rational(n, d);
  } catch (const std::invalid_argument&) {
    throw Error(ErrorKind::ParseError, "bad rational literal: " + s);
  } catch (const std::out_of_range&) {
    throw Error(ErrorKind::Overflow, "rational literal out of range: " + s);
  }
}

}  // namespace cylie
