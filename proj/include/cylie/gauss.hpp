#ifndef CYLIE_GAUSS_HPP
#define CYLIE_GAUSS_HPP

#include <string>

#include "cylie/rational.hpp"

namespace cylie {

// Gaussian rational: element of Q(i).
class Gauss {
public:
  Gauss() = default;
  Gauss(Rational re) : re_(re) {}
  Gauss(int64_t re) : re_(re) {}
  Gauss(Rational re, Rational im) : re_(re), im_(im) {}

  static Gauss i() { return Gauss(Rational(0), Rational(1)); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_one() const { return re_.is_one() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  Gauss conj() const { return Gauss(re_, -im_); }
  Rational normsq() const { return re_ * re_ + im_ * im_; }

  Gauss operator-() const { return Gauss(-re_, -im_); }
  Gauss operator+(const Gauss& o) const { return Gauss(re_ + o.re_, im_ + o.im_); }
  Gauss operator-(const Gauss& o) const { return Gauss(re_ - o.re_, im_ - o.im_); }
  Gauss operator*(const Gauss& o) const {
    return Gauss(re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_);
  }
  Gauss inv() const {
    if (is_zero()) throw Error(ErrorKind::ZeroInverse, "inverse of Gaussian-rational zero");
    Rational n = normsq();
    return Gauss(re_ / n, -(im_ / n));
  }
  Gauss operator/(const Gauss& o) const { return *this * o.inv(); }

  Gauss& operator+=(const Gauss& o) { return *this = *this + o; }
  Gauss& operator-=(const Gauss& o) { return *this = *this - o; }
  Gauss& operator*=(const Gauss& o) { return *this = *this * o; }

  bool operator==(const Gauss& o) const { return re_ == o.re_ && im_ == o.im_; }
  bool operator!=(const Gauss& o) const { return !(*this == o); }

  // z^n for integer n; negative exponents use the inverse.
  Gauss pow(int64_t n) const;

  std::string str() const;

private:
  Rational re_;
  Rational im_;
};

}  // namespace cylie

#endif
