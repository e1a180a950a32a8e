#include "cylie/gauss.hpp"
#include "cylie/tower.hpp"

namespace cylie {

Gauss Gauss::pow(int64_t n) const {
  Gauss base = *this;
  if (n < 0) {
    base = base.inv();
    n = -n;
  }
  Gauss acc(Rational(1));
  while (n > 0) {
    if (n & 1) acc *= base;
    base *= base;
    n >>= 1;
  }
  return acc;
}

std::string Gauss::str() const {
  if (im_.is_zero()) return re_.str();
  std::string s = re_.is_zero() ? "" : re_.str();
  s += (im_.sign() < 0 ? " - " : (s.empty() ? "" : " + "));
  Rational m = abs(im_);
  if (s == " - " && re_.is_zero()) s = "-";
  if (!m.is_one()) s += m.str() + "*";
  s += "i";
  return s;
}

bool Tower::is_zero() const {
  return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero();
}

Gauss Tower::to_gauss() const {
  if (!is_gauss()) throw Error(ErrorKind::RingMismatch, "tower element has sqrt-3 components");
  return Gauss(c_[0], c_[1]);
}

Tower Tower::operator+(const Tower& o) const {
  return Tower(c_[0] + o.c_[0], c_[1] + o.c_[1], c_[2] + o.c_[2], c_[3] + o.c_[3]);
}

Tower Tower::operator-(const Tower& o) const {
  return Tower(c_[0] - o.c_[0], c_[1] - o.c_[1], c_[2] - o.c_[2], c_[3] - o.c_[3]);
}

Tower Tower::operator*(const Tower& o) const {
  // (1, i, s, is) structure constants with i^2 = -1, s^2 = 3.
  const auto& a = c_;
  const auto& b = o.c_;
  Rational three(3);
  Rational r0 = a[0] * b[0] - a[1] * b[1] + three * (a[2] * b[2] - a[3] * b[3]);
  Rational r1 = a[0] * b[1] + a[1] * b[0] + three * (a[2] * b[3] + a[3] * b[2]);
  Rational r2 = a[0] * b[2] + a[2] * b[0] - a[1] * b[3] - a[3] * b[1];
  Rational r3 = a[0] * b[3] + a[3] * b[0] + a[1] * b[2] + a[2] * b[1];
  return Tower(r0, r1, r2, r3);
}

Tower Tower::inv() const {
  if (is_zero()) throw Error(ErrorKind::ZeroInverse, "inverse of tower zero");
  // Multiply by the three nontrivial Galois conjugates; the full norm is a
  // nonzero rational because Q(i, sqrt 3) is a field.
  Tower num = conj() * conj_s() * conj().conj_s();
  Tower norm = *this * num;
  // norm is rational by construction
  Rational n = norm.c_[0];
  if (!norm.c_[1].is_zero() || !norm.c_[2].is_zero() || !norm.c_[3].is_zero() || n.is_zero())
    throw Error(ErrorKind::ZeroInverse, "tower norm degenerate");
  Rational ninv = n.inv();
  return Tower(num.c_[0] * ninv, num.c_[1] * ninv, num.c_[2] * ninv, num.c_[3] * ninv);
}

int Tower::sign_real() const {
  if (!is_real()) throw Error(ErrorKind::UnsupportedRing, "sign of non-real tower element");
  const Rational& p = c_[0];
  const Rational& q = c_[2];
  if (q.is_zero()) return p.sign();
  if (p.is_zero()) return q.sign();
  if (p.sign() == q.sign()) return p.sign();
  // p + q*sqrt(3) with mixed signs: compare p^2 against 3 q^2. Equality is
  // impossible since sqrt(3) is irrational.
  Rational p2 = p * p;
  Rational q23 = Rational(3) * q * q;
  return (q23 < p2) ? p.sign() : q.sign();
}

std::string Tower::str() const {
  static const char* names[4] = {"", "i", "s", "i*s"};
  std::string out;
  for (int k = 0; k < 4; ++k) {
    if (c_[k].is_zero()) continue;
    Rational m = abs(c_[k]);
    std::string term;
    if (k == 0 || !m.is_one()) term += m.str();
    if (k != 0) {
      if (!term.empty()) term += "*";
      term += names[k];
    }
    if (out.empty())
      out = (c_[k].sign() < 0 ? "-" : "") + term;
    else
      out += (c_[k].sign() < 0 ? " - " : " + ") + term;
  }
  return out.empty() ? "0" : out;
}

}  // namespace cylie
