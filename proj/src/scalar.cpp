#include "cylie/scalar.hpp"

namespace cylie {

const char* ring_name(Ring r) {
  switch (r) {
    case Ring::Rational: return "rational";
    case Ring::Gauss: return "gauss";
    case Ring::Tower: return "tower";
    case Ring::Poly: return "poly";
  }
  return "?";
}

Ring ring_join(Ring a, Ring b) {
  if (a == b) return a;
  if ((a == Ring::Tower && b == Ring::Poly) || (a == Ring::Poly && b == Ring::Tower))
    throw Error(ErrorKind::RingMismatch, "tower and polynomial scalars do not mix");
  return static_cast<Ring>(std::max(static_cast<int>(a), static_cast<int>(b)));
}

Scalar Scalar::promote(Ring r) const {
  if (ring() == r) return *this;
  if (static_cast<int>(r) < static_cast<int>(ring()))
    throw Error(ErrorKind::RingMismatch,
                std::string("cannot lower ") + ring_name(ring()) + " to " + ring_name(r));
  Gauss g;
  switch (ring()) {
    case Ring::Rational: g = Gauss(as_rational()); break;
    case Ring::Gauss: g = as_gauss(); break;
    default:
      throw Error(ErrorKind::RingMismatch,
                  std::string("cannot promote ") + ring_name(ring()) + " to " + ring_name(r));
  }
  switch (r) {
    case Ring::Gauss: return Scalar(g);
    case Ring::Tower: return Scalar(Tower(g));
    case Ring::Poly: return Scalar(Poly(g));
    default: throw Error(ErrorKind::RingMismatch, "bad promotion target");
  }
}

bool Scalar::is_zero() const {
  return std::visit([](const auto& x) { return x.is_zero(); }, v_);
}

bool Scalar::is_one() const {
  switch (ring()) {
    case Ring::Rational: return as_rational().is_one();
    case Ring::Gauss: return as_gauss().is_one();
    case Ring::Tower: return as_tower().is_one();
    case Ring::Poly: return as_poly().is_constant() && as_poly().constant_term().is_one();
  }
  return false;
}

Scalar Scalar::operator-() const {
  return std::visit([](const auto& x) { return Scalar(-x); }, v_);
}

namespace {
template <class Op>
Scalar binop(const Scalar& a, const Scalar& b, Op op) {
  Ring r = ring_join(a.ring(), b.ring());
  Scalar pa = a.promote(r);
  Scalar pb = b.promote(r);
  switch (r) {
    case Ring::Rational: return Scalar(op(pa.as_rational(), pb.as_rational()));
    case Ring::Gauss: return Scalar(op(pa.as_gauss(), pb.as_gauss()));
    case Ring::Tower: return Scalar(op(pa.as_tower(), pb.as_tower()));
    case Ring::Poly: return Scalar(op(pa.as_poly(), pb.as_poly()));
  }
  throw Error(ErrorKind::RingMismatch, "unreachable");
}
}  // namespace

Scalar Scalar::operator+(const Scalar& o) const {
  return binop(*this, o, [](const auto& x, const auto& y) { return x + y; });
}

Scalar Scalar::operator-(const Scalar& o) const {
  return binop(*this, o, [](const auto& x, const auto& y) { return x - y; });
}

Scalar Scalar::operator*(const Scalar& o) const {
  return binop(*this, o, [](const auto& x, const auto& y) { return x * y; });
}

bool Scalar::operator==(const Scalar& o) const {
  Ring r;
  try {
    r = ring_join(ring(), o.ring());
  } catch (const Error&) {
    return false;
  }
  Scalar pa = promote(r);
  Scalar pb = o.promote(r);
  switch (r) {
    case Ring::Rational: return pa.as_rational() == pb.as_rational();
    case Ring::Gauss: return pa.as_gauss() == pb.as_gauss();
    case Ring::Tower: return pa.as_tower() == pb.as_tower();
    case Ring::Poly: return pa.as_poly() == pb.as_poly();
  }
  return false;
}

std::string Scalar::str() const {
  return std::visit([](const auto& x) { return x.str(); }, v_);
}

Scalar conj(const Scalar& e) {
  switch (e.ring()) {
    case Ring::Rational: return e;
    case Ring::Gauss: return Scalar(e.as_gauss().conj());
    case Ring::Tower: return Scalar(e.as_tower().conj());
    case Ring::Poly: return Scalar(e.as_poly().conj());
  }
  return e;
}

Scalar inv(const Scalar& e) {
  switch (e.ring()) {
    case Ring::Rational: return Scalar(e.as_rational().inv());
    case Ring::Gauss: return Scalar(e.as_gauss().inv());
    case Ring::Tower: return Scalar(e.as_tower().inv());
    case Ring::Poly: throw Error(ErrorKind::UnsupportedRing, "no inverses in the polynomial ring");
  }
  throw Error(ErrorKind::UnsupportedRing, "unreachable");
}

Scalar normsq(const Scalar& z) { return z * conj(z); }

Scalar operator/(const Scalar& a, const Scalar& b) { return a * inv(b.promote(ring_join(a.ring(), b.ring()))); }

Tower poly_substitute(const Poly& p, const std::map<Var, Tower>& env) { return p.substitute(env); }

}  // namespace cylie
