#include "cylie/poly.hpp"

namespace cylie {

namespace {
const char* kVarNames[kNumVars] = {"x", "xbar", "y", "ybar", "a", "b", "c", "d",
                                   "e", "f",    "g", "h",    "r", "s", "t"};
}

const char* var_name(Var v) { return kVarNames[static_cast<int>(v)]; }

Var var_from_name(const std::string& name) {
  for (int k = 0; k < kNumVars; ++k)
    if (name == kVarNames[k]) return static_cast<Var>(k);
  throw Error(ErrorKind::ParseError, "unknown indeterminate: " + name);
}

Var conj_var(Var v) {
  switch (v) {
    case Var::x: return Var::xbar;
    case Var::xbar: return Var::x;
    case Var::y: return Var::ybar;
    case Var::ybar: return Var::y;
    default: return v;
  }
}

Poly::Poly(const Gauss& constant) {
  if (!constant.is_zero()) terms_[Monomial{}] = constant;
}

Poly Poly::var(Var v) {
  Poly p;
  Monomial m{};
  m[static_cast<int>(v)] = 1;
  p.terms_[m] = Gauss(Rational(1));
  return p;
}

bool Poly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_.begin()->first == Monomial{};
}

Gauss Poly::constant_term() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? Gauss() : it->second;
}

void Poly::add_term(const Monomial& m, const Gauss& coeff) {
  if (coeff.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_[m] = coeff;
  } else {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly out;
  for (const auto& [m, c] : terms_) out.terms_[m] = -c;
  return out;
}

Poly Poly::operator+(const Poly& o) const {
  Poly out = *this;
  for (const auto& [m, c] : o.terms_) out.add_term(m, c);
  return out;
}

Poly Poly::operator-(const Poly& o) const {
  Poly out = *this;
  for (const auto& [m, c] : o.terms_) out.add_term(m, -c);
  return out;
}

Poly Poly::operator*(const Poly& o) const {
  Poly out;
  for (const auto& [m1, c1] : terms_) {
    for (const auto& [m2, c2] : o.terms_) {
      Monomial m;
      for (int k = 0; k < kNumVars; ++k) {
        int e = int(m1[k]) + int(m2[k]);
        if (e > 255) throw Error(ErrorKind::Overflow, "monomial degree");
        m[k] = static_cast<uint8_t>(e);
      }
      out.add_term(m, c1 * c2);
    }
  }
  return out;
}

Poly Poly::conj() const {
  Poly out;
  for (const auto& [m, c] : terms_) {
    Monomial cm{};
    for (int k = 0; k < kNumVars; ++k) cm[static_cast<int>(conj_var(static_cast<Var>(k)))] = m[k];
    out.add_term(cm, c.conj());
  }
  return out;
}

bool Poly::equal_up_to_unit(const Poly& q) const {
  if (is_zero() || q.is_zero()) return is_zero() && q.is_zero();
  if (terms_.size() != q.terms_.size()) return false;
  const auto& [m0, c0] = *terms_.begin();
  auto it = q.terms_.find(m0);
  if (it == q.terms_.end()) return false;
  Gauss unit = c0 / it->second;
  Poly scaled;
  for (const auto& [m, c] : q.terms_) scaled.terms_[m] = c * unit;
  return scaled == *this;
}

Tower Poly::substitute(const std::map<Var, Tower>& env) const {
  for (const auto& [v, val] : env) {
    auto partner = env.find(conj_var(v));
    if (partner == env.end())
      throw Error(ErrorKind::MissingAssignment,
                  std::string("conjugate partner of ") + var_name(v) + " unassigned");
    if (partner->second != val.conj())
      throw Error(ErrorKind::PairingViolation,
                  std::string("env(") + var_name(conj_var(v)) + ") != conj(env(" + var_name(v) + "))");
  }
  Tower acc;
  for (const auto& [m, c] : terms_) {
    Tower term = Tower(c);
    for (int k = 0; k < kNumVars; ++k) {
      if (m[k] == 0) continue;
      auto it = env.find(static_cast<Var>(k));
      if (it == env.end())
        throw Error(ErrorKind::MissingAssignment, std::string("no value for ") + kVarNames[k]);
      for (int e = 0; e < m[k]; ++e) term *= it->second;
    }
    acc += term;
  }
  return acc;
}

Poly Poly::substitute_poly(const std::map<Var, Poly>& env) const {
  Poly acc;
  for (const auto& [m, c] : terms_) {
    Poly term(c);
    for (int k = 0; k < kNumVars; ++k) {
      if (m[k] == 0) continue;
      auto it = env.find(static_cast<Var>(k));
      Poly base = (it == env.end()) ? Poly::var(static_cast<Var>(k)) : it->second;
      for (int e = 0; e < m[k]; ++e) term *= base;
    }
    acc += term;
  }
  return acc;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    std::string mono;
    for (int k = 0; k < kNumVars; ++k) {
      if (m[k] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += kVarNames[k];
      if (m[k] > 1) mono += "^" + std::to_string(int(m[k]));
    }
    std::string coeff = c.str();
    std::string term;
    if (mono.empty())
      term = "(" + coeff + ")";
    else if (c.is_one())
      term = mono;
    else
      term = "(" + coeff + ")*" + mono;
    out += out.empty() ? term : " + " + term;
  }
  return out;
}

}  // namespace cylie
