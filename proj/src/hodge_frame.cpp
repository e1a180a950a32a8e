#include "cylie/hodge_frame.hpp"

namespace cylie {

namespace {
Scalar gauss_i() { return Scalar(Gauss::i()); }
}

const char* label_name(Label l) {
  switch (l) {
    case Label::v30: return "v30";
    case Label::v21: return "v21";
    case Label::v12: return "v12";
    case Label::v03: return "v03";
  }
  return "?";
}

Label label_from_name(const std::string& s) {
  for (Label l : {Label::v30, Label::v21, Label::v12, Label::v03})
    if (s == label_name(l)) return l;
  throw Error(ErrorKind::ParseError, "unknown basis label: " + s);
}

Label label_conj(Label l) {
  switch (l) {
    case Label::v30: return Label::v03;
    case Label::v03: return Label::v30;
    case Label::v21: return Label::v12;
    case Label::v12: return Label::v21;
  }
  return l;
}

BasisOrdering::BasisOrdering(std::array<Label, 4> labels) : labels_(labels) {
  bool seen[4] = {false, false, false, false};
  for (Label l : labels_) {
    int k = static_cast<int>(l);
    if (seen[k]) throw Error(ErrorKind::ShapeMismatch, "basis ordering is not a permutation");
    seen[k] = true;
  }
}

int BasisOrdering::index_of(Label l) const {
  for (int i = 0; i < 4; ++i)
    if (labels_[i] == l) return i;
  throw Error(ErrorKind::ShapeMismatch, "label not present");
}

Mat change_of_basis(const BasisOrdering& from, const BasisOrdering& to) {
  Mat p(4, 4);
  for (int j = 0; j < 4; ++j) p = p.with_entry(to.index_of(from.at(j)), j, Scalar(1));
  return p;
}

Mat reorder_operator(const Mat& m, const BasisOrdering& from, const BasisOrdering& to) {
  Mat p = change_of_basis(from, to);
  return p * m * p.transpose();
}

Mat reorder_form(const Mat& q, const BasisOrdering& from, const BasisOrdering& to) {
  // coords_from = P * coords_to, so the form matrix picks up P on both sides.
  Mat p = change_of_basis(to, from);
  return p.transpose() * q * p;
}

Mat q_matrix(const BasisOrdering& ordering) {
  // In the canonical ordering {v30, v21, v12, v03}:
  //   Q(v30, v03) = -i, Q(v21, v12) = i, antisymmetric.
  Mat q(4, 4, Ring::Gauss);
  q = q.with_entry(0, 3, -gauss_i()).with_entry(1, 2, gauss_i());
  q = q.with_entry(2, 1, -gauss_i()).with_entry(3, 0, gauss_i());
  return reorder_form(q, BasisOrdering::canonical(), ordering);
}

HodgeFrame HodgeFrame::canonical() { return with_ordering(BasisOrdering::canonical()); }

HodgeFrame HodgeFrame::with_ordering(const BasisOrdering& ordering) {
  return HodgeFrame{ordering, q_matrix(ordering)};
}

Mat circle_action(CircleKind kind, const Gauss& z) {
  if (!z.normsq().is_one()) throw Error(ErrorKind::NotUnitNorm, "circle parameter with |z|^2 != 1");
  Gauss zb = z.conj();
  switch (kind) {
    case CircleKind::hX:
      return Mat::diagonal({Scalar(z.pow(3)), Scalar(z), Scalar(zb), Scalar(zb.pow(3))});
    case CircleKind::hW: return Mat::diagonal({Scalar(z), Scalar(zb), Scalar(z), Scalar(zb)});
    case CircleKind::hG: return Mat::diagonal({Scalar(z), Scalar(z), Scalar(zb), Scalar(zb)});
  }
  throw Error(ErrorKind::ShapeMismatch, "unreachable");
}

bool is_real(const Mat& m, const HodgeFrame& frame) {
  if (m.rows() != 4 || m.cols() != 4) throw Error(ErrorKind::ShapeMismatch, "is_real needs 4x4");
  for (int i = 0; i < 4; ++i) {
    int si = frame.conj_index(i);
    for (int j = 0; j < 4; ++j) {
      if (m.at(si, frame.conj_index(j)) != conj(m.at(i, j))) return false;
    }
  }
  return true;
}

bool in_sp(const Mat& m, const HodgeFrame& frame, SpLevel level) {
  if (m.rows() != 4 || m.cols() != 4) throw Error(ErrorKind::ShapeMismatch, "in_sp needs 4x4");
  if (!is_real(m, frame)) return false;
  if (level == SpLevel::group) return m.transpose() * frame.q * m == frame.q;
  return (m.transpose() * frame.q + frame.q * m).is_zero();
}

std::pair<int, int> hermitian_signature(const HodgeFrame& frame, const std::vector<Label>& subspace) {
  int n = int(subspace.size());
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (subspace[a] == subspace[b])
        throw Error(ErrorKind::ShapeMismatch, "subspace labels must be distinct");

  // Gram of H = i Q(., conj .) on the chosen labels.
  std::vector<std::vector<Gauss>> w(n, std::vector<Gauss>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int ia = frame.ordering.index_of(subspace[a]);
      int ib = frame.ordering.index_of(label_conj(subspace[b]));
      w[a][b] = Gauss::i() * frame.q.at(ia, ib).promote(Ring::Gauss).as_gauss();
    }
  return hermitian_signature_of_gram(std::move(w));
}

std::pair<int, int> hermitian_signature_of_gram(std::vector<std::vector<Gauss>> w) {
  int n = int(w.size());

  auto basis_swap = [&](int a, int b) {
    for (int r = 0; r < n; ++r) std::swap(w[r][a], w[r][b]);
    for (int c = 0; c < n; ++c) std::swap(w[a][c], w[b][c]);
  };
  // e_a += lambda * e_b  (H is conjugate-linear in its second argument)
  auto basis_add = [&](int a, int b, const Gauss& lambda) {
    for (int r = 0; r < n; ++r) w[r][a] += lambda.conj() * w[r][b];
    for (int c = 0; c < n; ++c) w[a][c] += lambda * w[b][c];
  };

  int pos = 0, neg = 0;
  for (int k = 0; k < n; ++k) {
    if (w[k][k].is_zero()) {
      int j_diag = -1, j_off = -1;
      for (int j = k + 1; j < n; ++j) {
        if (j_diag < 0 && !w[j][j].is_zero()) j_diag = j;
        if (j_off < 0 && !w[k][j].is_zero()) j_off = j;
      }
      if (j_diag >= 0) {
        basis_swap(k, j_diag);
      } else if (j_off >= 0) {
        Gauss lambda = w[k][j_off].re().is_zero() ? Gauss::i() : Gauss(Rational(1));
        basis_add(k, j_off, lambda);
      } else {
        throw Error(ErrorKind::DegenerateForm, "zero block in Hermitian congruence");
      }
    }
    Gauss d = w[k][k];
    if (!d.im().is_zero()) throw Error(ErrorKind::DegenerateForm, "non-real Hermitian diagonal");
    (d.re().sign() > 0 ? pos : neg)++;
    for (int a = k + 1; a < n; ++a) {
      if (w[a][k].is_zero()) continue;
      basis_add(a, k, -(w[a][k] / d));
    }
  }
  return {pos, neg};
}

Mat chart_basis(const HodgeFrame& frame) {
  // {v30 + v03, i(v30 - v03), v21 + v12, i(v21 - v12)} as columns.
  Mat b(4, 4, Ring::Gauss);
  int i30 = frame.ordering.index_of(Label::v30);
  int i03 = frame.ordering.index_of(Label::v03);
  int i21 = frame.ordering.index_of(Label::v21);
  int i12 = frame.ordering.index_of(Label::v12);
  b = b.with_entry(i30, 0, Scalar(1)).with_entry(i03, 0, Scalar(1));
  b = b.with_entry(i30, 1, gauss_i()).with_entry(i03, 1, -gauss_i());
  b = b.with_entry(i21, 2, Scalar(1)).with_entry(i12, 2, Scalar(1));
  b = b.with_entry(i21, 3, gauss_i()).with_entry(i12, 3, -gauss_i());
  return b;
}

Mat to_chart(const Mat& m, const HodgeFrame& frame) {
  Mat p = chart_basis(frame);
  return demote(inverse(p) * m * p);
}

Mat from_chart(const Mat& m, const HodgeFrame& frame) {
  Mat p = chart_basis(frame);
  return demote(p * m * inverse(p));
}

Mat chart_vec_of_chart(const Mat& chart_matrix) {
  std::vector<Scalar> v;
  v.reserve(size_t(chart_matrix.rows()) * chart_matrix.cols());
  for (int i = 0; i < chart_matrix.rows(); ++i)
    for (int j = 0; j < chart_matrix.cols(); ++j) v.push_back(chart_matrix.at(i, j));
  return Mat::column(v);
}

Mat chart_vec(const Mat& m, const HodgeFrame& frame) { return chart_vec_of_chart(to_chart(m, frame)); }

namespace {
bool scalar_demotable(const Scalar& s, Ring target) {
  switch (s.ring()) {
    case Ring::Rational: return true;
    case Ring::Gauss: return target == Ring::Rational ? s.as_gauss().is_real() : true;
    case Ring::Tower: {
      if (target == Ring::Gauss) return s.as_tower().is_gauss();
      return s.as_tower().is_gauss() && s.as_tower().to_gauss().is_real();
    }
    case Ring::Poly: return false;
  }
  return false;
}

Scalar scalar_demote(const Scalar& s, Ring target) {
  Gauss g;
  switch (s.ring()) {
    case Ring::Rational: return s;
    case Ring::Gauss: g = s.as_gauss(); break;
    case Ring::Tower: g = s.as_tower().to_gauss(); break;
    default: return s;
  }
  return target == Ring::Rational ? Scalar(g.re()) : Scalar(g);
}
}  // namespace

Mat demote(const Mat& m) {
  if (m.ring() == Ring::Poly || m.ring() == Ring::Rational) return m;
  for (Ring target : {Ring::Rational, Ring::Gauss}) {
    bool ok = true;
    for (const auto& e : m.entries())
      if (!scalar_demotable(e, target)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    std::vector<Scalar> es;
    es.reserve(m.entries().size());
    for (const auto& e : m.entries()) es.push_back(scalar_demote(e, target));
    return Mat(m.rows(), m.cols(), std::move(es));
  }
  return m;
}

namespace {
int real_scalar_sign(const Scalar& s) {
  switch (s.ring()) {
    case Ring::Rational: return s.as_rational().sign();
    case Ring::Gauss:
      if (!s.as_gauss().is_real()) throw Error(ErrorKind::DegenerateForm, "complex value where real expected");
      return s.as_gauss().re().sign();
    case Ring::Tower: return s.as_tower().sign_real();
    case Ring::Poly: throw Error(ErrorKind::UnsupportedRing, "sign of polynomial");
  }
  return 0;
}
}  // namespace

bool positive_form_check(const Mat& j, const HodgeFrame& frame, std::string* diagnostic) {
  if (j.rows() != 4 || j.cols() != 4) throw Error(ErrorKind::ShapeMismatch, "positive_form_check");
  Mat b = chart_basis(frame);
  Mat gram = (j * b).transpose() * frame.q * b;
  gram = demote(gram);
  for (const auto& e : gram.entries()) {
    if (e != conj(e)) {
      if (diagnostic) *diagnostic = "Gram matrix of Q(J.,.) is not real";
      return false;
    }
  }
  if (gram != gram.transpose()) {
    if (diagnostic) *diagnostic = "NotSymmetric: Q(J.,.) is not a symmetric form";
    return false;
  }
  // Sylvester: all leading principal minors positive.
  for (int k = 1; k <= 4; ++k) {
    std::vector<Scalar> sub;
    for (int r = 0; r < k; ++r)
      for (int c = 0; c < k; ++c) sub.push_back(gram.at(r, c));
    if (real_scalar_sign(det(Mat(k, k, std::move(sub)))) <= 0) {
      if (diagnostic) *diagnostic = "leading principal minor " + std::to_string(k) + " not positive";
      return false;
    }
  }
  return true;
}

bool complex_structure_check(const Mat& j, const HodgeFrame& frame) {
  if (j.rows() != 4 || j.cols() != 4) return false;
  if (!is_real(j, frame) || !in_sp(j, frame, SpLevel::group)) return false;
  return j * j == -Mat::identity(4, j.ring());
}

}  // namespace cylie
