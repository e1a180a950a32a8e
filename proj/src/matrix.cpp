#include "cylie/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace cylie {

namespace {
Ring entries_ring(const std::vector<Scalar>& es) {
  Ring r = Ring::Rational;
  for (const auto& e : es) r = ring_join(r, e.ring());
  return r;
}

void require_field(Ring r, const char* who) {
  if (r == Ring::Poly)
    throw Error(ErrorKind::UnsupportedRing, std::string(who) + " needs field entries, got poly");
}
}  // namespace

Mat::Mat(int rows, int cols, Ring ring)
    : rows_(rows), cols_(cols), ring_(ring), entries_(size_t(rows) * cols, Scalar(0).promote(ring)) {}

Mat::Mat(int rows, int cols, std::vector<Scalar> entries) : rows_(rows), cols_(cols) {
  if (entries.size() != size_t(rows) * cols)
    throw Error(ErrorKind::ShapeMismatch, "entry count does not match rows*cols");
  ring_ = entries_ring(entries);
  entries_ = std::move(entries);
  for (auto& e : entries_) e = e.promote(ring_);
}

Mat::Mat(std::initializer_list<std::initializer_list<Scalar>> rows) {
  rows_ = int(rows.size());
  cols_ = rows_ == 0 ? 0 : int(rows.begin()->size());
  for (const auto& r : rows) {
    if (int(r.size()) != cols_) throw Error(ErrorKind::ShapeMismatch, "ragged rows");
    for (const auto& e : r) entries_.push_back(e);
  }
  ring_ = entries_ring(entries_);
  for (auto& e : entries_) e = e.promote(ring_);
}

Mat Mat::identity(int n, Ring ring) {
  Mat m(n, n, ring);
  for (int i = 0; i < n; ++i) m.entries_[size_t(i) * n + i] = Scalar(1).promote(ring);
  return m;
}

Mat Mat::diagonal(const std::vector<Scalar>& d) {
  Mat m(int(d.size()), int(d.size()), entries_ring(d));
  for (size_t i = 0; i < d.size(); ++i) m.entries_[i * d.size() + i] = d[i].promote(m.ring_);
  return m;
}

Mat Mat::column(const std::vector<Scalar>& v) { return Mat(int(v.size()), 1, v); }

Mat Mat::with_entry(int i, int j, const Scalar& v) const {
  Mat m = *this;
  Ring r = ring_join(ring_, v.ring());
  if (r != ring_) m = m.promote(r);
  m.entries_[size_t(i) * cols_ + j] = v.promote(r);
  return m;
}

Mat Mat::promote(Ring r) const {
  Mat m(rows_, cols_, r);
  for (size_t k = 0; k < entries_.size(); ++k) m.entries_[k] = entries_[k].promote(r);
  return m;
}

bool Mat::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

bool Mat::is_diagonal() const {
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (i != j && !at(i, j).is_zero()) return false;
  return true;
}

Mat Mat::operator-() const {
  Mat m = *this;
  for (auto& e : m.entries_) e = -e;
  return m;
}

Mat Mat::operator+(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorKind::ShapeMismatch, "add");
  Mat m = *this;
  for (size_t k = 0; k < entries_.size(); ++k) m.entries_[k] = entries_[k] + o.entries_[k];
  m.ring_ = ring_join(ring_, o.ring_);
  for (auto& e : m.entries_) e = e.promote(m.ring_);
  return m;
}

Mat Mat::operator-(const Mat& o) const { return *this + (-o); }

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_) throw Error(ErrorKind::ShapeMismatch, "mul");
  Ring r = ring_join(ring_, o.ring_);
  Mat m(rows_, o.cols_, r);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < o.cols_; ++j) {
      Scalar acc = Scalar(0).promote(r);
      for (int k = 0; k < cols_; ++k) acc += at(i, k) * o.at(k, j);
      m.entries_[size_t(i) * o.cols_ + j] = acc.promote(r);
    }
  }
  return m;
}

bool Mat::operator==(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (size_t k = 0; k < entries_.size(); ++k)
    if (entries_[k] != o.entries_[k]) return false;
  return true;
}

Mat Mat::transpose() const {
  Mat m(cols_, rows_, ring_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m.entries_[size_t(j) * rows_ + i] = at(i, j);
  return m;
}

Mat Mat::conj_entries() const {
  Mat m = *this;
  for (auto& e : m.entries_) e = cylie::conj(e);
  return m;
}

Mat Mat::pow(int k) const {
  if (!is_square()) throw Error(ErrorKind::ShapeMismatch, "pow of non-square matrix");
  Mat acc = identity(rows_, ring_);
  for (int c = 0; c < k; ++c) acc = acc * *this;
  return acc;
}

std::string Mat::str() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    os << (i == 0 ? "[" : " ");
    os << "[";
    for (int j = 0; j < cols_; ++j) os << (j ? ", " : "") << at(i, j).str();
    os << "]" << (i + 1 == rows_ ? "]" : "\n");
  }
  return os.str();
}

Mat operator*(const Scalar& s, const Mat& m) {
  Mat out = m;
  std::vector<Scalar> es = m.entries();
  for (auto& e : es) e = s * e;
  return Mat(m.rows(), m.cols(), std::move(es));
}

Mat commutator(const Mat& a, const Mat& b) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows())
    throw Error(ErrorKind::ShapeMismatch, "commutator needs equal square matrices");
  return a * b - b * a;
}

Mat kron(const Mat& a, const Mat& b) {
  Ring r = ring_join(a.ring(), b.ring());
  Mat m(a.rows() * b.rows(), a.cols() * b.cols(), r);
  std::vector<Scalar> es(size_t(m.rows()) * m.cols());
  for (int ia = 0; ia < a.rows(); ++ia)
    for (int ja = 0; ja < a.cols(); ++ja)
      for (int ib = 0; ib < b.rows(); ++ib)
        for (int jb = 0; jb < b.cols(); ++jb) {
          size_t i = size_t(ia) * b.rows() + ib;
          size_t j = size_t(ja) * b.cols() + jb;
          es[i * m.cols() + j] = (a.at(ia, ja) * b.at(ib, jb)).promote(r);
        }
  return Mat(m.rows(), m.cols(), std::move(es));
}

Echelon reduced_row_echelon(const Mat& a) {
  require_field(a.ring(), "row reduction");
  Echelon e;
  int rows = a.rows(), cols = a.cols();
  std::vector<Scalar> w = a.entries();
  auto at = [&](int i, int j) -> Scalar& { return w[size_t(i) * cols + j]; };
  int prow = 0;
  for (int col = 0; col < cols && prow < rows; ++col) {
    int pivot = -1;
    for (int i = prow; i < rows; ++i)
      if (!at(i, col).is_zero()) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    for (int j = 0; j < cols; ++j) std::swap(at(prow, j), at(pivot, j));
    Scalar piv_inv = inv(at(prow, col));
    for (int j = col; j < cols; ++j) at(prow, j) = piv_inv * at(prow, j);
    for (int i = 0; i < rows; ++i) {
      if (i == prow || at(i, col).is_zero()) continue;
      Scalar f = at(i, col);
      for (int j = col; j < cols; ++j) at(i, j) = at(i, j) - f * at(prow, j);
    }
    e.pivot_cols.push_back(col);
    ++prow;
  }
  e.rank = prow;
  e.rref = Mat(rows, cols, std::move(w));
  return e;
}

std::vector<Mat> kernel_basis(const Mat& a) {
  Echelon e = reduced_row_echelon(a);
  int cols = a.cols();
  std::vector<bool> is_pivot(cols, false);
  for (int c : e.pivot_cols) is_pivot[c] = true;
  std::vector<Mat> basis;
  for (int j = 0; j < cols; ++j) {
    if (is_pivot[j]) continue;
    std::vector<Scalar> v(cols, Scalar(0).promote(a.ring()));
    v[j] = Scalar(1).promote(a.ring());
    for (size_t k = 0; k < e.pivot_cols.size(); ++k) v[e.pivot_cols[k]] = -e.rref.at(int(k), j);
    basis.push_back(Mat::column(v));
  }
  return basis;
}

int rank(const Mat& a) { return reduced_row_echelon(a).rank; }

std::optional<Mat> solve(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || b.cols() != 1) throw Error(ErrorKind::ShapeMismatch, "solve");
  Ring r = ring_join(a.ring(), b.ring());
  require_field(r, "solve");
  int cols = a.cols();
  Mat aug(a.rows(), cols + 1, r);
  std::vector<Scalar> es;
  es.reserve(size_t(a.rows()) * (cols + 1));
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < cols; ++j) es.push_back(a.at(i, j).promote(r));
    es.push_back(b.at(i, 0).promote(r));
  }
  Echelon e = reduced_row_echelon(Mat(a.rows(), cols + 1, std::move(es)));
  for (int c : e.pivot_cols)
    if (c == cols) return std::nullopt;  // row [0 ... 0 | 1]: inconsistent
  std::vector<Scalar> x(cols, Scalar(0).promote(r));
  for (size_t k = 0; k < e.pivot_cols.size(); ++k) x[e.pivot_cols[k]] = e.rref.at(int(k), cols);
  return Mat::column(x);
}

Mat inverse(const Mat& a) {
  if (!a.is_square()) throw Error(ErrorKind::ShapeMismatch, "inverse of non-square matrix");
  require_field(a.ring(), "inverse");
  int n = a.rows();
  std::vector<Scalar> es;
  es.reserve(size_t(n) * 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) es.push_back(a.at(i, j));
    for (int j = 0; j < n; ++j) es.push_back(Scalar(i == j ? 1 : 0).promote(a.ring()));
  }
  Echelon e = reduced_row_echelon(Mat(n, 2 * n, std::move(es)));
  if (e.rank != n) throw Error(ErrorKind::ZeroInverse, "singular matrix");
  std::vector<Scalar> out;
  out.reserve(size_t(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.push_back(e.rref.at(i, n + j));
  return Mat(n, n, std::move(out));
}

namespace {
Scalar det_laplace(const Mat& a) {
  int n = a.rows();
  if (n == 0) return Scalar(1).promote(a.ring());
  if (n == 1) return a.at(0, 0);
  Scalar acc = Scalar(0).promote(a.ring());
  for (int j = 0; j < n; ++j) {
    if (a.at(0, j).is_zero()) continue;
    std::vector<Scalar> minor;
    minor.reserve(size_t(n - 1) * (n - 1));
    for (int i = 1; i < n; ++i)
      for (int k = 0; k < n; ++k)
        if (k != j) minor.push_back(a.at(i, k));
    Scalar term = a.at(0, j) * det_laplace(Mat(n - 1, n - 1, std::move(minor)));
    acc += (j % 2 == 0) ? term : -term;
  }
  return acc;
}

Scalar det_eliminate(const Mat& a) {
  int n = a.rows();
  std::vector<Scalar> w = a.entries();
  auto at = [&](int i, int j) -> Scalar& { return w[size_t(i) * n + j]; };
  Scalar d = Scalar(1).promote(a.ring());
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int i = col; i < n; ++i)
      if (!at(i, col).is_zero()) {
        pivot = i;
        break;
      }
    if (pivot < 0) return Scalar(0).promote(a.ring());
    if (pivot != col) {
      for (int j = 0; j < n; ++j) std::swap(at(col, j), at(pivot, j));
      d = -d;
    }
    d = d * at(col, col);
    Scalar piv_inv = inv(at(col, col));
    for (int i = col + 1; i < n; ++i) {
      if (at(i, col).is_zero()) continue;
      Scalar f = at(i, col) * piv_inv;
      for (int j = col; j < n; ++j) at(i, j) = at(i, j) - f * at(col, j);
    }
  }
  return d;
}
}  // namespace

Scalar det(const Mat& a) {
  if (!a.is_square()) throw Error(ErrorKind::ShapeMismatch, "det of non-square matrix");
  if (a.ring() == Ring::Poly) return det_laplace(a);
  return det_eliminate(a);
}

bool is_nilpotent(const Mat& n) {
  if (!n.is_square()) throw Error(ErrorKind::ShapeMismatch, "nilpotency of non-square matrix");
  Mat p = n;
  for (int k = 1; k <= n.rows(); ++k) {
    if (p.is_zero()) return true;
    p = p * n;
  }
  return p.is_zero();
}

std::vector<int> nilpotent_profile(const Mat& n) {
  if (!is_nilpotent(n)) throw Error(ErrorKind::NotNilpotent, "nilpotent_profile");
  int dim = n.rows();
  // r[k] = rank(N^k); number of Jordan blocks of size >= k is r[k-1] - r[k].
  std::vector<int> r;
  Mat p = Mat::identity(dim, n.ring());
  r.push_back(dim);
  while (r.back() > 0) {
    p = p * n;
    r.push_back(rank(p));
  }
  std::vector<int> profile;
  for (size_t k = 1; k < r.size(); ++k) {
    int at_least_k = r[k - 1] - r[k];
    int at_least_k1 = (k + 1 < r.size()) ? r[k] - r[k + 1] : 0;
    for (int c = 0; c < at_least_k - at_least_k1; ++c) profile.push_back(int(k));
  }
  std::sort(profile.rbegin(), profile.rend());
  return profile;
}

Mat unipotent_log(const Mat& m) {
  if (!m.is_square()) throw Error(ErrorKind::ShapeMismatch, "log of non-square matrix");
  Mat n = m - Mat::identity(m.rows(), m.ring());
  if (!is_nilpotent(n)) throw Error(ErrorKind::NotUnipotent, "unipotent_log");
  Mat acc(m.rows(), m.rows(), n.ring());
  Mat p = Mat::identity(m.rows(), n.ring());
  for (int k = 1; k <= m.rows(); ++k) {
    p = p * n;
    if (p.is_zero()) break;
    Scalar coeff = Scalar(Rational(k % 2 == 1 ? 1 : -1, k));
    acc = acc + coeff * p;
  }
  return acc;
}

Mat nilpotent_exp(const Mat& n) {
  if (!n.is_square()) throw Error(ErrorKind::ShapeMismatch, "exp of non-square matrix");
  if (!is_nilpotent(n)) throw Error(ErrorKind::NotNilpotent, "nilpotent_exp");
  Mat acc = Mat::identity(n.rows(), n.ring());
  Mat p = Mat::identity(n.rows(), n.ring());
  Rational fact(1);
  for (int k = 1; k <= n.rows(); ++k) {
    p = p * n;
    if (p.is_zero()) break;
    fact = fact * Rational(k);
    acc = acc + Scalar(fact.inv()) * p;
  }
  return acc;
}

}  // namespace cylie
