#ifndef CYLIE_MATRIX_HPP
#define CYLIE_MATRIX_HPP

#include <initializer_list>
#include <optional>
#include <vector>

#include "cylie/scalar.hpp"

namespace cylie {

// Dense matrix over one of the exact scalar rings. Entries are kept in a
// single common ring; constructing from mixed entries promotes upward
// along Rational < Gauss < {Tower, Poly} and rejects Tower/Poly mixes.
// Value type: no public operation mutates in place.
class Mat {
public:
  Mat() : rows_(0), cols_(0), ring_(Ring::Rational) {}
  Mat(int rows, int cols, Ring ring = Ring::Rational);
  Mat(int rows, int cols, std::vector<Scalar> entries);
  Mat(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Mat identity(int n, Ring ring = Ring::Rational);
  static Mat diagonal(const std::vector<Scalar>& d);
  static Mat column(const std::vector<Scalar>& v);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Ring ring() const { return ring_; }
  bool is_square() const { return rows_ == cols_; }

  const Scalar& at(int i, int j) const { return entries_[size_t(i) * cols_ + j]; }
  Mat with_entry(int i, int j, const Scalar& v) const;

  const std::vector<Scalar>& entries() const { return entries_; }

  Mat promote(Ring r) const;

  bool is_zero() const;
  bool is_diagonal() const;

  Mat operator-() const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator*(const Mat& o) const;

  bool operator==(const Mat& o) const;
  bool operator!=(const Mat& o) const { return !(*this == o); }

  Mat transpose() const;
  Mat conj_entries() const;

  // A^k for k >= 0.
  Mat pow(int k) const;

  std::string str() const;

private:
  int rows_, cols_;
  Ring ring_;
  std::vector<Scalar> entries_;
};

Mat operator*(const Scalar& s, const Mat& m);

// AB - BA. Square, equal sizes.
Mat commutator(const Mat& a, const Mat& b);

// Kronecker product, (rows_a*rows_b) x (cols_a*cols_b).
Mat kron(const Mat& a, const Mat& b);

// Row-reduction artifacts for the field rings (Rational, Gauss, Tower).
struct Echelon {
  Mat rref;
  std::vector<int> pivot_cols;
  int rank = 0;
};

// Exact Gauss-Jordan with first-nonzero pivoting (deterministic; exact
// arithmetic needs no magnitude pivoting). UnsupportedRing for Poly.
Echelon reduced_row_echelon(const Mat& a);

// Basis of the right kernel {v : Av = 0}, as column vectors, one per free
// column of the RREF (free variable set to 1).
std::vector<Mat> kernel_basis(const Mat& a);

int rank(const Mat& a);

// Solves A x = b exactly. Returns nothing when inconsistent; when the
// system is underdetermined returns the solution with free variables 0.
std::optional<Mat> solve(const Mat& a, const Mat& b);

// Inverse of a square matrix over a field ring; throws ZeroInverse when
// singular.
Mat inverse(const Mat& a);

// Determinant: fraction-based elimination over field rings, Laplace
// expansion over the polynomial ring.
Scalar det(const Mat& a);

// Jordan block sizes of a nilpotent matrix, descending. NotNilpotent when
// N^dim != 0.
std::vector<int> nilpotent_profile(const Mat& n);

// log of a unipotent matrix (finite series). NotUnipotent when M - I is
// not nilpotent.
Mat unipotent_log(const Mat& m);

// exp of a nilpotent matrix (finite series). NotNilpotent otherwise.
Mat nilpotent_exp(const Mat& n);

bool is_nilpotent(const Mat& n);

}  // namespace cylie

#endif
