#ifndef CYLIE_LIE_TOOLS_HPP
#define CYLIE_LIE_TOOLS_HPP

#include <map>
#include <tuple>
#include <vector>

#include "cylie/hodge_frame.hpp"

namespace cylie {

// A subspace of the real symplectic Lie algebra, held as a basis of
// matrices in the frame's complex coordinates together with their
// coordinate vectors in the fixed real chart. Basis elements must pass
// in_sp(algebra) and is_real and be linearly independent.
class Subalgebra {
public:
  static Subalgebra from_basis(std::vector<Mat> basis, const HodgeFrame& frame);

  int dim() const { return int(basis_.size()); }
  const std::vector<Mat>& basis() const { return basis_; }
  const HodgeFrame& frame() const { return frame_; }

  // 16 x dim matrix whose columns are the chart vectors of the basis.
  const Mat& coord_matrix() const { return coords_; }

  // Membership of a (real) matrix in the span, and its coordinates.
  bool contains(const Mat& m) const;
  std::optional<Mat> coordinates_of(const Mat& m) const;

  // The element with the given coordinate column.
  Mat element(const Mat& coeffs) const;

private:
  Subalgebra(std::vector<Mat> basis, Mat coords, HodgeFrame frame)
      : basis_(std::move(basis)), coords_(std::move(coords)), frame_(std::move(frame)) {}
  std::vector<Mat> basis_;
  Mat coords_;
  HodgeFrame frame_;
};

// Basis of the full real symplectic algebra sp(4): the 10-dimensional
// solution space of X^T Q + Q X = 0 among real operators, solved in the
// rational chart.
Subalgebra sp_basis(const HodgeFrame& frame);

// {X in ambient : [X, g] = 0 for every generator g}. Generators are real
// matrices at either group or algebra level.
Subalgebra centralizer(const std::vector<Mat>& gens, const Subalgebra& ambient);

// True when every [b_i, b_j] stays in the span.
bool closure_check(const Subalgebra& s);

// Derived subalgebra: the span of all brackets of basis elements.
Subalgebra derived_subalgebra(const Subalgebra& s);

// The elements supported on the block labels x labels (all other matrix
// entries zero). Gauss-coordinate subalgebras only.
Subalgebra subalgebra_supported_on(const Subalgebra& s, const std::vector<Label>& labels);

struct KillingData {
  Mat gram;  // dim x dim, rational for rational structure constants
  int pos = 0, neg = 0, zero = 0;
  bool semisimple = false;
};

// Killing form trace(ad x . ad y) via structure constants in the chart.
// NotClosed if the subalgebra is not bracket-closed.
KillingData killing(const Subalgebra& s);

// Signature (pos, neg, zero) of a symmetric matrix over a real field ring
// by exact congruence.
std::tuple<int, int, int> real_symmetric_signature(const Mat& gram);

// Eigenspace decomposition of ambient (x) C under ad(t) for a diagonal
// purely-imaginary t: character index k maps to a basis of the eigenspace
// with eigenvalue 2ik. The pieces together span ambient (x) C.
std::map<int, std::vector<Mat>> character_decomposition(const Mat& t, const Subalgebra& ambient);

// All complex structures J = diag(xi, zeta, conj zeta, conj xi) in the
// closed torus whose Lie algebra is spanned by the (simultaneously
// diagonal) basis of t. NotDiagonalTorus when the basis is not diagonal or
// not abelian.
std::vector<Mat> torus_complex_structures(const Subalgebra& t);

// Checks s = part1 (+) part2 as commuting ideals with trivial
// intersection.
bool verify_ideal_split(const Subalgebra& s, const Subalgebra& part1, const Subalgebra& part2);

}  // namespace cylie

#endif
