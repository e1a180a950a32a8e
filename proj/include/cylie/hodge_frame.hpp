#ifndef CYLIE_HODGE_FRAME_HPP
#define CYLIE_HODGE_FRAME_HPP

#include <array>
#include <string>
#include <utility>

#include "cylie/matrix.hpp"

namespace cylie {

// The four Hodge-type basis labels of the weight-3 space.
enum class Label : int { v30 = 0, v21 = 1, v12 = 2, v03 = 3 };

const char* label_name(Label l);
Label label_from_name(const std::string& s);

// Complex conjugation pairing on labels: v30 <-> v03, v21 <-> v12.
Label label_conj(Label l);

// A permutation of the four labels. The literature freely mixes several of
// these, so every form/operator carries its ordering explicitly.
class BasisOrdering {
public:
  BasisOrdering(std::array<Label, 4> labels);

  static BasisOrdering canonical() {
    return BasisOrdering({Label::v30, Label::v21, Label::v12, Label::v03});
  }

  Label at(int i) const { return labels_[i]; }
  int index_of(Label l) const;

  // Index involution induced by the conjugation pairing.
  int conj_index(int i) const { return index_of(label_conj(labels_[i])); }

  bool operator==(const BasisOrdering& o) const { return labels_ == o.labels_; }

private:
  std::array<Label, 4> labels_;
};

// Permutation matrix P with coords_to = P * coords_from.
Mat change_of_basis(const BasisOrdering& from, const BasisOrdering& to);

// Operator reindexing M -> P M P^T.
Mat reorder_operator(const Mat& m, const BasisOrdering& from, const BasisOrdering& to);

// Bilinear form reindexing q -> P q P^T with P = change_of_basis(to, from).
Mat reorder_form(const Mat& q, const BasisOrdering& from, const BasisOrdering& to);

// The cup-product symplectic form with Q(i v30, v03) = Q(-i v21, v12) = 1,
// expressed in the requested ordering.
Mat q_matrix(const BasisOrdering& ordering);

// Basis ordering, alternating form and conjugation pairing fixed once and
// shared by every computation.
struct HodgeFrame {
  BasisOrdering ordering;
  Mat q;

  static HodgeFrame canonical();
  static HodgeFrame with_ordering(const BasisOrdering& ordering);

  int conj_index(int i) const { return ordering.conj_index(i); }
};

enum class CircleKind { hX, hW, hG };

// Diagonal one-parameter subgroups encoding the weight-3 Hodge structure
// (hX) and the two intermediate-Jacobian weight-1 structures (hW, hG), in
// the canonical ordering:
//   hX(z) = diag(z^3, z, zbar, zbar^3)
//   hW(z) = diag(z, zbar, z, zbar)
//   hG(z) = diag(z, z, zbar, zbar)
// Requires |z|^2 = 1 exactly (NotUnitNorm otherwise).
Mat circle_action(CircleKind kind, const Gauss& z);

// True when M represents a real operator: m[s(i)][s(j)] = conj(m[i][j])
// for the frame's conjugation involution s.
bool is_real(const Mat& m, const HodgeFrame& frame);

enum class SpLevel { group, algebra };

// Group level: M^T Q M = Q and real. Algebra level: X^T Q + Q X = 0 and
// real.
bool in_sp(const Mat& m, const HodgeFrame& frame, SpLevel level);

// Sign counts of the Hermitian form H = i Q(., conj .) restricted to the
// span of the given labels. DegenerateForm if the restriction is singular.
std::pair<int, int> hermitian_signature(const HodgeFrame& frame, const std::vector<Label>& subspace);

// Signature of an arbitrary Hermitian Gram matrix by exact congruence
// (conjugate-linear in the second argument). DegenerateForm on singular
// input.
std::pair<int, int> hermitian_signature_of_gram(std::vector<std::vector<Gauss>> gram);

// Positivity of the symmetric form Q(J., .) on the fixed real chart
// {v30+v03, i(v30-v03), v21+v12, i(v21-v12)}; the Cartan involution
// criterion. A non-symmetric or non-real Gram reports false through
// *diagnostic.
bool positive_form_check(const Mat& j, const HodgeFrame& frame, std::string* diagnostic = nullptr);

// Real symplectic J with J^2 = -I.
bool complex_structure_check(const Mat& j, const HodgeFrame& frame);

// --- the fixed real chart -------------------------------------------------
// Columns of chart_basis: the real basis vectors expressed in the frame's
// complex coordinates. Conjugating by it turns real operators into honest
// rational (or real-tower) matrices.

Mat chart_basis(const HodgeFrame& frame);

// P^-1 M P; entries of a real operator land in the conj-fixed subfield.
Mat to_chart(const Mat& m, const HodgeFrame& frame);

// P M P^-1.
Mat from_chart(const Mat& m, const HodgeFrame& frame);

// to_chart flattened row-major into a 16x1 column.
Mat chart_vec(const Mat& m, const HodgeFrame& frame);

Mat chart_vec_of_chart(const Mat& chart_matrix);

// Pulls the matrix ring down as far as its entries allow (poly constants
// -> gauss, tower in Q(i) -> gauss, gauss with zero imaginary parts ->
// rational).
Mat demote(const Mat& m);

}  // namespace cylie

#endif
