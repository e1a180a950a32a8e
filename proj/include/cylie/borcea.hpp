#ifndef CYLIE_BORCEA_HPP
#define CYLIE_BORCEA_HPP

#include <string>
#include <vector>

#include "cylie/matrix.hpp"

namespace cylie {

// The 8 tensor labels a1(*)a2(*)a3 ... b1(*)b2(*)b3 in the fixed order
// (a-major in each factor).
std::vector<std::string> tensor_basis_labels();

// Local monodromy of the Legendre family around 0: [[1, 2], [0, 1]].
Mat legendre_monodromy();

// r log(A (x) I (x) I) + s log(I (x) A (x) I) + t log(I (x) I (x) A) on
// the tensor basis, A the Legendre monodromy.
Mat borcea_nilpotent(const Rational& r, const Rational& s, const Rational& t);

// Same matrix with symbolic coefficients r, s, t.
Mat borcea_nilpotent_symbolic();

// True iff N^3 != 0 and N^4 = 0, the weight-3 maximal-unipotency
// criterion. NotNilpotent when N is not nilpotent at all.
bool max_unipotent_check(const Mat& n);

// The symmetrized cubes {e1^3, e1^2 e2 orbit, e1 e2^2 orbit, e2^3} as
// coordinate vectors in the 8-dimensional tensor space.
std::vector<Mat> sym_basis_vectors();

// Action of a 2x2 matrix on the third symmetric power, as the explicit
// 4x4 matrix of cubic polynomials in the entries.
Mat sym3_matrix(const Mat& m);

// sym3_matrix(A B) = sym3_matrix(A) sym3_matrix(B).
bool sym3_hom_check(const Mat& a, const Mat& b);

// The Kronecker cube maps the symmetric subspace to itself and induces
// exactly sym3_matrix on it.
bool sym3_restriction_check(const Mat& m);

struct Sym3Identities {
  std::vector<std::pair<std::string, bool>> identities;
  bool all_hold = false;
};

// Symbolic identities of r(M) over Q[a,b,c,d]: det r(M) = (ad - bc)^6,
// the printed cube identity for the (2,2) entry, and its three analogues
// for (2,3), (3,2), (3,3).
Sym3Identities sym3_polynomial_identities();

}  // namespace cylie

#endif
