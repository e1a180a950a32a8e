#ifndef CYLIE_GX_FAMILY_HPP
#define CYLIE_GX_FAMILY_HPP

#include "cylie/lie_tools.hpp"

namespace cylie {

// The symbolic generator triple of the exotic 3-dimensional family:
//   t = diag(3i, i, -i, -3i)
//   u = off-diagonal 1s with x, xbar in the middle
//   v = off-diagonal +-i with y, ybar in the middle (y = ix once the
//       closure constraint is imposed)
struct GxGenerators {
  Mat t;
  Mat u;
  Mat v;
};

// substitute_y: replace the independent y by ix (the derived relation).
GxGenerators gx_symbolic(bool substitute_y = false);

// Polynomials required to vanish for the span to close into a Lie
// algebra.
struct ConstraintSet {
  std::vector<Poly> polys;
};

// Computes [v, u] symbolically and extracts the closure constraints:
// the off-pattern entry forces y = ix, the diagonal consistency forces
// xbar y - x ybar = (8/3) i, which after y = ix becomes x xbar = 4/3.
// Returns {y - ix, x*xbar - 4/3}.
ConstraintSet derive_constraints();

// The instantiated algebra at a concrete tower value with |x|^2 = 4/3
// exactly (ConstraintViolated otherwise): span{t, u(x), v(ix)}.
Subalgebra gx_instantiate(const Tower& x_val, const HodgeFrame& frame);

// The no-square-zero certificate behind the Jordan-block bound: for
// M = a t + b u + c v with real symbolic a, b, c,
//   - entry (1,2) of M^2 equals 4 a i (b + c i), so M^2 = 0 forces a = 0
//     or b + ci = 0;
//   - at a = 0, entry (1,1) of M^2 is the positive-definite form b^2 +
//     c^2, so b = c = 0;
//   - at b = c = 0, M^2 = a^2 diag(-9, -1, -1, -9) != 0 for a != 0.
// True when all three steps verify symbolically.
bool nilpotent_square_check(const Subalgebra& g);

}  // namespace cylie

#endif
