#pragma once

#include "gradlab/group_ring.hpp"
#include "gradlab/presentation.hpp"

namespace gradlab {

// Free differential calculus. fox_derivative is the unique map with
//   d(x_i)/dx_i = 1,   d(x_i^-1)/dx_i = -x_i^-1,   d(x_j^{+-1})/dx_i = 0,
// extended by the product rule d(uv) = du + u.dv. Computed by the prefix
// formula: a positive occurrence of x_i after the prefix u contributes +u,
// an inverse occurrence contributes -(u x_i^-1).
GroupRingElement fox_derivative(const Word& w, int generator);

// Relators x generators matrix of Fox derivatives. Together with the column
// (x_i - 1) it presents the augmentation ideal as a module over the group
// ring: every row satisfies sum_i (dr/dx_i) (x_i - 1) = r - 1.
GroupRingMatrix fox_jacobian(const Presentation& P);

}  // namespace gradlab
