#pragma once

#include "curvebraid/poly.hpp"

namespace curvebraid {

/// Determinant of the Sylvester matrix of f and g with respect to w, as a polynomial in z.
/// Computed by evaluation on a circle and interpolation; coefficients below 1e-12 of the
/// largest one are dropped.
UniPoly resultant_w(const BivariatePoly &f, const BivariatePoly &g);

/// resultant_w(f, partial_w(f)). No classical sign/leading-coefficient scaling is applied;
/// only the zero set is meaningful.
UniPoly discriminant_w(const BivariatePoly &f);

} // namespace curvebraid
