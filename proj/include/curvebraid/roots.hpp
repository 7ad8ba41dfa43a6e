#pragma once

#include "curvebraid/poly.hpp"

#include <vector>

namespace curvebraid {

struct RootOptions {
  double residual_tol = 1e-10;
  double cluster_tol = 1e-7;
  int max_iterations = 500;
};

/// All complex roots with multiplicity, sorted by real part (ties by imaginary part).
/// Roots closer than cluster_tol are replaced by their common mean.
/// Throws Error(NonConvergence) if the simultaneous iteration stalls.
std::vector<Complex> roots_univariate(const UniPoly &p, const RootOptions &opts = {});
std::vector<Complex> roots_univariate(const UniPoly &p, double tol);

/// Sorts by real part; entries whose real parts agree within rel_tol are ordered by imaginary part.
void sort_by_real_part(std::vector<Complex> &values, double rel_tol = 1e-12);

/// Groups of consecutive sorted positions whose values lie within cluster_tol of each other.
std::vector<std::vector<int>> root_clusters(const std::vector<Complex> &sorted_roots,
                                            double cluster_tol);

} // namespace curvebraid
