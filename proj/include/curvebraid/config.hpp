#pragma once

namespace curvebraid {

/// Every floating tolerance used by the numerical stages.
struct Tolerances {
  double root_residual = 1e-10;   // |p(root)| relative to the evaluation scale
  double cluster = 1e-7;          // roots closer than this form a multiple-root cluster
  double coincidence = 1e-6;      // real-part coincidence on B+ arcs
  double branch_clearance = 1e-4; // minimal distance of tracked paths from branch points
  double leading_coeff = 1e-12;   // f_0(z) below this means the fiber escapes to infinity
};

} // namespace curvebraid
