#pragma once

#include "curvebraid/config.hpp"
#include "curvebraid/path.hpp"
#include "curvebraid/poly.hpp"

#include <vector>

namespace curvebraid {

/// The roots of f(z, .) indexed by increasing real part (ties by imaginary part).
struct Fiber {
  Complex z;
  std::vector<Complex> roots;
  /// Sorted positions (0-based) that form multiple-root clusters; singletons omitted.
  std::vector<std::vector<int>> clusters;
};

/// Throws Error(DegenerateLeadingCoeff) if |f_0(z)| falls below the leading-coefficient tolerance.
Fiber fiber_at(const BivariatePoly &f, Complex z, const Tolerances &tol = {});

struct TrackOptions {
  Tolerances tol;
  double max_step = 0.01;        // in z units
  int max_newton = 5;            // corrections needing more iterations halve the step
  double min_step_fraction = 1e-9;
  double separation_fraction = 0.25; // max strand displacement relative to strand spacing
};

struct StrandSample {
  double t;
  Complex z;
  /// Continuity-matched strand positions; index = strand, not sorted order.
  std::vector<Complex> w;
};

class StrandSheet {
public:
  StrandSheet(BivariatePoly curve, PlanePath path, TrackOptions opts,
              std::vector<StrandSample> samples)
      : curve_(std::move(curve)), path_(std::move(path)), opts_(opts),
        samples_(std::move(samples)) {}

  const BivariatePoly &curve() const { return curve_; }
  const PlanePath &path() const { return path_; }
  const TrackOptions &options() const { return opts_; }
  const std::vector<StrandSample> &samples() const { return samples_; }
  int strands() const { return samples_.empty() ? 0 : static_cast<int>(samples_.front().w.size()); }

  /// end_match()[k] = sorted position (0-based) of strand k's endpoint in fiber_at(end).
  std::vector<int> end_match() const;

private:
  BivariatePoly curve_;
  PlanePath path_;
  TrackOptions opts_;
  std::vector<StrandSample> samples_;
};

/// Predictor-corrector continuation of the fiber along path. Strand k starts at sorted
/// position k of fiber_at(start).
StrandSheet track_path(const BivariatePoly &f, const PlanePath &path, const TrackOptions &opts = {});

struct CrossingEvent {
  double t;
  int index; // 1-based lower sorted position of the swapping pair
  int sign;  // +1 when the strand moving up in real-part order passes below in imaginary part
  bool operator==(const CrossingEvent &) const = default;
};

/// Real-part order swaps of sorted-adjacent strands, in order of t.
std::vector<CrossingEvent> crossings(const StrandSheet &sheet);

/// Sorted order (strand indices by increasing real part) of a sample.
std::vector<int> sorted_strand_order(const std::vector<Complex> &w);

} // namespace curvebraid
