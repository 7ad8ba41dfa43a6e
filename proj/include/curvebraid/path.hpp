#pragma once

#include "curvebraid/poly.hpp"

#include <vector>

namespace curvebraid {

/// Polyline in the z-plane. A closed path returns to its first vertex implicitly.
class PlanePath {
public:
  PlanePath() = default;
  PlanePath(std::vector<Complex> vertices, bool closed);

  static PlanePath segment(Complex a, Complex b) { return PlanePath({a, b}, false); }
  /// Counter-clockwise circle starting at center + radius * e^{i start_angle}.
  static PlanePath circle(Complex center, double radius, int samples, double start_angle = 0.0);

  const std::vector<Complex> &vertices() const { return vertices_; }
  bool closed() const { return closed_; }
  double length() const { return cumulative_.empty() ? 0.0 : cumulative_.back(); }

  /// Point at normalized arc-length parameter t in [0, 1].
  Complex at(double t) const;
  /// Vertices including the closing vertex for closed paths.
  std::vector<Complex> polyline() const;

  PlanePath reversed() const;
  /// Concatenation; the first vertex of other must coincide with the end of this path.
  PlanePath then(const PlanePath &other) const;

  /// Twice the signed area (positive when counter-clockwise); 0 for open paths.
  double signed_area() const;
  PlanePath counter_clockwise() const;

  bool contains(Complex p) const;
  double distance_to(Complex p) const;

private:
  std::vector<Complex> vertices_;
  bool closed_ = false;
  std::vector<double> cumulative_;
};

double distance_to_segment(Complex p, Complex a, Complex b);

} // namespace curvebraid
