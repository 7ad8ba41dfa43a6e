#pragma once

#include "curvebraid/poly.hpp"

#include <vector>

namespace curvebraid::detail {

inline double cross(Complex a, Complex b) { return a.real() * b.imag() - a.imag() * b.real(); }

struct PolylineHit {
  double pos_a;  // segment index + fraction along polyline a
  double pos_b;  // same along polyline b
  Complex point;
  double sine;   // |sin| of the crossing angle
  int sign;      // sign of cross(direction of a, direction of b)
};

/// All proper crossings of two open polylines (given as explicit vertex lists).
std::vector<PolylineHit> intersect_polylines(const std::vector<Complex> &a,
                                             const std::vector<Complex> &b);

/// Cumulative arc length at each vertex.
std::vector<double> cumulative_length(const std::vector<Complex> &pts);

/// Point and unit tangent at polyline position (segment index + fraction).
Complex point_at(const std::vector<Complex> &pts, double pos);
Complex tangent_at(const std::vector<Complex> &pts, double pos);

/// Sub-polyline between two positions, endpoints included.
std::vector<Complex> slice(const std::vector<Complex> &pts, double from, double to);

/// Position of the arc-length midpoint.
double midpoint_position(const std::vector<Complex> &pts);

double distance_to_polyline(Complex p, const std::vector<Complex> &pts);
bool polygon_contains(const std::vector<Complex> &polygon, Complex p);

} // namespace curvebraid::detail
