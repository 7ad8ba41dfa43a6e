#include "curvebraid/path.hpp"

#include "curvebraid/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace curvebraid {

PlanePath::PlanePath(std::vector<Complex> vertices, bool closed)
    : vertices_(std::move(vertices)), closed_(closed) {
  if (vertices_.empty())
    throw Error(ErrorCode::InvalidInput, "path needs at least one vertex");
  for (const auto &v : vertices_) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw Error(ErrorCode::InvalidInput, "non-finite path vertex");
  }
  if (closed_ && vertices_.size() > 1 && vertices_.front() == vertices_.back())
    vertices_.pop_back();
  const auto pts = polyline();
  cumulative_.assign(pts.size(), 0.0);
  for (std::size_t k = 1; k < pts.size(); ++k)
    cumulative_[k] = cumulative_[k - 1] + std::abs(pts[k] - pts[k - 1]);
}

PlanePath PlanePath::circle(Complex center, double radius, int samples, double start_angle) {
  if (samples < 3 || !(radius > 0.0))
    throw Error(ErrorCode::InvalidInput, "circle needs radius > 0 and at least 3 samples");
  std::vector<Complex> v(samples);
  for (int k = 0; k < samples; ++k)
    v[k] = center + std::polar(radius, start_angle + 2.0 * std::numbers::pi * k / samples);
  return PlanePath(std::move(v), true);
}

std::vector<Complex> PlanePath::polyline() const {
  std::vector<Complex> pts = vertices_;
  if (closed_ && pts.size() > 1)
    pts.push_back(pts.front());
  return pts;
}

Complex PlanePath::at(double t) const {
  const auto pts = polyline();
  if (pts.size() == 1 || length() == 0.0)
    return pts.front();
  const double s = std::clamp(t, 0.0, 1.0) * length();
  auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), s);
  std::size_t k = static_cast<std::size_t>(std::distance(cumulative_.begin(), it));
  if (k >= pts.size())
    return pts.back();
  if (k == 0)
    return pts.front();
  const double seg = cumulative_[k] - cumulative_[k - 1];
  const double u = seg > 0.0 ? (s - cumulative_[k - 1]) / seg : 0.0;
  return pts[k - 1] + u * (pts[k] - pts[k - 1]);
}

PlanePath PlanePath::reversed() const {
  auto pts = polyline();
  std::reverse(pts.begin(), pts.end());
  if (closed_)
    pts.pop_back();
  return PlanePath(std::move(pts), closed_);
}

PlanePath PlanePath::then(const PlanePath &other) const {
  auto pts = polyline();
  const auto more = other.polyline();
  if (std::abs(pts.back() - more.front()) > 1e-12 * (1.0 + std::abs(pts.back())))
    throw Error(ErrorCode::InvalidInput, "paths do not join");
  pts.insert(pts.end(), more.begin() + 1, more.end());
  return PlanePath(std::move(pts), false);
}

double PlanePath::signed_area() const {
  if (!closed_)
    return 0.0;
  double acc = 0.0;
  const std::size_t n = vertices_.size();
  for (std::size_t k = 0; k < n; ++k) {
    const Complex a = vertices_[k];
    const Complex b = vertices_[(k + 1) % n];
    acc += a.real() * b.imag() - b.real() * a.imag();
  }
  return acc;
}

PlanePath PlanePath::counter_clockwise() const {
  if (!closed_ || signed_area() >= 0.0)
    return *this;
  auto v = vertices_;
  std::reverse(v.begin() + 1, v.end());
  return PlanePath(std::move(v), true);
}

bool PlanePath::contains(Complex p) const {
  if (!closed_)
    return false;
  bool inside = false;
  const std::size_t n = vertices_.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Complex a = vertices_[i];
    const Complex b = vertices_[j];
    if ((a.imag() > p.imag()) != (b.imag() > p.imag())) {
      const double x = a.real() + (p.imag() - a.imag()) * (b.real() - a.real()) / (b.imag() - a.imag());
      if (p.real() < x)
        inside = !inside;
    }
  }
  return inside;
}

double distance_to_segment(Complex p, Complex a, Complex b) {
  const Complex d = b - a;
  const double len2 = std::norm(d);
  if (len2 == 0.0)
    return std::abs(p - a);
  const double u = std::clamp(((p - a) * std::conj(d)).real() / len2, 0.0, 1.0);
  return std::abs(p - (a + u * d));
}

double PlanePath::distance_to(Complex p) const {
  const auto pts = polyline();
  if (pts.size() == 1)
    return std::abs(p - pts.front());
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t k = 1; k < pts.size(); ++k)
    best = std::min(best, distance_to_segment(p, pts[k - 1], pts[k]));
  return best;
}

} // namespace curvebraid
