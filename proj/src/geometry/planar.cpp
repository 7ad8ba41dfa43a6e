#include "planar.hpp"

#include "curvebraid/path.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace curvebraid::detail {

std::vector<PolylineHit> intersect_polylines(const std::vector<Complex> &a,
                                             const std::vector<Complex> &b) {
  std::vector<PolylineHit> hits;
  const int na = static_cast<int>(a.size()) - 1;
  const int nb = static_cast<int>(b.size()) - 1;
  for (int i = 0; i < na; ++i) {
    const Complex p = a[i];
    const Complex d1 = a[i + 1] - p;
    const double la = std::abs(d1);
    if (la == 0.0)
      continue;
    const double amin_x = std::min(p.real(), a[i + 1].real());
    const double amax_x = std::max(p.real(), a[i + 1].real());
    const double amin_y = std::min(p.imag(), a[i + 1].imag());
    const double amax_y = std::max(p.imag(), a[i + 1].imag());
    for (int j = 0; j < nb; ++j) {
      const Complex q = b[j];
      const Complex d2 = b[j + 1] - q;
      if (std::max(q.real(), b[j + 1].real()) < amin_x || std::min(q.real(), b[j + 1].real()) > amax_x ||
          std::max(q.imag(), b[j + 1].imag()) < amin_y || std::min(q.imag(), b[j + 1].imag()) > amax_y)
        continue;
      const double lb = std::abs(d2);
      const double denom = cross(d1, d2);
      if (lb == 0.0 || std::abs(denom) <= 1e-14 * la * lb)
        continue;
      const double s = cross(q - p, d2) / denom;
      const double r = cross(q - p, d1) / denom;
      // Half-open on each segment so shared vertices count once.
      const bool s_ok = s >= 0.0 && (s < 1.0 || (i == na - 1 && s <= 1.0));
      const bool r_ok = r >= 0.0 && (r < 1.0 || (j == nb - 1 && r <= 1.0));
      if (!s_ok || !r_ok)
        continue;
      hits.push_back({i + s, j + r, p + s * d1, std::abs(denom) / (la * lb), denom > 0.0 ? 1 : -1});
    }
  }
  return hits;
}

std::vector<double> cumulative_length(const std::vector<Complex> &pts) {
  std::vector<double> c(pts.size(), 0.0);
  for (std::size_t k = 1; k < pts.size(); ++k)
    c[k] = c[k - 1] + std::abs(pts[k] - pts[k - 1]);
  return c;
}

Complex point_at(const std::vector<Complex> &pts, double pos) {
  const int last = static_cast<int>(pts.size()) - 1;
  int k = std::clamp(static_cast<int>(std::floor(pos)), 0, std::max(0, last - 1));
  if (last == 0)
    return pts.front();
  const double u = pos - k;
  return pts[k] + u * (pts[k + 1] - pts[k]);
}

Complex tangent_at(const std::vector<Complex> &pts, double pos) {
  const int last = static_cast<int>(pts.size()) - 1;
  int k = std::clamp(static_cast<int>(std::floor(pos)), 0, std::max(0, last - 1));
  const Complex d = pts[k + 1] - pts[k];
  return d / std::abs(d);
}

std::vector<Complex> slice(const std::vector<Complex> &pts, double from, double to) {
  std::vector<Complex> out{point_at(pts, from)};
  for (int k = static_cast<int>(std::floor(from)) + 1; k < to; ++k)
    out.push_back(pts[k]);
  const Complex last = point_at(pts, to);
  if (std::abs(last - out.back()) > 0.0)
    out.push_back(last);
  return out;
}

double midpoint_position(const std::vector<Complex> &pts) {
  const auto c = cumulative_length(pts);
  const double half = 0.5 * c.back();
  for (std::size_t k = 1; k < c.size(); ++k) {
    if (c[k] >= half && c[k] > c[k - 1])
      return double(k - 1) + (half - c[k - 1]) / (c[k] - c[k - 1]);
  }
  return 0.0;
}

double distance_to_polyline(Complex p, const std::vector<Complex> &pts) {
  if (pts.size() == 1)
    return std::abs(p - pts.front());
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t k = 1; k < pts.size(); ++k)
    best = std::min(best, distance_to_segment(p, pts[k - 1], pts[k]));
  return best;
}

bool polygon_contains(const std::vector<Complex> &polygon, Complex p) {
  bool inside = false;
  const std::size_t n = polygon.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Complex a = polygon[i];
    const Complex b = polygon[j];
    if ((a.imag() > p.imag()) != (b.imag() > p.imag())) {
      const double x = a.real() + (p.imag() - a.imag()) * (b.real() - a.real()) / (b.imag() - a.imag());
      if (p.real() < x)
        inside = !inside;
    }
  }
  return inside;
}

} // namespace curvebraid::detail
