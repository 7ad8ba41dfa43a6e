#include "curvebraid/roots.hpp"

#include "curvebraid/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

namespace curvebraid {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Starting points on a circle around the centroid of the roots, radius from the
// geometric mean of |a_0/a_n|, angles jittered by a fixed-seed generator.
std::vector<Complex> initial_guesses(const UniPoly &p) {
  const int n = p.degree();
  const Complex lead = p.leading();
  const Complex center = -p[n - 1] / (static_cast<double>(n) * lead);

  // Cauchy-type bound on |root - center| from the shifted polynomial magnitudes.
  double radius = 0.0;
  for (int k = 0; k < n; ++k) {
    const double ratio = std::abs(p[k] / lead);
    if (ratio > 0.0)
      radius = std::max(radius, std::pow(ratio, 1.0 / (n - k)));
  }
  radius = std::max(radius, 1e-3);
  radius = std::max(radius - std::abs(center), 0.5 * radius);

  std::mt19937_64 rng(0x5eedULL + static_cast<unsigned>(n));
  std::uniform_real_distribution<double> jitter(-0.25, 0.25);
  std::vector<Complex> z(n);
  const double offset = 0.4;
  for (int k = 0; k < n; ++k) {
    const double angle = 2.0 * std::numbers::pi * (k + jitter(rng)) / n + offset;
    z[k] = center + std::polar(radius, angle);
  }
  return z;
}

std::vector<Complex> merge_clusters(std::vector<Complex> roots, double cluster_tol) {
  sort_by_real_part(roots);
  const int n = static_cast<int>(roots.size());
  // Union-find over pairs closer than the cluster tolerance; a cluster need not be
  // contiguous in real-part order, so compare all pairs.
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i)
    parent[i] = i;
  auto find = [&](int i) {
    while (parent[i] != i)
      i = parent[i] = parent[parent[i]];
    return i;
  };
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double scale = std::max(1.0, std::max(std::abs(roots[i]), std::abs(roots[j])));
      if (std::abs(roots[i] - roots[j]) <= cluster_tol * scale)
        parent[find(i)] = find(j);
    }
  }
  std::vector<Complex> sum(n);
  std::vector<int> count(n, 0);
  for (int i = 0; i < n; ++i) {
    sum[find(i)] += roots[i];
    ++count[find(i)];
  }
  for (int i = 0; i < n; ++i)
    roots[i] = sum[find(i)] / static_cast<double>(count[find(i)]);
  sort_by_real_part(roots);
  return roots;
}

} // namespace

void sort_by_real_part(std::vector<Complex> &values, double rel_tol) {
  std::sort(values.begin(), values.end(), [](Complex a, Complex b) {
    if (a.real() != b.real())
      return a.real() < b.real();
    return a.imag() < b.imag();
  });
  // Real parts equal up to rounding: order by imaginary part instead.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k + 1 < values.size(); ++k) {
      const Complex a = values[k];
      const Complex b = values[k + 1];
      const double scale = std::max(1.0, std::max(std::abs(a), std::abs(b)));
      if (std::abs(a.real() - b.real()) <= rel_tol * scale && b.imag() < a.imag()) {
        std::swap(values[k], values[k + 1]);
        changed = true;
      }
    }
  }
}

std::vector<std::vector<int>> root_clusters(const std::vector<Complex> &sorted_roots,
                                            double cluster_tol) {
  const int n = static_cast<int>(sorted_roots.size());
  std::vector<int> owner(n, -1);
  std::vector<std::vector<int>> clusters;
  for (int i = 0; i < n; ++i) {
    if (owner[i] >= 0)
      continue;
    owner[i] = static_cast<int>(clusters.size());
    clusters.push_back({i});
    for (int j = i + 1; j < n; ++j) {
      const double scale =
          std::max(1.0, std::max(std::abs(sorted_roots[i]), std::abs(sorted_roots[j])));
      if (owner[j] < 0 && std::abs(sorted_roots[i] - sorted_roots[j]) <= cluster_tol * scale) {
        owner[j] = owner[i];
        clusters.back().push_back(j);
      }
    }
  }
  return clusters;
}

std::vector<Complex> roots_univariate(const UniPoly &p, double tol) {
  RootOptions opts;
  opts.residual_tol = tol;
  return roots_univariate(p, opts);
}

std::vector<Complex> roots_univariate(const UniPoly &p, const RootOptions &opts) {
  const int n = p.degree();
  if (n < 1)
    throw Error(ErrorCode::InvalidInput, "roots_univariate requires degree >= 1");
  if (n == 1)
    return {-p[0] / p[1]};

  const UniPoly dp = p.derivative();
  std::vector<Complex> z = initial_guesses(p);
  std::vector<bool> frozen(n, false);

  int iter = 0;
  for (; iter < opts.max_iterations; ++iter) {
    bool all_frozen = true;
    for (int k = 0; k < n; ++k) {
      if (frozen[k])
        continue;
      const Complex pv = p(z[k]);
      // Residual already at rounding level: nothing left to gain.
      if (std::abs(pv) <= 4.0 * kEps * p.scale_at(z[k])) {
        frozen[k] = true;
        continue;
      }
      const Complex ratio = pv / dp(z[k]);
      Complex repulsion{};
      for (int j = 0; j < n; ++j) {
        if (j != k)
          repulsion += 1.0 / (z[k] - z[j]);
      }
      Complex step = ratio / (1.0 - ratio * repulsion);
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag()))
        step = ratio;
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag()))
        step = Complex{1e-3 * (1.0 + std::abs(z[k])), 0.0};
      z[k] -= step;
      if (std::abs(step) <= 2.0 * kEps * std::max(1.0, std::abs(z[k])))
        frozen[k] = true;
      else
        all_frozen = false;
    }
    if (all_frozen)
      break;
  }

  // Roots near zero make scale_at vanish with them; the coefficient size is the floor.
  double coeff_max = 0.0;
  for (const auto &c : p.coeffs())
    coeff_max = std::max(coeff_max, std::abs(c));
  for (int k = 0; k < n; ++k) {
    const double residual = std::abs(p(z[k]));
    if (!(residual <= opts.residual_tol * std::max(p.scale_at(z[k]), coeff_max)))
      throw Error(ErrorCode::NonConvergence,
                  "root iteration did not reach the residual bound (degree " +
                      std::to_string(n) + ")");
  }
  return merge_clusters(std::move(z), opts.cluster_tol);
}

} // namespace curvebraid
