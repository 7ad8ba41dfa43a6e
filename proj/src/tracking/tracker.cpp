#include "curvebraid/tracking.hpp"

#include "curvebraid/error.hpp"
#include "curvebraid/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace curvebraid {

Fiber fiber_at(const BivariatePoly &f, Complex z, const Tolerances &tol) {
  if (f.wdegree() < 1)
    throw Error(ErrorCode::InvalidInput, "curve has no w-dependence");
  if (std::abs(f.leading_coefficient()(z)) < tol.leading_coeff)
    throw Error(ErrorCode::DegenerateLeadingCoeff, "leading w-coefficient vanishes at this z");
  RootOptions ro;
  ro.residual_tol = tol.root_residual;
  ro.cluster_tol = tol.cluster;
  Fiber fib{z, roots_univariate(f.fiber_polynomial(z), ro), {}};
  for (auto &c : root_clusters(fib.roots, tol.cluster)) {
    if (c.size() > 1)
      fib.clusters.push_back(std::move(c));
  }
  return fib;
}

std::vector<int> sorted_strand_order(const std::vector<Complex> &w) {
  std::vector<Complex> sorted = w;
  sort_by_real_part(sorted);
  std::vector<int> order;
  std::vector<bool> used(w.size(), false);
  for (const auto &v : sorted) {
    for (std::size_t k = 0; k < w.size(); ++k) {
      if (!used[k] && w[k] == v) {
        used[k] = true;
        order.push_back(static_cast<int>(k));
        break;
      }
    }
  }
  return order;
}

std::vector<int> StrandSheet::end_match() const {
  const Fiber end = fiber_at(curve_, samples_.back().z, opts_.tol);
  std::vector<int> match;
  for (const auto &w : samples_.back().w) {
    int best = 0;
    for (int j = 1; j < static_cast<int>(end.roots.size()); ++j) {
      if (std::abs(end.roots[j] - w) < std::abs(end.roots[best] - w))
        best = j;
    }
    match.push_back(best);
  }
  return match;
}

namespace {

double min_separation(const std::vector<Complex> &w, int k) {
  double best = std::numeric_limits<double>::infinity();
  for (int j = 0; j < static_cast<int>(w.size()); ++j) {
    if (j != k)
      best = std::min(best, std::abs(w[j] - w[k]));
  }
  return best;
}

enum class StepOutcome { Accepted, Rejected, Collision };

struct StepResult {
  StepOutcome outcome;
  std::vector<Complex> w;
  int newton_iterations = 0;
};

StepResult attempt_step(const BivariatePoly &f, const std::vector<Complex> &w, Complex z0,
                        Complex z1, const TrackOptions &opts) {
  const int n = static_cast<int>(w.size());
  const Complex dz = z1 - z0;
  std::vector<Complex> pred(n), corr(n);
  for (int k = 0; k < n; ++k) {
    const Complex slope = -f.dz(z0, w[k]) / f.dw(z0, w[k]);
    pred[k] = w[k] + dz * slope;
  }

  int worst = 0;
  for (int k = 0; k < n; ++k) {
    Complex x = pred[k];
    int iters = 0;
    bool converged = false;
    while (iters <= opts.max_newton) {
      const Complex value = f(z1, x);
      if (std::abs(value) <= 1e-2 * opts.tol.root_residual * f.scale_at(z1, x)) {
        converged = true;
        break;
      }
      const Complex delta = value / f.dw(z1, x);
      x -= delta;
      ++iters;
      if (!std::isfinite(x.real()) || !std::isfinite(x.imag()))
        break;
      if (std::abs(delta) <= 1e-14 * (1.0 + std::abs(x))) {
        converged = std::abs(f(z1, x)) <= opts.tol.root_residual * f.scale_at(z1, x);
        break;
      }
    }
    if (!converged || iters > opts.max_newton)
      return {StepOutcome::Rejected, {}, iters};
    worst = std::max(worst, iters);
    corr[k] = x;
  }

  for (int k = 0; k < n; ++k) {
    for (int j = k + 1; j < n; ++j) {
      if (std::abs(corr[k] - corr[j]) <= 1e-9 * (1.0 + std::abs(corr[k])))
        return {StepOutcome::Collision, {}, worst};
    }
  }
  for (int k = 0; k < n; ++k) {
    if (n > 1 && std::abs(corr[k] - w[k]) > opts.separation_fraction * min_separation(w, k))
      return {StepOutcome::Rejected, {}, worst};
    // Collision guard: the nearest predictor must be this strand's, by a factor of two.
    const double own = std::abs(corr[k] - pred[k]);
    for (int j = 0; j < n; ++j) {
      if (j != k && std::abs(corr[k] - pred[j]) < 2.0 * own)
        return {StepOutcome::Rejected, {}, worst};
    }
  }
  return {StepOutcome::Accepted, std::move(corr), worst};
}

} // namespace

StrandSheet track_path(const BivariatePoly &f, const PlanePath &path, const TrackOptions &opts) {
  const Fiber start = fiber_at(f, path.at(0.0), opts.tol);
  if (!start.clusters.empty())
    throw Error(ErrorCode::MatchingAmbiguity, "path starts on a multiple root");

  std::vector<StrandSample> samples{{0.0, start.z, start.roots}};
  const double length = path.length();
  if (length == 0.0)
    return StrandSheet(f, path, opts, std::move(samples));

  const double max_h = std::min(1.0, opts.max_step / length);
  double h = max_h;
  double t = 0.0;
  while (t < 1.0) {
    const double t_new = std::min(1.0, t + h);
    const Complex z0 = samples.back().z;
    const Complex z1 = path.at(t_new);
    if (std::abs(f.leading_coefficient()(z1)) < opts.tol.leading_coeff)
      throw Error(ErrorCode::DegenerateLeadingCoeff, "fiber escapes to infinity along the path");

    StepResult step = attempt_step(f, samples.back().w, z0, z1, opts);
    if (step.outcome != StepOutcome::Accepted) {
      h *= 0.5;
      if (h < opts.min_step_fraction) {
        if (step.outcome == StepOutcome::Collision)
          throw Error(ErrorCode::MatchingAmbiguity, "strands collide along the path");
        throw Error(ErrorCode::StepCollapse,
                    "continuation step collapsed near t=" + std::to_string(t) +
                        " (path too close to a branch point?)");
      }
      continue;
    }
    samples.push_back({t_new, z1, std::move(step.w)});
    t = t_new;
    if (step.newton_iterations <= 2)
      h = std::min(max_h, 2.0 * h);
  }
  return StrandSheet(f, path, opts, std::move(samples));
}

} // namespace curvebraid
