#include "curvebraid/geometry.hpp"

#include "curvebraid/error.hpp"
#include "curvebraid/resultant.hpp"
#include "curvebraid/roots.hpp"

#include <algorithm>
#include <cmath>

namespace curvebraid {

namespace {

// Near a simple branch point the colliding roots separate like sqrt(dz), so a
// location error of 1e-15 leaves them ~1e-7 apart; this is the collision radius.
constexpr double kCollisionRadius = 1e-5;

Complex polish(const UniPoly &p, Complex z) {
  const UniPoly dp = p.derivative();
  for (int it = 0; it < 8; ++it) {
    const Complex d = dp(z);
    if (d == Complex{})
      break;
    const Complex step = p(z) / d;
    if (!std::isfinite(step.real()) || !std::isfinite(step.imag()))
      break;
    const Complex next = z - step;
    if (std::abs(p(next)) >= std::abs(p(z)))
      break;
    z = next;
  }
  return z;
}

BranchPoint classify(const BivariatePoly &f, Complex z, const Tolerances &tol) {
  BranchPoint bp{z, false, 0};
  if (std::abs(f.leading_coefficient()(z)) < tol.leading_coeff)
    return bp; // a sheet escapes to infinity: fewer than n finite roots
  RootOptions ro;
  ro.residual_tol = tol.root_residual;
  ro.cluster_tol = 0.0;
  auto roots = roots_univariate(f.fiber_polynomial(z), ro);
  const int n = static_cast<int>(roots.size());
  int close_pairs = 0;
  int lower = -1;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double scale = std::max(1.0, std::abs(roots[i]));
      if (std::abs(roots[i] - roots[j]) <= kCollisionRadius * scale) {
        ++close_pairs;
        lower = i;
        if (j != i + 1)
          lower = -2;
      }
    }
  }
  if (close_pairs == 0)
    throw Error(ErrorCode::NonConvergence,
                "discriminant root without a colliding fiber pair (ill-conditioned input)");
  if (close_pairs == 1 && lower >= 0) {
    bp.simple = true;
    bp.label = lower + 1;
  }
  return bp;
}

} // namespace

BranchSet branch_points(const BivariatePoly &f, const Tolerances &tol) {
  if (f.wdegree() < 1)
    throw Error(ErrorCode::InvalidInput, "curve must have w-degree >= 1");
  BranchSet out;
  if (f.wdegree() == 1) {
    const UniPoly lead = f.leading_coefficient();
    if (lead.degree() >= 1) {
      for (const auto &z : roots_univariate(lead, tol.root_residual))
        out.points.push_back({z, false, 0});
    }
    return out;
  }

  const UniPoly disc = discriminant_w(f);
  double fmax = 0.0;
  for (const auto &[m, c] : f.terms())
    fmax = std::max(fmax, std::abs(c));
  double dmax = 0.0;
  for (const auto &c : disc.coeffs())
    dmax = std::max(dmax, std::abs(c));
  const double expected = std::pow(std::max(fmax, 1.0), 2 * f.wdegree() - 1);
  if (disc.is_zero() || dmax <= 1e-10 * expected)
    throw Error(ErrorCode::NonSquarefree, "w-discriminant vanishes identically (f not squarefree in w)");
  if (disc.degree() < 1)
    return out;

  RootOptions ro;
  ro.residual_tol = tol.root_residual;
  ro.cluster_tol = tol.cluster;
  std::vector<Complex> zs;
  for (const auto &z : roots_univariate(disc, ro)) {
    const Complex p = polish(disc, z);
    bool duplicate = false;
    for (const auto &q : zs)
      duplicate = duplicate || std::abs(p - q) <= tol.cluster * std::max(1.0, std::abs(p));
    if (!duplicate)
      zs.push_back(p);
  }
  std::sort(zs.begin(), zs.end(), [](Complex a, Complex b) {
    const double ra = std::round(a.real() * 1e9);
    const double rb = std::round(b.real() * 1e9);
    if (ra != rb)
      return ra < rb;
    return a.imag() < b.imag();
  });
  for (const auto &z : zs)
    out.points.push_back(classify(f, z, tol));
  return out;
}

} // namespace curvebraid
