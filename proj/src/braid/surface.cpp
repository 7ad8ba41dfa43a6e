#include "curvebraid/braid.hpp"
#include "curvebraid/error.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <numbers>

namespace curvebraid {

namespace {

// Lattice of points inside D kept clear of the boundary and of small discs around branch points.
struct Lattice {
  Complex origin;
  double step = 0.0;
  int nx = 0, ny = 0;
  std::vector<char> free;

  Complex at(int i, int j) const { return origin + Complex(i * step, j * step); }
  int id(int i, int j) const { return j * nx + i; }
};

Lattice build_lattice(const PlanePath &disc, const std::vector<Complex> &centres,
                      const std::vector<double> &radii, double step) {
  double x0 = std::numeric_limits<double>::infinity(), x1 = -x0, y0 = x0, y1 = -x0;
  for (const auto &v : disc.vertices()) {
    x0 = std::min(x0, v.real());
    x1 = std::max(x1, v.real());
    y0 = std::min(y0, v.imag());
    y1 = std::max(y1, v.imag());
  }
  Lattice g;
  g.step = step;
  // Irrational offset keeps lattice points off symmetry lines of the input.
  g.origin = Complex(x0 + step / std::numbers::pi, y0 + step / std::numbers::e);
  g.nx = static_cast<int>((x1 - g.origin.real()) / step) + 1;
  g.ny = static_cast<int>((y1 - g.origin.imag()) / step) + 1;
  g.free.assign(std::size_t(g.nx) * g.ny, 0);
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i) {
      const Complex p = g.at(i, j);
      if (!disc.contains(p) || disc.distance_to(p) < 0.5 * step)
        continue;
      bool clear = true;
      for (std::size_t k = 0; k < centres.size() && clear; ++k)
        clear = std::abs(p - centres[k]) > 1.5 * radii[k] + step;
      g.free[g.id(i, j)] = clear;
    }
  return g;
}

// Breadth-first parents from the start node over 4-neighbours.
std::vector<int> bfs(const Lattice &g, int start) {
  std::vector<int> parent(g.free.size(), -2);
  std::deque<int> queue{start};
  parent[start] = -1;
  while (!queue.empty()) {
    const int cur = queue.front();
    queue.pop_front();
    const int i = cur % g.nx, j = cur / g.nx;
    const int di[] = {1, -1, 0, 0}, dj[] = {0, 0, 1, -1};
    for (int d = 0; d < 4; ++d) {
      const int a = i + di[d], b = j + dj[d];
      if (a < 0 || b < 0 || a >= g.nx || b >= g.ny)
        continue;
      const int nb = g.id(a, b);
      if (!g.free[nb] || parent[nb] != -2)
        continue;
      parent[nb] = cur;
      queue.push_back(nb);
    }
  }
  return parent;
}

} // namespace

SurfaceInvariants surface_invariants(const BivariatePoly &f, const PlanePath &disc,
                                     const BranchSet &branches, const SurfaceOptions &opts) {
  if (!disc.closed())
    throw Error(ErrorCode::InvalidInput, "disc boundary must be closed");
  SurfaceInvariants out;
  out.strands = f.wdegree();

  std::vector<Complex> all;
  for (const auto &b : branches.points)
    all.push_back(b.z);
  for (std::size_t k = 0; k < branches.points.size(); ++k) {
    const auto &b = branches.points[k];
    if (disc.distance_to(b.z) < opts.track.tol.branch_clearance)
      throw Error(ErrorCode::NonTransversal, "disc boundary passes through a branch point");
    if (!disc.contains(b.z))
      continue;
    if (!b.simple)
      throw Error(ErrorCode::NonSimpleTerminal, "enclosed branch point is not a simple tangency");
    out.branches.push_back(static_cast<int>(k));
  }
  out.enclosed = static_cast<int>(out.branches.size());
  out.chi = band_euler_characteristic(out.strands, out.enclosed);

  // Radius of the small loop around each branch point.
  std::vector<double> radii(all.size(), 0.1);
  for (std::size_t k = 0; k < all.size(); ++k) {
    for (std::size_t l = 0; l < all.size(); ++l)
      if (l != k)
        radii[k] = std::min(radii[k], 0.5 * std::abs(all[k] - all[l]));
    radii[k] = std::min(radii[k], 0.5 * disc.distance_to(all[k]));
  }

  const Lattice g = build_lattice(disc, all, radii, opts.grid_step);
  int base = -1;
  double best = -1.0;
  for (std::size_t id = 0; id < g.free.size(); ++id) {
    if (!g.free[id])
      continue;
    const Complex p = g.at(static_cast<int>(id) % g.nx, static_cast<int>(id) / g.nx);
    double clear = disc.distance_to(p);
    for (std::size_t k = 0; k < all.size(); ++k)
      clear = std::min(clear, std::abs(p - all[k]) - radii[k]);
    if (clear > best) {
      best = clear;
      base = static_cast<int>(id);
    }
  }
  if (base < 0)
    throw Error(ErrorCode::ResolutionFailure, "no lattice point inside the disc; refine the grid step");
  out.base = g.at(base % g.nx, base / g.nx);
  const auto parent = bfs(g, base);

  for (int bi : out.branches) {
    const Complex c = all[bi];
    const double r = radii[bi];
    // Reachable lattice node closest to the branch point.
    int target = -1;
    double dist = std::numeric_limits<double>::infinity();
    for (std::size_t id = 0; id < g.free.size(); ++id) {
      if (parent[id] == -2)
        continue;
      const double d = std::abs(g.at(static_cast<int>(id) % g.nx, static_cast<int>(id) / g.nx) - c);
      if (d < dist) {
        dist = d;
        target = static_cast<int>(id);
      }
    }
    if (target < 0 || dist > 1.5 * r + 3.0 * g.step)
      throw Error(ErrorCode::ResolutionFailure, "branch point not reachable from the base point");
    std::vector<Complex> way;
    for (int id = target; id >= 0; id = parent[id])
      way.push_back(g.at(id % g.nx, id / g.nx));
    std::reverse(way.begin(), way.end());

    const Complex near = way.back();
    const double a0 = std::arg(near - c);
    std::vector<Complex> verts = way;
    constexpr int kSamples = 48;
    for (int s = 0; s <= kSamples; ++s)
      verts.push_back(c + std::polar(r, a0 + 2.0 * std::numbers::pi * s / kSamples));
    verts.insert(verts.end(), way.rbegin(), way.rend());
    const auto sheet = track_path(f, PlanePath(verts, false), opts.track);
    Perm p;
    for (int k : sheet.end_match())
      p.images.push_back(k + 1);
    out.local.push_back(std::move(p));
  }

  // Orbits of the group generated by the local permutations.
  std::vector<int> root(out.strands);
  for (int k = 0; k < out.strands; ++k)
    root[k] = k;
  const auto find = [&](int x) {
    while (root[x] != x)
      x = root[x] = root[root[x]];
    return x;
  };
  for (const auto &p : out.local)
    for (int k = 0; k < out.strands; ++k)
      root[find(k)] = find(p.images[k] - 1);
  out.components = 0;
  for (int k = 0; k < out.strands; ++k)
    out.components += find(k) == k;
  return out;
}

} // namespace curvebraid
