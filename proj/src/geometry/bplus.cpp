#include "curvebraid/geometry.hpp"

#include "curvebraid/error.hpp"
#include "curvebraid/roots.hpp"
#include "curvebraid/tracking.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>

namespace curvebraid {

namespace {

// Grid offsets (fractions of a step) that keep nodes off the symmetry lines a
// curve with real or rotational symmetry tends to put its coincidence arcs on.
constexpr double kOffsetX = 0.3183098861837907;
constexpr double kOffsetY = 0.36787944117144233;

struct Grid {
  double x0, y0, step;
  int nx, ny; // cells; nodes are (nx + 1) x (ny + 1)

  Complex node(int i, int j) const { return {x0 + i * step, y0 + j * step}; }
  int node_index(int i, int j) const { return j * (nx + 1) + i; }
  int hcount() const { return nx * (ny + 1); }
  int hedge(int i, int j) const { return j * nx + i; }
  int vedge(int i, int j) const { return hcount() + j * (nx + 1) + i; }
  int edge_count() const { return hcount() + (nx + 1) * ny; }

  std::pair<Complex, Complex> edge_ends(int e) const {
    if (e < hcount()) {
      const int i = e % nx, j = e / nx;
      return {node(i, j), node(i + 1, j)};
    }
    const int r = e - hcount();
    const int i = r % (nx + 1), j = r / (nx + 1);
    return {node(i, j), node(i, j + 1)};
  }

  bool on_outer_boundary(int e) const {
    if (e < hcount()) {
      const int j = e / nx;
      return j == 0 || j == ny;
    }
    const int i = (e - hcount()) % (nx + 1);
    return i == 0 || i == nx;
  }
};

std::vector<Complex> sorted_roots(const BivariatePoly &f, Complex z, const Tolerances &tol) {
  return fiber_at(f, z, tol).roots;
}

// Signed gap of the sorted pair (i, i+1): the real-part gap, signed by which root is
// higher. It changes sign continuously where the real parts cross.
double signed_gap(const std::vector<Complex> &w, int i) {
  const double gap = w[i + 1].real() - w[i].real();
  return w[i + 1].imag() >= w[i].imag() ? gap : -gap;
}

bool gap_is_coincident(const std::vector<Complex> &w, int i, double tol) {
  const double scale = std::max({1.0, std::abs(w[i]), std::abs(w[i + 1])});
  return w[i + 1].real() - w[i].real() <= tol * scale;
}

std::optional<Complex> refine_crossing(const BivariatePoly &f, Complex a, Complex b, int i,
                                       double ga, const Tolerances &tol) {
  double lo = 0.0, hi = 1.0;
  double glo = ga;
  for (int it = 0; it < 48; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double g = signed_gap(sorted_roots(f, a + mid * (b - a), tol), i);
    if ((g < 0.0) == (glo < 0.0)) {
      lo = mid;
      glo = g;
    } else {
      hi = mid;
    }
  }
  const Complex zlo = a + lo * (b - a);
  const Complex zhi = a + hi * (b - a);
  // A jump in the imaginary ordering also flips the sign; only a vanishing gap counts.
  if (!gap_is_coincident(sorted_roots(f, zlo, tol), i, tol.coincidence) ||
      !gap_is_coincident(sorted_roots(f, zhi, tol), i, tol.coincidence))
    return std::nullopt;
  return 0.5 * (zlo + zhi);
}

int calibrate_orientation(const BivariatePoly &f, const std::vector<Complex> &pts, int label,
                          double eps, const Tolerances &tol) {
  if (pts.size() < 2)
    return 0;
  double total = 0.0;
  for (std::size_t k = 1; k < pts.size(); ++k)
    total += std::abs(pts[k] - pts[k - 1]);
  double acc = 0.0;
  for (std::size_t k = 1; k < pts.size(); ++k) {
    const double seg = std::abs(pts[k] - pts[k - 1]);
    if (acc + seg >= 0.5 * total && seg > 0.0) {
      const Complex dir = (pts[k] - pts[k - 1]) / seg;
      const Complex mid = pts[k - 1] + (0.5 * total - acc) * dir;
      const Complex left = Complex(0.0, 1.0) * dir;
      try {
        TrackOptions to;
        to.tol = tol;
        to.max_step = 0.13 * eps;
        const auto sheet = track_path(f, PlanePath::segment(mid - eps * left, mid + 0.7 * eps * left), to);
        const auto ev = crossings(sheet);
        if (ev.size() == 1 && ev.front().index == label)
          return ev.front().sign;
      } catch (const Error &) {
      }
      return 0;
    }
    acc += seg;
  }
  return 0;
}

} // namespace

BPlusGraph trace_bplus(const BivariatePoly &f, const Window &window, const BPlusOptions &opts) {
  return trace_bplus(f, branch_points(f, opts.tol), window, opts);
}

BPlusGraph trace_bplus(const BivariatePoly &f, const BranchSet &branches, const Window &window,
                       const BPlusOptions &opts) {
  if (!(opts.grid_step > 0.0) || !(window.xmax > window.xmin) || !(window.ymax > window.ymin))
    throw Error(ErrorCode::InvalidInput, "invalid B+ window or grid step");
  const int n = f.wdegree();
  BPlusGraph graph{f, window, opts.grid_step, branches, {}};
  if (n < 2)
    return graph;

  Grid grid;
  grid.step = opts.grid_step;
  grid.x0 = window.xmin + kOffsetX * grid.step;
  grid.y0 = window.ymin + kOffsetY * grid.step;
  grid.nx = static_cast<int>(std::floor((window.xmax - window.xmin) / grid.step - kOffsetX));
  grid.ny = static_cast<int>(std::floor((window.ymax - window.ymin) / grid.step - kOffsetY));
  if (grid.nx < 1 || grid.ny < 1)
    throw Error(ErrorCode::InvalidInput, "grid step larger than the window");

  const int labels = n - 1;
  const int node_count = (grid.nx + 1) * (grid.ny + 1);
  std::vector<double> gaps(std::size_t(node_count) * labels);
  detail::parallel_for(grid.ny + 1, opts.threads, [&](int j) {
    for (int i = 0; i <= grid.nx; ++i) {
      const auto w = sorted_roots(f, grid.node(i, j), opts.tol);
      for (int l = 0; l < labels; ++l)
        gaps[std::size_t(grid.node_index(i, j)) * labels + l] = signed_gap(w, l);
    }
  });

  auto gap_at = [&](Complex node_z, int l) {
    const int i = static_cast<int>(std::lround((node_z.real() - grid.x0) / grid.step));
    const int j = static_cast<int>(std::lround((node_z.imag() - grid.y0) / grid.step));
    return gaps[std::size_t(grid.node_index(i, j)) * labels + l];
  };

  // Refined crossing points per (edge, label).
  const int edges = grid.edge_count();
  std::vector<std::optional<Complex>> hits(std::size_t(edges) * labels);
  constexpr int kChunk = 512;
  detail::parallel_for((edges + kChunk - 1) / kChunk, opts.threads, [&](int chunk) {
    for (int e = chunk * kChunk; e < std::min(edges, (chunk + 1) * kChunk); ++e) {
      const auto [a, b] = grid.edge_ends(e);
      for (int l = 0; l < labels; ++l) {
        const double ga = gap_at(a, l);
        const double gb = gap_at(b, l);
        if ((ga < 0.0) != (gb < 0.0))
          hits[std::size_t(e) * labels + l] = refine_crossing(f, a, b, l, ga, opts.tol);
      }
    }
  });

  // Chain graph: one node per hit, one per branch point.
  std::map<std::pair<int, int>, int> hit_node; // (edge, label) -> node
  std::vector<Complex> node_pos;
  std::vector<int> node_edge;
  for (int e = 0; e < edges; ++e) {
    for (int l = 0; l < labels; ++l) {
      if (const auto &h = hits[std::size_t(e) * labels + l]) {
        hit_node[{e, l}] = static_cast<int>(node_pos.size());
        node_pos.push_back(*h);
        node_edge.push_back(e);
      }
    }
  }
  const int hit_count = static_cast<int>(node_pos.size());
  for (const auto &bp : branches.points) {
    node_pos.push_back(bp.z);
    node_edge.push_back(-1);
  }
  std::vector<std::vector<int>> adj(node_pos.size());
  std::vector<int> node_label(node_pos.size(), -1);
  for (const auto &[key, node] : hit_node)
    node_label[node] = key.second;

  const double margin = 1e-6 * grid.step;
  for (int j = 0; j < grid.ny; ++j) {
    for (int i = 0; i < grid.nx; ++i) {
      const int cell_edges[4] = {grid.hedge(i, j), grid.hedge(i, j + 1), grid.vedge(i, j),
                                 grid.vedge(i + 1, j)};
      const Complex lo = grid.node(i, j);
      const Complex hi = grid.node(i + 1, j + 1);
      for (int l = 0; l < labels; ++l) {
        std::vector<int> pts;
        for (int e : cell_edges) {
          if (auto it = hit_node.find({e, l}); it != hit_node.end())
            pts.push_back(it->second);
        }
        if (pts.empty())
          continue;
        if (pts.size() == 2) {
          adj[pts[0]].push_back(pts[1]);
          adj[pts[1]].push_back(pts[0]);
          continue;
        }
        if (pts.size() == 1) {
          int found = -1;
          for (int b = 0; b < static_cast<int>(branches.points.size()); ++b) {
            const auto &bp = branches.points[b];
            if (bp.z.real() >= lo.real() - margin && bp.z.real() <= hi.real() + margin &&
                bp.z.imag() >= lo.imag() - margin && bp.z.imag() <= hi.imag() + margin &&
                (!bp.simple || bp.label == l + 1))
              found = b;
          }
          if (found >= 0) {
            const int bnode = hit_count + found;
            adj[pts[0]].push_back(bnode);
            adj[bnode].push_back(pts[0]);
            continue;
          }
          throw Error(ErrorCode::ResolutionFailure,
                      "B+ arc ends inside a grid cell without a branch point; refine the grid");
        }
        throw Error(ErrorCode::ResolutionFailure,
                    "ambiguous B+ arc chaining in a grid cell; refine the grid");
      }
    }
  }

  // Walk maximal chains between nodes of degree != 2.
  std::vector<std::vector<bool>> used(node_pos.size());
  for (std::size_t k = 0; k < adj.size(); ++k)
    used[k].assign(adj[k].size(), false);
  auto mark = [&](int a, int b) {
    for (std::size_t k = 0; k < adj[a].size(); ++k) {
      if (adj[a][k] == b && !used[a][k]) {
        used[a][k] = true;
        break;
      }
    }
    for (std::size_t k = 0; k < adj[b].size(); ++k) {
      if (adj[b][k] == a && !used[b][k]) {
        used[b][k] = true;
        break;
      }
    }
  };
  auto end_kind = [&](int node) {
    if (node >= hit_count)
      return ArcEnd::Branch;
    if (adj[node].size() == 1 && grid.on_outer_boundary(node_edge[node]))
      return ArcEnd::Boundary;
    throw Error(ErrorCode::ResolutionFailure, "B+ arc ends in the window interior; refine the grid");
  };

  std::vector<BPlusArc> arcs;
  auto walk = [&](int start, std::size_t first_slot) {
    std::vector<int> chain{start};
    int prev = start;
    int cur = adj[start][first_slot];
    used[start][first_slot] = true;
    for (std::size_t k = 0; k < adj[cur].size(); ++k) {
      if (adj[cur][k] == prev && !used[cur][k]) {
        used[cur][k] = true;
        break;
      }
    }
    chain.push_back(cur);
    while (cur != start && adj[cur].size() == 2 && cur < hit_count) {
      int next = -1;
      for (std::size_t k = 0; k < 2; ++k) {
        if (!used[cur][k]) {
          next = adj[cur][k];
          break;
        }
      }
      if (next < 0)
        break;
      mark(cur, next);
      prev = cur;
      cur = next;
      chain.push_back(cur);
    }
    return chain;
  };

  auto emit = [&](const std::vector<int> &chain, bool closed) {
    BPlusArc arc;
    for (int node : chain) {
      if (node_label[node] >= 0)
        arc.label = node_label[node] + 1;
      arc.points.push_back(node_pos[node]);
    }
    if (closed) {
      arc.start = arc.end = ArcEnd::Closed;
    } else {
      arc.start = end_kind(chain.front());
      arc.end = end_kind(chain.back());
      if (arc.start == ArcEnd::Branch)
        arc.start_branch = chain.front() - hit_count;
      if (arc.end == ArcEnd::Branch)
        arc.end_branch = chain.back() - hit_count;
    }
    arcs.push_back(std::move(arc));
  };

  for (int node = 0; node < static_cast<int>(adj.size()); ++node) {
    if (adj[node].size() == 2 && node < hit_count)
      continue;
    for (std::size_t k = 0; k < adj[node].size(); ++k) {
      if (!used[node][k])
        emit(walk(node, k), false);
    }
  }
  for (int node = 0; node < hit_count; ++node) {
    for (std::size_t k = 0; k < adj[node].size(); ++k) {
      if (!used[node][k]) {
        auto chain = walk(node, k);
        emit(chain, true);
      }
    }
  }

  auto before = [](Complex a, Complex b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  };
  for (auto &arc : arcs) {
    bool flip = false;
    if (arc.start != ArcEnd::Branch && arc.end == ArcEnd::Branch)
      flip = true;
    else if (arc.start == ArcEnd::Branch && arc.end == ArcEnd::Branch)
      flip = arc.end_branch < arc.start_branch;
    else if (arc.start == ArcEnd::Boundary && arc.end == ArcEnd::Boundary)
      flip = before(arc.points.back(), arc.points.front());
    if (flip) {
      std::reverse(arc.points.begin(), arc.points.end());
      std::swap(arc.start, arc.end);
      std::swap(arc.start_branch, arc.end_branch);
    }
  }
  std::sort(arcs.begin(), arcs.end(), [&](const BPlusArc &a, const BPlusArc &b) {
    const int ka = a.start_branch >= 0 ? a.start_branch : 1 << 30;
    const int kb = b.start_branch >= 0 ? b.start_branch : 1 << 30;
    if (ka != kb)
      return ka < kb;
    if (a.label != b.label)
      return a.label < b.label;
    return before(a.points.front(), b.points.front());
  });

  detail::parallel_for(static_cast<int>(arcs.size()), opts.threads, [&](int k) {
    arcs[k].id = k;
    arcs[k].orientation =
        calibrate_orientation(f, arcs[k].points, arcs[k].label, 0.5 * grid.step, opts.tol);
  });
  graph.arcs = std::move(arcs);
  return graph;
}

} // namespace curvebraid
