#include "curvebraid/error.hpp"
#include "curvebraid/geometry.hpp"
#include "curvebraid/tracking.hpp"

#include "planar.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace curvebraid {

using detail::cross;

int RegionMap::chord_count() const {
  return static_cast<int>(std::count_if(edges.begin(), edges.end(), [](const RegionEdge &e) { return e.chord; }));
}

namespace {

// One end of a piece of a B+ arc inside D.
struct PieceEnd {
  bool on_boundary = false;
  double u = 0.0; // arc length along the boundary when on_boundary
  int branch = -1;
};

struct Piece {
  int arc = 0;
  int label = 0;
  std::vector<Complex> points;
  PieceEnd a, b;
};

struct ChordEnd {
  double u;
  int piece;
  bool first; // the piece starts here
};

double wrap(double u, double perimeter) {
  u = std::fmod(u, perimeter);
  return u < 0.0 ? u + perimeter : u;
}

// Boundary polyline from perimeter position u0 forward to u1 (wrapping once if u1 <= u0).
std::vector<Complex> boundary_between(const std::vector<Complex> &ring, const std::vector<double> &cum,
                                      double u0, double u1) {
  const double perimeter = cum.back();
  const auto at = [&](double u) {
    u = wrap(u, perimeter);
    const auto it = std::upper_bound(cum.begin(), cum.end(), u);
    const std::size_t k = std::min<std::size_t>(std::max<std::ptrdiff_t>(it - cum.begin(), 1), cum.size() - 1);
    const double seg = cum[k] - cum[k - 1];
    return seg > 0.0 ? ring[k - 1] + (u - cum[k - 1]) / seg * (ring[k] - ring[k - 1]) : ring[k - 1];
  };
  double span = u1 - u0;
  if (span <= 0.0)
    span += perimeter;
  std::vector<Complex> out{at(u0)};
  // Vertices strictly inside the span, in forward order.
  const std::size_t m = ring.size() - 1;
  std::vector<std::pair<double, Complex>> inner;
  for (std::size_t k = 0; k < m; ++k) {
    double off = cum[k] - u0;
    if (off <= 0.0)
      off += perimeter;
    if (off < span)
      inner.emplace_back(off, ring[k]);
  }
  std::sort(inner.begin(), inner.end(), [](const auto &x, const auto &y) { return x.first < y.first; });
  for (const auto &[off, p] : inner)
    out.push_back(p);
  out.push_back(at(u1));
  return out;
}

// Interior point of the face furthest from every edge and branch point on a coarse grid.
Complex representative(const std::vector<Complex> &outline, const std::vector<std::vector<Complex>> &obstacles,
                       const std::vector<Complex> &points) {
  double x0 = std::numeric_limits<double>::infinity(), x1 = -x0, y0 = x0, y1 = -x0;
  for (const auto &p : outline) {
    x0 = std::min(x0, p.real());
    x1 = std::max(x1, p.real());
    y0 = std::min(y0, p.imag());
    y1 = std::max(y1, p.imag());
  }
  constexpr int kGrid = 64;
  Complex best{};
  double best_clear = 0.0;
  for (int i = 0; i < kGrid; ++i) {
    for (int j = 0; j < kGrid; ++j) {
      const Complex p(x0 + (i + 0.5) * (x1 - x0) / kGrid, y0 + (j + 0.5) * (y1 - y0) / kGrid);
      if (!detail::polygon_contains(outline, p))
        continue;
      std::vector<Complex> closed = outline;
      closed.push_back(outline.front());
      double clear = detail::distance_to_polyline(p, closed);
      for (const auto &ob : obstacles)
        clear = std::min(clear, detail::distance_to_polyline(p, ob));
      for (const auto &q : points)
        clear = std::min(clear, std::abs(p - q));
      if (clear > best_clear) {
        best_clear = clear;
        best = p;
      }
    }
  }
  if (best_clear <= 1e-9)
    throw Error(ErrorCode::ResolutionFailure, "region has no interior sample point");
  return best;
}

// Sign of the crossing met by a short transversal from the right of pts to its left.
int calibrate(const BivariatePoly &f, const std::vector<Complex> &pts, int label, double eps,
              const Tolerances &tol) {
  const double mid = detail::midpoint_position(pts);
  const Complex m = detail::point_at(pts, mid);
  const Complex left = Complex(0.0, 1.0) * detail::tangent_at(pts, mid);
  TrackOptions to;
  to.tol = tol;
  // Asymmetric ends and an odd step keep samples off the crossing itself.
  to.max_step = 0.13 * eps;
  const auto ev = crossings(track_path(f, PlanePath::segment(m - eps * left, m + 0.7 * eps * left), to));
  if (ev.size() != 1 || ev.front().index != label)
    throw Error(ErrorCode::NonTransversal, "edge orientation could not be calibrated");
  return ev.front().sign;
}

} // namespace

RegionMap region_decomposition(const BPlusGraph &bplus, const PlanePath &disc, const Tolerances &tol) {
  if (!disc.closed() || disc.vertices().size() < 3)
    throw Error(ErrorCode::InvalidInput, "disc boundary must be a closed polygon");
  RegionMap out;
  out.boundary = disc.counter_clockwise();
  const auto ring = out.boundary.polyline();
  const auto cum = detail::cumulative_length(ring);

  for (const auto &v : out.boundary.vertices())
    if (!bplus.window.contains(v))
      throw Error(ErrorCode::InvalidInput, "disc leaves the traced window");
  const auto &branches = bplus.branches.points;
  for (const auto &b : branches)
    if (out.boundary.distance_to(b.z) < tol.branch_clearance)
      throw Error(ErrorCode::NonTransversal, "disc boundary passes through a branch point");

  // Cut every arc at its crossings with the boundary and keep the pieces inside D.
  std::vector<Piece> pieces;
  for (std::size_t ai = 0; ai < bplus.arcs.size(); ++ai) {
    const auto &arc = bplus.arcs[ai];
    if (arc.points.size() < 2)
      continue;
    auto hits = detail::intersect_polylines(arc.points, ring);
    for (const auto &h : hits)
      if (h.sine < 1e-3)
        throw Error(ErrorCode::NonTransversal, "disc boundary is tangent to a B+ arc");
    std::sort(hits.begin(), hits.end(), [](const auto &x, const auto &y) { return x.pos_a < y.pos_a; });
    const double last = static_cast<double>(arc.points.size() - 1);
    std::vector<double> cuts{0.0};
    std::vector<double> cut_u{-1.0};
    for (const auto &h : hits) {
      cuts.push_back(h.pos_a);
      cut_u.push_back(cum[static_cast<std::size_t>(std::floor(h.pos_b))] +
                      (h.pos_b - std::floor(h.pos_b)) *
                          (cum[static_cast<std::size_t>(std::floor(h.pos_b)) + 1] -
                           cum[static_cast<std::size_t>(std::floor(h.pos_b))]));
    }
    cuts.push_back(last);
    cut_u.push_back(-1.0);
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
      if (cuts[k + 1] - cuts[k] <= 0.0)
        continue;
      const Complex mid = detail::point_at(arc.points, 0.5 * (cuts[k] + cuts[k + 1]));
      if (!out.boundary.contains(mid))
        continue;
      Piece p;
      p.arc = static_cast<int>(ai);
      p.label = arc.label;
      p.points = detail::slice(arc.points, cuts[k], cuts[k + 1]);
      const auto end_of = [&](std::size_t c, ArcEnd kind, int branch) {
        PieceEnd e;
        if (cut_u[c] >= 0.0) {
          e.on_boundary = true;
          e.u = cut_u[c];
        } else if (kind == ArcEnd::Branch) {
          e.branch = branch;
        } else {
          throw Error(ErrorCode::ResolutionFailure, "B+ arc inside the disc has no endpoint");
        }
        return e;
      };
      p.a = end_of(k, arc.start, arc.start_branch);
      p.b = end_of(k + 1, arc.end, arc.end_branch);
      pieces.push_back(std::move(p));
    }
  }

  // Pieces may only meet at shared branch points.
  for (std::size_t i = 0; i < pieces.size(); ++i)
    for (std::size_t j = i + 1; j < pieces.size(); ++j)
      for (const auto &h : detail::intersect_polylines(pieces[i].points, pieces[j].points)) {
        bool at_branch = false;
        for (const auto &b : branches)
          at_branch = at_branch || std::abs(h.point - b.z) < 1e-6;
        if (!at_branch)
          throw Error(ErrorCode::NonTransversal, "B+ arcs cross inside the disc");
      }

  // Faces: walk the boundary counter-clockwise, turning onto each chord met.
  std::vector<ChordEnd> ends;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (pieces[i].a.on_boundary && pieces[i].b.on_boundary) {
      ends.push_back({pieces[i].a.u, static_cast<int>(i), true});
      ends.push_back({pieces[i].b.u, static_cast<int>(i), false});
    }
  }
  std::sort(ends.begin(), ends.end(), [](const ChordEnd &x, const ChordEnd &y) { return x.u < y.u; });
  const std::size_t ne = ends.size();
  std::vector<int> partner(ne, -1);
  for (std::size_t i = 0; i < ne; ++i)
    for (std::size_t j = 0; j < ne; ++j)
      if (i != j && ends[i].piece == ends[j].piece)
        partner[i] = static_cast<int>(j);

  std::vector<std::vector<Complex>> face_outline;
  std::vector<int> face_of_arc(ne, -1);          // boundary stretch starting at ends[k]
  std::vector<int> left_face(pieces.size(), -1);  // left of the piece in its stored direction
  std::vector<int> right_face(pieces.size(), -1);
  if (ne == 0) {
    face_outline.push_back(std::vector<Complex>(ring.begin(), ring.end() - 1));
  } else {
    for (std::size_t start = 0; start < ne; ++start) {
      if (face_of_arc[start] >= 0)
        continue;
      const int face = static_cast<int>(face_outline.size());
      std::vector<Complex> outline;
      std::size_t k = start;
      do {
        face_of_arc[k] = face;
        const std::size_t next = (k + 1) % ne;
        auto stretch = boundary_between(ring, cum, ends[k].u, ends[next].u);
        outline.insert(outline.end(), stretch.begin(), stretch.end() - 1);
        const auto &ce = ends[next];
        const auto &pts = pieces[ce.piece].points;
        if (ce.first) {
          outline.insert(outline.end(), pts.begin(), pts.end() - 1);
          left_face[ce.piece] = face;
        } else {
          outline.insert(outline.end(), pts.rbegin(), pts.rend() - 1);
          right_face[ce.piece] = face;
        }
        k = static_cast<std::size_t>(partner[next]);
      } while (k != start);
      face_outline.push_back(std::move(outline));
    }
  }

  const auto face_at_u = [&](double u) {
    if (ne == 0)
      return 0;
    for (std::size_t k = 0; k < ne; ++k) {
      const double u0 = ends[k].u, u1 = ends[(k + 1) % ne].u;
      const bool in = u0 < u1 ? (u >= u0 && u < u1) : (u >= u0 || u < u1);
      if (in)
        return face_of_arc[k];
    }
    return face_of_arc[0];
  };
  std::vector<int> piece_face(pieces.size(), -1);
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const auto &p = pieces[i];
    if (p.a.on_boundary && p.b.on_boundary)
      continue;
    if (p.a.on_boundary || p.b.on_boundary) {
      piece_face[i] = face_at_u(p.a.on_boundary ? p.a.u : p.b.u);
    } else {
      const Complex m = detail::point_at(p.points, detail::midpoint_position(p.points));
      for (std::size_t fi = 0; fi < face_outline.size(); ++fi)
        if (detail::polygon_contains(face_outline[fi], m))
          piece_face[i] = static_cast<int>(fi);
      if (piece_face[i] < 0)
        throw Error(ErrorCode::ResolutionFailure, "interior B+ arc lies in no region");
    }
  }

  // Every branch point inside D must be reached by some piece.
  std::vector<Complex> inside_branches;
  for (std::size_t b = 0; b < branches.size(); ++b) {
    if (!out.boundary.contains(branches[b].z))
      continue;
    inside_branches.push_back(branches[b].z);
    const bool reached = std::any_of(pieces.begin(), pieces.end(), [&](const Piece &p) {
      return p.a.branch == static_cast<int>(b) || p.b.branch == static_cast<int>(b);
    });
    if (!reached)
      throw Error(ErrorCode::ResolutionFailure, "branch point inside the disc has no B+ arc");
  }

  // Regions sorted by their representative point.
  const std::size_t nf = face_outline.size();
  std::vector<Complex> reps(nf);
  for (std::size_t fi = 0; fi < nf; ++fi) {
    std::vector<std::vector<Complex>> obstacles;
    for (std::size_t i = 0; i < pieces.size(); ++i)
      if (piece_face[i] == static_cast<int>(fi))
        obstacles.push_back(pieces[i].points);
    reps[fi] = representative(face_outline[fi], obstacles, inside_branches);
  }
  std::vector<int> order(nf);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    if (reps[x].real() != reps[y].real())
      return reps[x].real() < reps[y].real();
    return reps[x].imag() < reps[y].imag();
  });
  std::vector<int> region_of_face(nf);
  for (std::size_t r = 0; r < nf; ++r) {
    region_of_face[order[r]] = static_cast<int>(r);
    out.regions.push_back({static_cast<int>(r), reps[order[r]], face_outline[order[r]]});
  }

  // Edges, oriented so that right-to-left is positive.
  struct Pending {
    RegionEdge edge;
    std::vector<int> branch_ends;
  };
  std::vector<Pending> pending;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const auto &p = pieces[i];
    double clear = 0.01;
    const double mid = detail::midpoint_position(p.points);
    const Complex m = detail::point_at(p.points, mid);
    clear = std::min(clear, 0.4 * out.boundary.distance_to(m));
    for (std::size_t j = 0; j < pieces.size(); ++j)
      if (j != i)
        clear = std::min(clear, 0.4 * detail::distance_to_polyline(m, pieces[j].points));
    for (const auto &b : branches)
      clear = std::min(clear, 0.4 * std::abs(m - b.z));
    const int sign = calibrate(bplus.curve, p.points, p.label, clear, tol);

    Pending pe;
    pe.edge.arc = bplus.arcs[p.arc].id;
    pe.edge.label = p.label;
    pe.edge.points = p.points;
    pe.edge.chord = p.a.on_boundary && p.b.on_boundary;
    if (pe.edge.chord) {
      const int l = region_of_face[left_face[i]], r = region_of_face[right_face[i]];
      pe.edge.from_region = sign > 0 ? r : l;
      pe.edge.to_region = sign > 0 ? l : r;
    } else {
      pe.edge.from_region = pe.edge.to_region = region_of_face[piece_face[i]];
    }
    if (sign < 0)
      std::reverse(pe.edge.points.begin(), pe.edge.points.end());
    if (!p.a.on_boundary)
      pe.branch_ends.push_back(p.a.branch);
    if (!p.b.on_boundary)
      pe.branch_ends.push_back(p.b.branch);
    pending.push_back(std::move(pe));
  }
  std::sort(pending.begin(), pending.end(), [](const Pending &x, const Pending &y) {
    const auto key = [](const Pending &p) {
      const Complex m = detail::point_at(p.edge.points, detail::midpoint_position(p.edge.points));
      return std::tuple(p.edge.from_region, p.edge.to_region, p.edge.label, m.real(), m.imag());
    };
    return key(x) < key(y);
  });
  for (std::size_t k = 0; k < pending.size(); ++k) {
    auto &e = pending[k].edge;
    e.id = static_cast<int>(k);
    for (int b : pending[k].branch_ends) {
      const auto &bp = branches[static_cast<std::size_t>(b)];
      out.terminals.push_back({b, bp.z, e.id, e.from_region, e.label, bp.simple});
    }
    out.edges.push_back(e);
  }
  return out;
}

std::vector<EdgeCrossing> loop_edge_sequence(const RegionMap &regions, const PlanePath &loop) {
  for (const auto &v : loop.vertices())
    if (!regions.boundary.contains(v))
      throw Error(ErrorCode::InvalidInput, "loop leaves the disc");
  const auto line = loop.polyline();
  const auto cum = detail::cumulative_length(line);
  std::vector<EdgeCrossing> seq;
  for (const auto &e : regions.edges) {
    for (const auto &h : detail::intersect_polylines(e.points, line)) {
      if (h.sine < 1e-3)
        throw Error(ErrorCode::NonTransversal, "loop is tangent to a region edge");
      const auto k = static_cast<std::size_t>(std::floor(h.pos_b));
      const double s = cum[k] + (h.pos_b - k) * (cum[std::min(k + 1, cum.size() - 1)] - cum[k]);
      EdgeCrossing c;
      c.edge = e.id;
      c.direction = h.sign; // loop moving to the left of the edge is positive
      c.t = s / cum.back();
      c.from_region = c.direction > 0 ? e.from_region : e.to_region;
      c.to_region = c.direction > 0 ? e.to_region : e.from_region;
      seq.push_back(c);
    }
  }
  std::sort(seq.begin(), seq.end(), [](const EdgeCrossing &x, const EdgeCrossing &y) { return x.t < y.t; });
  return seq;
}

} // namespace curvebraid
