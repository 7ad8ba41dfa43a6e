#pragma once

#include "curvebraid/config.hpp"
#include "curvebraid/path.hpp"
#include "curvebraid/poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace curvebraid {

struct BranchPoint {
  Complex z;
  /// Exactly one double root and n - 2 simple roots in the fiber.
  bool simple = false;
  /// 1-based lower sorted position of the colliding pair (0 when not simple).
  int label = 0;
};

struct BranchSet {
  std::vector<BranchPoint> points;
};

/// Zeros of the w-discriminant, deduplicated and checked against the fibers.
/// Throws Error(NonSquarefree) when the discriminant vanishes identically.
BranchSet branch_points(const BivariatePoly &f, const Tolerances &tol = {});

struct Window {
  double xmin = -1.0, xmax = 1.0, ymin = -1.0, ymax = 1.0;
  bool contains(Complex z) const {
    return z.real() >= xmin && z.real() <= xmax && z.imag() >= ymin && z.imag() <= ymax;
  }
};

enum class ArcEnd { Branch, Boundary, Closed };

struct BPlusArc {
  int id = 0;
  int label = 0; // adjacent sorted pair (label, label + 1) has equal real parts
  std::vector<Complex> points;
  ArcEnd start = ArcEnd::Boundary;
  ArcEnd end = ArcEnd::Boundary;
  int start_branch = -1; // index into the branch set when start == Branch
  int end_branch = -1;
  /// +1 when crossing from the right of the polyline to its left is a positive crossing,
  /// -1 for the opposite, 0 if calibration was not possible.
  int orientation = 0;
};

struct BPlusGraph {
  BivariatePoly curve;
  Window window;
  double grid_step = 0.0;
  BranchSet branches;
  std::vector<BPlusArc> arcs;
};

struct BPlusOptions {
  Tolerances tol;
  double grid_step = 0.01;
  int threads = 1;
};

/// Traces the real-part coincidence locus of sorted-adjacent fiber roots inside window.
/// Throws Error(ResolutionFailure) if arcs cannot be chained unambiguously at this grid step.
BPlusGraph trace_bplus(const BivariatePoly &f, const Window &window, const BPlusOptions &opts);
BPlusGraph trace_bplus(const BivariatePoly &f, const BranchSet &branches, const Window &window,
                       const BPlusOptions &opts);

struct Region {
  int index = 0;
  Complex point; // interior representative, away from every edge
  std::vector<Complex> outline;
};

struct RegionEdge {
  int id = 0;
  int arc = 0;
  int label = 0;
  /// Oriented so that crossing from its right to its left is a positive crossing.
  std::vector<Complex> points;
  int from_region = 0; // right side
  int to_region = 0;   // left side
  /// Both ends on the boundary of D; otherwise one end is a branch terminal.
  bool chord = true;
};

struct BranchTerminal {
  int branch = 0; // index into the branch set
  Complex z;
  int edge = 0;
  int region = 0;
  int label = 0;
  bool simple = true;
};

struct RegionMap {
  PlanePath boundary; // counter-clockwise
  std::vector<Region> regions;
  std::vector<RegionEdge> edges;
  std::vector<BranchTerminal> terminals;

  int chord_count() const;
};

/// Planar subdivision of the disc bounded by `disc` by the B+ arcs, with every edge
/// orientation calibrated by tracking a short transversal path.
RegionMap region_decomposition(const BPlusGraph &bplus, const PlanePath &disc,
                               const Tolerances &tol = {});

struct EdgeCrossing {
  int edge = 0;
  int direction = 0; // +1 positive (right to left), -1 negative
  double t = 0.0;    // normalized arc length along the loop
  int from_region = 0;
  int to_region = 0;
};

std::vector<EdgeCrossing> loop_edge_sequence(const RegionMap &regions, const PlanePath &loop);

/// CSV rows "arc_id,label,point_index,re,im".
std::string bplus_csv(const BPlusGraph &g);
/// Arcs coloured by label, branch points marked, optional disc outline with region labels.
std::string bplus_svg(const BPlusGraph &g, const RegionMap *regions = nullptr);

} // namespace curvebraid
