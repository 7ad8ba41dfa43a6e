#include "doctest.h"

#include "curvebraid/braid.hpp"
#include "curvebraid/error.hpp"
#include "curvebraid/geometry.hpp"
#include "curvebraid/resultant.hpp"
#include "curvebraid/tracking.hpp"

#include "support.hpp"

#include <cmath>
#include <numbers>
#include <set>

using namespace curvebraid;
using testing::eighth_root;
using testing::fixture_curve;

namespace {

const BPlusGraph &fixture_graph() {
  static const BPlusGraph g = [] {
    BPlusOptions o;
    o.threads = 4;
    return trace_bplus(fixture_curve(), testing::fixture_window(), o);
  }();
  return g;
}

const CurveSpec &fixture_spec() {
  static const CurveSpec s = load_curve_spec(testing::data_path("rudolph_8_20.json"));
  return s;
}

// Polar band around the centre curve 1 + 0.3 cos 4t; same construction as the bundled loop.
PlanePath band(double half_width, double outer_cap, int samples, double margin = 0.12, double inset = 0.0) {
  const double t0 = std::numbers::pi / 4 - 0.15 + inset, t1 = 7 * std::numbers::pi / 4 + 0.15 - inset;
  std::vector<Complex> hi, lo;
  for (int k = 0; k < samples; ++k) {
    const double t = t0 + (t1 - t0) * k / (samples - 1);
    const double rc = 1.0 + 0.3 * std::cos(4 * t);
    const bool end = t <= std::numbers::pi / 4 + margin || t >= 7 * std::numbers::pi / 4 - margin;
    hi.push_back(std::polar(end ? std::max(rc + half_width, outer_cap) : rc + half_width, t));
    lo.push_back(std::polar(rc - half_width, t));
  }
  hi.insert(hi.end(), lo.rbegin(), lo.rend());
  return PlanePath(hi, true);
}

} // namespace

TEST_CASE("branch points of the fixture are the eighth roots of unity") {
  const auto b = branch_points(fixture_curve());
  REQUIRE(b.points.size() == 8);
  const auto disc = discriminant_w(fixture_curve());
  double dmax = 0.0;
  for (const auto &c : disc.coeffs())
    dmax = std::max(dmax, std::abs(c));
  for (const auto &p : b.points) {
    CHECK(std::abs(std::pow(p.z, 8) - 1.0) <= 1e-9);
    CHECK(p.simple);
    const double q = std::real(std::pow(p.z, 4));
    CHECK(p.label == (q > 0 ? 2 : 1));
    CHECK(std::abs(disc(p.z)) <= 1e-8 * dmax);
  }
}

TEST_CASE("branch points of small curves") {
  const auto a = branch_points(testing::poly({{0, 2, 1.0}, {1, 0, -1.0}}));
  REQUIRE(a.points.size() == 1);
  CHECK(std::abs(a.points[0].z) < 1e-12);
  CHECK(a.points[0].simple);
  CHECK(branch_points(testing::poly({{0, 2, 1.0}, {0, 0, -1.0}})).points.empty());
  try {
    (void)branch_points(testing::poly({{0, 2, 1.0}, {1, 1, -2.0}, {2, 0, 1.0}}));
    FAIL("expected NonSquarefree");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::NonSquarefree);
  }
}

TEST_CASE("B+ of the fixture: one ray per branch point") {
  const auto &g = fixture_graph();
  REQUIRE(g.arcs.size() == 8);
  std::vector<int> emitted(g.branches.points.size(), 0);
  for (const auto &a : g.arcs) {
    REQUIRE(a.start == ArcEnd::Branch);
    CHECK(a.end == ArcEnd::Boundary);
    ++emitted[a.start_branch];
    const Complex z = g.branches.points[a.start_branch].z;
    CHECK(a.label == (std::real(std::pow(z, 4)) > 0 ? 2 : 1));
    CHECK(a.orientation != 0);
    // Interior points sit on a coincidence of the labelled pair.
    for (std::size_t k = 5; k + 5 < a.points.size(); k += 7) {
      const auto fib = fiber_at(fixture_curve(), a.points[k]);
      const double d = std::abs(fib.roots[a.label].real() - fib.roots[a.label - 1].real());
      CHECK(d <= 1e-6);
      const int other = a.label == 1 ? 2 : 0;
      CHECK(std::abs(fib.roots[other].real() - fib.roots[a.label].real()) > 1e-3);
    }
  }
  for (int e : emitted)
    CHECK(e == 1);
}

TEST_CASE("B+ of a curve without coincidences is empty") {
  BPlusOptions o;
  o.grid_step = 0.05;
  const auto g = trace_bplus(testing::poly({{0, 2, 1.0}, {0, 0, -1.0}}), testing::fixture_window(), o);
  CHECK(g.arcs.empty());
}

TEST_CASE("thread count does not change the traced graph") {
  BPlusOptions o;
  o.grid_step = 0.02;
  o.threads = 1;
  const auto a = trace_bplus(fixture_curve(), testing::fixture_window(), o);
  o.threads = 3;
  const auto b = trace_bplus(fixture_curve(), testing::fixture_window(), o);
  REQUIRE(a.arcs.size() == b.arcs.size());
  for (std::size_t k = 0; k < a.arcs.size(); ++k)
    CHECK(a.arcs[k].points == b.arcs[k].points);
}

TEST_CASE("regions of the bundled disc") {
  const auto rm = region_decomposition(fixture_graph(), fixture_spec().loop);
  CHECK(rm.regions.size() == 4);
  CHECK(rm.edges.size() == 5);
  CHECK(rm.terminals.size() == 2);
  CHECK(rm.chord_count() == 3);
  for (const auto &t : rm.terminals) {
    CHECK(t.label == 1);
    CHECK(std::real(std::pow(t.z, 4)) < 0);
  }
  // Euler characteristic of the subdivided disc. Vertices: chord ends, slit ends and branch
  // terminals. Edges: chords, slits and the boundary pieces between their ends.
  const int c = rm.chord_count();
  const int slits = static_cast<int>(rm.edges.size()) - c;
  const int v = 2 * c + slits + static_cast<int>(rm.terminals.size());
  const int e = c + slits + (2 * c + slits);
  CHECK(v - e + static_cast<int>(rm.regions.size()) == 1);
}

TEST_CASE("crossing an edge right to left is a positive crossing of its label") {
  const auto rm = region_decomposition(fixture_graph(), fixture_spec().loop);
  for (const auto &e : rm.edges) {
    CAPTURE(e.id);
    const std::size_t mid = e.points.size() / 2;
    const Complex p = e.points[mid];
    const Complex dir = (e.points[mid + 1] - e.points[mid - 1]) / std::abs(e.points[mid + 1] - e.points[mid - 1]);
    const Complex left = Complex(0, 1) * dir;
    TrackOptions to;
    to.max_step = 0.001;
    const auto ev = crossings(track_path(fixture_curve(), PlanePath::segment(p - 0.0071 * left, p + 0.0093 * left), to));
    REQUIRE(ev.size() == 1);
    CHECK(ev[0].index == e.label);
    CHECK(ev[0].sign == 1);
  }
}

TEST_CASE("small discs") {
  SUBCASE("disjoint from B+") {
    const auto rm = region_decomposition(fixture_graph(), PlanePath::circle(0.0, 0.3, 64, 0.3));
    CHECK(rm.regions.size() == 1);
    CHECK(rm.edges.empty());
    CHECK(rm.terminals.empty());
  }
  SUBCASE("around one branch point") {
    // The ray leaves the disc once: a single slit, no second region.
    const auto rm = region_decomposition(fixture_graph(), PlanePath::circle(1.0, 0.2, 64, 2.0));
    CHECK(rm.regions.size() == 1);
    CHECK(rm.edges.size() == 1);
    CHECK(rm.terminals.size() == 1);
    CHECK(rm.chord_count() == 0);
  }
  SUBCASE("boundary through a branch point") {
    try {
      (void)region_decomposition(fixture_graph(), PlanePath::circle(0.0, 1.0, 512, 0.1));
      FAIL("expected NonTransversal");
    } catch (const Error &e) {
      CHECK(e.code() == ErrorCode::NonTransversal);
    }
  }
}

TEST_CASE("loop_edge_sequence") {
  const auto rm = region_decomposition(fixture_graph(), fixture_spec().loop);
  SUBCASE("contractible loop in one region") {
    CHECK(loop_edge_sequence(rm, PlanePath::circle(std::polar(0.95, 2.0), 0.05, 32, 0.0)).empty());
  }
  SUBCASE("boundary pushed inward") {
    const auto seq = loop_edge_sequence(rm, band(0.08, 1.18, 500, 0.1, 0.02));
    // Outer side: terminal, three chords, terminal; inner side: the chords again, backwards.
    REQUIRE(seq.size() == 8);
    for (std::size_t k = 0; k < seq.size(); ++k) {
      CHECK(seq[k].direction == (k < 5 ? 1 : -1));
      if (k > 0)
        CHECK(seq[k].from_region == seq[k - 1].to_region);
    }
    CHECK(seq.front().from_region == seq.front().to_region);
    CHECK(seq[4].from_region == seq[4].to_region);
    for (int k = 0; k < 3; ++k)
      CHECK(seq[5 + k].edge == seq[3 - k].edge);
    std::vector<int> visited{seq.front().from_region};
    for (const auto &c : seq)
      if (c.to_region != visited.back())
        visited.push_back(c.to_region);
    CHECK(visited.size() == 7);
    std::set<int> distinct(visited.begin(), visited.end());
    CHECK(distinct.size() == 4);
    // Labels with directions spell the braid tracked along the disc boundary.
    std::vector<BraidLetter> letters;
    for (const auto &c : seq)
      letters.push_back({rm.edges[c.edge].label, c.direction});
    CHECK(BraidWord(3, letters).to_text() == "s1 s2 s2 s2 s1 -s2 -s2 -s2");
  }
  SUBCASE("loop crossing one chord out and back") {
    std::vector<Complex> v;
    for (int k = 0; k <= 20; ++k)
      v.push_back(std::polar(1.25, std::numbers::pi / 2 - 0.05 + 0.005 * k));
    for (int k = 20; k >= 0; --k)
      v.push_back(std::polar(1.35, std::numbers::pi / 2 - 0.05 + 0.005 * k));
    const auto seq = loop_edge_sequence(rm, PlanePath(v, true));
    REQUIRE(seq.size() == 2);
    CHECK(seq[0].edge == seq[1].edge);
    CHECK(seq[0].direction == -seq[1].direction);
  }
}

TEST_CASE("diagram output") {
  const auto &g = fixture_graph();
  const auto csv = bplus_csv(g);
  CHECK(csv.rfind("arc_id,label,point_index,re,im\n", 0) == 0);
  const auto svg = bplus_svg(g);
  std::size_t lines = 0;
  for (std::size_t p = svg.find("<polyline"); p != std::string::npos; p = svg.find("<polyline", p + 1))
    ++lines;
  CHECK(lines == 8);
  CHECK(svg.find("<circle") != std::string::npos);
}
