#include "curvebraid/pipeline.hpp"
#include "curvebraid/tracking.hpp"

#include <algorithm>
#include <sstream>

namespace curvebraid {

using nlohmann::json;

namespace {

// Adding 0.0 turns -0 into 0 so reports do not print "-0.0".
json complex_json(Complex z) { return json::array({z.real() + 0.0, z.imag() + 0.0}); }

json laurent_json(const LaurentPoly &p) {
  auto coeffs = json::array();
  for (int e = p.min_exponent(); e <= p.max_exponent(); ++e)
    coeffs.push_back(p.coeff(e));
  return {{"text", p.to_string()}, {"min_exponent", p.min_exponent()}, {"coeffs", coeffs}};
}

std::string target_name(int m) { return "S" + std::to_string(m); }

const char *end_name(ArcEnd e) {
  switch (e) {
  case ArcEnd::Branch:
    return "branch";
  case ArcEnd::Boundary:
    return "boundary";
  case ArcEnd::Closed:
    return "closed";
  }
  return "?";
}

} // namespace

std::vector<int> parse_targets(const std::string &text) {
  std::vector<int> out;
  std::stringstream in(text);
  for (std::string tok; std::getline(in, tok, ',');) {
    tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
    if (!tok.empty() && (tok[0] == 'S' || tok[0] == 's'))
      tok.erase(0, 1);
    try {
      std::size_t used = 0;
      const int m = std::stoi(tok, &used);
      if (used != tok.size() || m < 1 || m > 6)
        throw std::invalid_argument(tok);
      out.push_back(m);
    } catch (const std::logic_error &) {
      throw Error(ErrorCode::InvalidInput, "bad target '" + tok + "' (expected S1..S6)");
    }
  }
  if (out.empty())
    throw Error(ErrorCode::InvalidInput, "empty target list");
  return out;
}

Analysis::Analysis(CurveSpec spec, AnalysisOptions opts) : spec_(std::move(spec)), opts_(std::move(opts)) {
  if (opts_.grid_step)
    spec_.grid_step = *opts_.grid_step;
  if (opts_.tol_root)
    spec_.tol.root_residual = *opts_.tol_root;
  if (opts_.tol_cluster)
    spec_.tol.cluster = *opts_.tol_cluster;
}

template <class F> auto Analysis::stage(const char *name, F &&fn) {
  try {
    return fn();
  } catch (const StageError &) {
    throw;
  } catch (const Error &e) {
    throw StageError(name, e.code(), e.what());
  }
}

Window Analysis::window() {
  if (spec_.window)
    return *spec_.window;
  // Bounding box of the branch points and the loop, with a margin.
  Window w{1e300, -1e300, 1e300, -1e300};
  const auto grow = [&](Complex z) {
    w.xmin = std::min(w.xmin, z.real());
    w.xmax = std::max(w.xmax, z.real());
    w.ymin = std::min(w.ymin, z.imag());
    w.ymax = std::max(w.ymax, z.imag());
  };
  for (const auto &b : branches().points)
    grow(b.z);
  for (const auto &v : spec_.loop.vertices())
    grow(v);
  w.xmin -= 0.5;
  w.xmax += 0.5;
  w.ymin -= 0.5;
  w.ymax += 0.5;
  return w;
}

const BranchSet &Analysis::branches() {
  if (!branches_)
    branches_ = stage("branch-points", [&] { return branch_points(spec_.curve, spec_.tol); });
  return *branches_;
}

const BPlusGraph &Analysis::bplus() {
  if (!bplus_) {
    const auto &b = branches();
    const Window w = window();
    bplus_ = stage("bplus", [&] {
      BPlusOptions o;
      o.tol = spec_.tol;
      o.grid_step = spec_.grid_step;
      o.threads = std::max(1, opts_.threads);
      return trace_bplus(spec_.curve, b, w, o);
    });
  }
  return *bplus_;
}

const RegionMap &Analysis::regions() {
  if (!regions_) {
    const auto &g = bplus();
    regions_ = stage("regions", [&] { return region_decomposition(g, spec_.loop, spec_.tol); });
  }
  return *regions_;
}

const BraidWord &Analysis::braid() {
  if (!braid_) {
    braid_ = stage("braid", [&] {
      TrackOptions to;
      to.tol = spec_.tol;
      const auto sheet = track_path(spec_.curve, spec_.loop.counter_clockwise(), to);
      return braid_from_crossings(crossings(sheet), spec_.curve.wdegree());
    });
  }
  return *braid_;
}

const SurfaceInvariants &Analysis::surface() {
  if (!surface_) {
    const auto &b = branches();
    surface_ = stage("surface", [&] {
      SurfaceOptions so;
      so.track.tol = spec_.tol;
      return surface_invariants(spec_.curve, spec_.loop, b, so);
    });
  }
  return *surface_;
}

const OrevkovPresentation &Analysis::presentation() {
  if (!presentation_) {
    const auto &r = regions();
    presentation_ = stage("presentation", [&] { return build_presentation(r, spec_.curve.wdegree()); });
  }
  return *presentation_;
}

const TietzeResult &Analysis::simplified() {
  if (!simplified_) {
    const auto &p = presentation();
    simplified_ = stage("presentation", [&] { return tietze_simplify(p.presentation); });
  }
  return *simplified_;
}

json Analysis::branch_json() {
  auto pts = json::array();
  for (const auto &b : branches().points)
    pts.push_back({{"z", complex_json(b.z)}, {"simple", b.simple}, {"label", b.label}});
  return pts;
}

json Analysis::bplus_json() {
  const auto &g = bplus();
  auto arcs = json::array();
  for (const auto &a : g.arcs)
    arcs.push_back({{"id", a.id},
                    {"label", a.label},
                    {"start", end_name(a.start)},
                    {"end", end_name(a.end)},
                    {"start_branch", a.start_branch},
                    {"end_branch", a.end_branch},
                    {"orientation", a.orientation},
                    {"points", a.points.size()}});
  const Window w = g.window;
  return {{"window", {{"xmin", w.xmin}, {"xmax", w.xmax}, {"ymin", w.ymin}, {"ymax", w.ymax}}},
          {"grid_step", g.grid_step},
          {"arc_count", g.arcs.size()},
          {"arcs", arcs}};
}

json Analysis::regions_json() {
  const auto &rm = regions();
  const auto &order = presentation().region_order;
  std::vector<int> rank(order.size());
  for (std::size_t k = 0; k < order.size(); ++k)
    rank[order[k]] = static_cast<int>(k) + 1;
  auto regs = json::array();
  for (std::size_t k = 0; k < order.size(); ++k)
    regs.push_back({{"name", "U" + std::to_string(k + 1)}, {"point", complex_json(rm.regions[order[k]].point)}});
  auto edges = json::array();
  for (const auto &e : rm.edges)
    edges.push_back({{"id", e.id},
                     {"label", e.label},
                     {"chord", e.chord},
                     {"from", "U" + std::to_string(rank[e.from_region])},
                     {"to", "U" + std::to_string(rank[e.to_region])}});
  auto terms = json::array();
  for (const auto &t : rm.terminals)
    terms.push_back({{"branch", t.branch},
                     {"z", complex_json(t.z)},
                     {"edge", t.edge},
                     {"region", "U" + std::to_string(rank[t.region])},
                     {"label", t.label}});
  return {{"region_count", rm.regions.size()},
          {"edge_count", rm.edges.size()},
          {"chord_count", rm.chord_count()},
          {"terminal_count", rm.terminals.size()},
          {"regions", regs},
          {"edges", edges},
          {"terminals", terms}};
}

json Analysis::braid_json() {
  const auto &b = braid();
  auto letters = json::array();
  for (const auto &l : b.letters())
    letters.push_back(l.sign * l.index);
  return {{"strands", b.strands()},
          {"word", b.to_text()},
          {"letters", letters},
          {"length", b.size()},
          {"exponent_sum", exponent_sum(b)},
          {"permutation", permutation(b).images},
          {"components", closure_components(b)}};
}

json Analysis::alexander_json() {
  const auto &b = braid();
  if (closure_components(b) != 1)
    return nullptr;
  return stage("alexander", [&] { return laurent_json(alexander_from_braid(b)); });
}

json Analysis::surface_json() {
  const auto &s = surface();
  auto local = json::array();
  for (std::size_t k = 0; k < s.local.size(); ++k)
    local.push_back({{"branch", s.branches[k]}, {"permutation", s.local[k].images}});
  return {{"strands", s.strands},
          {"enclosed_branch_points", s.enclosed},
          {"chi", s.chi},
          {"components", s.components},
          {"is_disc", s.is_disc()},
          {"base_point", complex_json(s.base)},
          {"local_monodromy", local}};
}

json Analysis::presentation_json() {
  const auto &p = presentation().presentation;
  const auto &t = simplified();
  auto raw = p.to_json();
  raw["text"] = p.to_text();
  auto simp = t.simplified.to_json();
  simp["text"] = t.simplified.to_text();
  auto images = json::object();
  for (std::size_t g = 0; g < t.images.size(); ++g)
    images[p.generators[g].name] = t.simplified.word_text(t.images[g]);
  simp["images"] = images;
  return {{"raw", raw}, {"simplified", simp}};
}

json Analysis::homs_json(const std::vector<int> &targets) {
  const auto &t = simplified();
  const auto &raw = presentation().presentation;
  auto out = json::array();
  for (int m : targets) {
    const auto h = stage("homs", [&] { return count_homs(t.simplified, m, opts_.hom_budget); });
    json entry{{"target", target_name(m)},
               {"total", h.total},
               {"surjective", h.surjective},
               {"nodes", h.nodes}};
    if (h.witness) {
      const SymmetricGroup group(m);
      auto w = json::object();
      for (std::size_t g = 0; g < t.images.size(); ++g) {
        int acc = 0;
        for (const auto &l : t.images[g]) {
          const int e = (*h.witness)[l.gen];
          acc = group.mul(acc, l.power > 0 ? e : group.inverse(e));
        }
        w[raw.generators[g].name] = group.cycle_text(acc);
      }
      entry["witness"] = w;
    } else {
      entry["witness"] = nullptr;
    }
    out.push_back(entry);
  }
  return out;
}

json Analysis::report() {
  json r;
  r["schema"] = 1;
  r["name"] = spec_.name;
  auto terms = json::array();
  for (const auto &[m, c] : spec_.curve.terms())
    terms.push_back({{"zdeg", m.zdeg}, {"wdeg", m.wdeg}, {"re", c.real()}, {"im", c.imag()}});
  r["curve"] = {{"terms", terms}, {"wdegree", spec_.curve.wdegree()}};
  r["branch_points"] = branch_json();
  r["bplus"] = bplus_json();
  r["regions"] = regions_json();
  r["braid"] = braid_json();
  r["braid"]["alexander"] = alexander_json();
  r["surface"] = surface_json();
  r["presentation"] = presentation_json();
  const auto ab = abelianization(presentation().presentation);
  r["abelianization"] = {{"free_rank", ab.free_rank}, {"torsion", ab.torsion}};

  std::vector<int> targets = opts_.targets;
  const auto homs = homs_json(targets);
  r["homs"] = homs;
  json cert{{"status", "inconclusive"}, {"target", nullptr}, {"witness", nullptr}};
  for (const auto &h : homs)
    if (h["surjective"].get<std::uint64_t>() > 0 && h["target"].get<std::string>() != "S1" &&
        h["target"].get<std::string>() != "S2") {
      cert = {{"status", "certified"}, {"target", h["target"]}, {"witness", h["witness"]}};
      break;
    }
  r["certificate"] = cert;

  const auto &s = surface();
  const auto &b = braid();
  json notes = json::array();
  const bool bands_ok = exponent_sum(b) == s.enclosed;
  const bool knot_iff_z = (closure_components(b) == 1) == ab.is_z();
  r["checks"] = {{"exponent_sum_equals_enclosed_branch_points", bands_ok},
                 {"chi_equals_sheets_minus_bands", s.chi == band_euler_characteristic(s.strands, s.enclosed)},
                 {"knot_iff_h1_is_z", s.is_disc() ? json(knot_iff_z) : json(nullptr)}};
  if (!bands_ok)
    notes.push_back("exponent sum differs from the number of enclosed branch points");
  if (s.is_disc() && !knot_iff_z)
    notes.push_back("boundary component count disagrees with first homology");

  std::string verdict = "inconclusive";
  if (!s.is_disc())
    notes.push_back("not a disc");
  else if (cert["status"] != "certified")
    notes.push_back("no surjection onto the target groups; knottedness not certified");
  else
    verdict = "knotted-certified";
  r["verdict"] = verdict;
  r["notes"] = notes;
  return r;
}

} // namespace curvebraid
