#pragma once

#include "curvebraid/braid.hpp"
#include "curvebraid/config.hpp"
#include "curvebraid/error.hpp"
#include "curvebraid/geometry.hpp"
#include "curvebraid/groups.hpp"
#include "curvebraid/path.hpp"
#include "curvebraid/poly.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace curvebraid {

/// Input file contents: the curve, the disc boundary and numerical settings.
struct CurveSpec {
  std::string name;
  BivariatePoly curve;
  PlanePath loop; // boundary of D
  std::optional<Window> window;
  double grid_step = 0.01;
  Tolerances tol;
};

/// Throws Error(InvalidInput) with a field path on malformed input.
CurveSpec parse_curve_spec(const nlohmann::json &j);
CurveSpec load_curve_spec(const std::string &path);

struct AnalysisOptions {
  std::optional<double> grid_step; // overrides the spec
  std::optional<double> tol_root;
  std::optional<double> tol_cluster;
  std::uint64_t hom_budget = 50'000'000;
  std::vector<int> targets{3};
  int threads = 1;
};

/// An Error raised inside a named pipeline stage.
class StageError : public Error {
public:
  StageError(std::string stage, ErrorCode code, const std::string &what)
      : Error(code, what), stage_(std::move(stage)) {}
  const std::string &stage() const { return stage_; }

private:
  std::string stage_;
};

/// Runs the stages on demand and caches their results.
class Analysis {
public:
  Analysis(CurveSpec spec, AnalysisOptions opts);

  const CurveSpec &spec() const { return spec_; }
  const AnalysisOptions &options() const { return opts_; }
  Window window();

  const BranchSet &branches();
  const BPlusGraph &bplus();
  const RegionMap &regions();
  const BraidWord &braid();
  const SurfaceInvariants &surface();
  const OrevkovPresentation &presentation();
  const TietzeResult &simplified();

  nlohmann::json branch_json();
  nlohmann::json bplus_json();
  nlohmann::json regions_json();
  nlohmann::json braid_json();
  nlohmann::json alexander_json();
  nlohmann::json surface_json();
  nlohmann::json presentation_json();
  nlohmann::json homs_json(const std::vector<int> &targets);
  /// Every stage plus certificate, consistency checks and verdict. No timestamps.
  nlohmann::json report();

private:
  template <class F> auto stage(const char *name, F &&fn);

  CurveSpec spec_;
  AnalysisOptions opts_;
  std::optional<BranchSet> branches_;
  std::optional<BPlusGraph> bplus_;
  std::optional<RegionMap> regions_;
  std::optional<BraidWord> braid_;
  std::optional<SurfaceInvariants> surface_;
  std::optional<OrevkovPresentation> presentation_;
  std::optional<TietzeResult> simplified_;
};

/// "S3,S4" or "3,4" -> {3, 4}.
std::vector<int> parse_targets(const std::string &text);

} // namespace curvebraid
