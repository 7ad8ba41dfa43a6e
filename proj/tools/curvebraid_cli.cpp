#include "curvebraid/pipeline.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <thread>

using namespace curvebraid;

namespace {

int thread_cap() {
  int n = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  if (const char *env = std::getenv("CURVEBRAID_THREADS")) {
    const int cap = std::atoi(env);
    if (cap >= 1)
      n = std::min(n, cap);
  }
  return n;
}

void emit(const std::string &text, const std::string &out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f)
    throw Error(ErrorCode::InvalidInput, "cannot write " + out);
  f << text;
}

void write_file(const std::string &path, const std::string &text) {
  std::ofstream f(path);
  if (!f)
    throw Error(ErrorCode::InvalidInput, "cannot write " + path);
  f << text;
}

int fail(const std::string &stage, const std::string &code, const std::string &message, int status) {
  nlohmann::json j{{"error", {{"stage", stage}, {"code", code}, {"message", message}}}};
  std::cerr << j.dump() << '\n';
  return status;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Braid monodromy, presentations and knottedness certificates for pieces of plane curves"};
  app.require_subcommand(1);
  app.fallthrough();

  AnalysisOptions opts;
  double tol_root = 0.0, tol_cluster = 0.0, grid_step = 0.0;
  std::string targets = "S3", out, input;
  app.add_option("--tol-root", tol_root, "root residual tolerance")->check(CLI::PositiveNumber);
  app.add_option("--tol-cluster", tol_cluster, "root cluster tolerance")->check(CLI::PositiveNumber);
  app.add_option("--grid-step", grid_step, "B+ tracing grid step")->check(CLI::PositiveNumber);
  app.add_option("--hom-budget", opts.hom_budget, "node budget of the homomorphism search");
  app.add_option("--targets", targets, "certificate target groups, e.g. S3,S4");
  app.add_option("--out", out, "write output here instead of stdout");

  const auto sub = [&](const char *name, const char *help) {
    auto *s = app.add_subcommand(name, help);
    s->add_option("spec", input, "curve spec JSON")->required();
    return s;
  };
  auto *analyze = sub("analyze", "run every stage and print the report");
  auto *branch = sub("branch-points", "zeros of the w-discriminant");
  auto *bplus = sub("bplus", "trace the real-part coincidence graph");
  std::string svg, csv;
  bplus->add_option("--svg", svg, "write an SVG diagram");
  bplus->add_option("--csv", csv, "write arc polylines as CSV");
  auto *braid = sub("braid", "braid monodromy along the loop");
  auto *surface = sub("surface", "Euler characteristic and components of the curve piece");
  auto *presentation = sub("presentation", "presentation of the complement group");
  std::string format = "text";
  presentation->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  auto *homs = sub("homs", "count homomorphisms into symmetric groups");
  std::string target;
  homs->add_option("--target", target, "target group(s), e.g. S3 or S3,S4");
  auto *alexander = sub("alexander", "Alexander polynomial of the boundary knot");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int status = app.exit(e);
    return status == 0 ? 0 : 2;
  }

  try {
    if (tol_root > 0.0)
      opts.tol_root = tol_root;
    if (tol_cluster > 0.0)
      opts.tol_cluster = tol_cluster;
    if (grid_step > 0.0)
      opts.grid_step = grid_step;
    opts.targets = parse_targets(targets);
    opts.threads = thread_cap();

    Analysis a(load_curve_spec(input), opts);
    nlohmann::json result;
    if (*analyze) {
      result = a.report();
    } else if (*branch) {
      result = a.branch_json();
    } else if (*bplus) {
      result = a.bplus_json();
      if (!svg.empty())
        write_file(svg, bplus_svg(a.bplus()));
      if (!csv.empty())
        write_file(csv, bplus_csv(a.bplus()));
    } else if (*braid) {
      result = a.braid_json();
    } else if (*surface) {
      result = a.surface_json();
    } else if (*presentation) {
      if (format == "text") {
        emit(a.presentation().presentation.to_text(), out);
        return 0;
      }
      result = a.presentation_json();
    } else if (*homs) {
      result = a.homs_json(target.empty() ? opts.targets : parse_targets(target));
    } else if (*alexander) {
      result = a.alexander_json();
      if (result.is_null())
        throw StageError("alexander", ErrorCode::NotAKnot, "braid closure has more than one component");
    }
    emit(result.dump(2) + "\n", out);
    return 0;
  } catch (const StageError &e) {
    return fail(e.stage(), std::string(to_string(e.code())), e.what(), exit_status(e.code()));
  } catch (const Error &e) {
    return fail("input", std::string(to_string(e.code())), e.what(), exit_status(e.code()));
  } catch (const std::exception &e) {
    return fail("internal", "Internal", e.what(), 1);
  }
}
