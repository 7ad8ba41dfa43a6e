#include "doctest.h"

#include "curvebraid/error.hpp"
#include "curvebraid/pipeline.hpp"

#include "support.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

using namespace curvebraid;
using nlohmann::json;

namespace {

json read_json(const std::string &path) {
  std::ifstream in(path);
  REQUIRE(in);
  return json::parse(in);
}

// Structural equality with numbers compared to an absolute tolerance.
bool close(const json &a, const json &b, const std::string &where, std::string &diff) {
  if (a.is_number() && b.is_number()) {
    if (std::abs(a.get<double>() - b.get<double>()) <= 1e-9)
      return true;
    diff = where;
    return false;
  }
  if (a.type() != b.type()) {
    diff = where;
    return false;
  }
  if (a.is_object()) {
    if (a.size() != b.size()) {
      diff = where;
      return false;
    }
    for (auto it = a.begin(); it != a.end(); ++it)
      if (!b.contains(it.key()) || !close(*it, b.at(it.key()), where + "/" + it.key(), diff))
        return false;
    return true;
  }
  if (a.is_array()) {
    if (a.size() != b.size()) {
      diff = where;
      return false;
    }
    for (std::size_t k = 0; k < a.size(); ++k)
      if (!close(a[k], b[k], where + "/" + std::to_string(k), diff))
        return false;
    return true;
  }
  if (a != b)
    diff = where;
  return a == b;
}

json fixture_spec() { return read_json(testing::data_path("rudolph_8_20.json")); }

ErrorCode parse_error(const json &j) {
  try {
    (void)parse_curve_spec(j);
  } catch (const Error &e) {
    return e.code();
  }
  return ErrorCode::NonConvergence; // sentinel: parsing unexpectedly succeeded
}

int run_cli(const std::string &args) {
  const std::string cmd = std::string(CURVEBRAID_CLI) + " " + args + " > /dev/null 2>&1";
  const int raw = std::system(cmd.c_str());
  return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

} // namespace

TEST_CASE("curve spec parsing") {
  const auto spec = parse_curve_spec(fixture_spec());
  CHECK(spec.name == "rudolph_8_20");
  CHECK(spec.curve.wdegree() == 3);
  CHECK(spec.curve.zdegree() == 4);
  CHECK(spec.loop.closed());
  REQUIRE(spec.window);
  CHECK(spec.window->xmin == doctest::Approx(-1.6));

  const auto circle = load_curve_spec(testing::data_path("sqrt_local.json"));
  CHECK(circle.loop.vertices().size() == 128);
  CHECK(std::abs(circle.loop.vertices()[0] - std::polar(0.5, 1.0)) < 1e-12);
}

TEST_CASE("curve spec errors") {
  auto j = fixture_spec();
  CHECK(parse_error(json::object()) == ErrorCode::InvalidInput);
  j["schema"] = 2;
  CHECK(parse_error(j) == ErrorCode::InvalidInput);
  j = fixture_spec();
  j.erase("terms");
  CHECK(parse_error(j) == ErrorCode::InvalidInput);
  j = fixture_spec();
  j["terms"][0]["wdeg"] = -1;
  CHECK(parse_error(j) == ErrorCode::InvalidInput);
  j = fixture_spec();
  j["loop"] = json::object({{"vertices", json::array({json::array({0, 0}), json::array({1, 0})})}});
  CHECK(parse_error(j) == ErrorCode::InvalidInput);
  j = fixture_spec();
  j["loop"] = json::object({{"circle", {{"center", {0, 0}}, {"radius", -1.0}}}});
  CHECK(parse_error(j) == ErrorCode::InvalidInput);

  try {
    (void)load_curve_spec(testing::data_path("missing.json"));
    FAIL("expected InvalidInput");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::InvalidInput);
  }
}

TEST_CASE("target parsing") {
  CHECK(parse_targets("S3,S4") == std::vector<int>{3, 4});
  CHECK(parse_targets("3") == std::vector<int>{3});
  CHECK_THROWS_AS(parse_targets("S3,,"), Error);
  CHECK_THROWS_AS(parse_targets("Q8"), Error);
}

TEST_CASE("fixture report") {
  AnalysisOptions o;
  o.threads = 4;
  Analysis a(load_curve_spec(testing::data_path("rudolph_8_20.json")), o);
  const auto r = a.report();
  CHECK(r["verdict"] == "knotted-certified");
  CHECK(r["notes"].empty());
  CHECK(r["braid"]["exponent_sum"] == 2);
  CHECK(r["braid"]["alexander"]["coeffs"] == json::array({1, -2, 3, -2, 1}));
  CHECK(r["surface"]["chi"] == 1);
  CHECK(r["regions"]["region_count"] == 4);
  CHECK(r["regions"]["edge_count"] == 5);
  for (const auto &[k, v] : r["checks"].items()) {
    INFO(k);
    CHECK(v == true);
  }

  SUBCASE("stable across runs and thread counts") {
    AnalysisOptions one;
    one.threads = 1;
    Analysis b(load_curve_spec(testing::data_path("rudolph_8_20.json")), one);
    CHECK(b.report().dump() == r.dump());
  }
  SUBCASE("matches the stored report") {
    std::string diff;
    const bool same = close(r, read_json(std::string(CURVEBRAID_GOLDEN_DIR) + "/rudolph_8_20.report.json"), "", diff);
    INFO("first difference at ", diff);
    CHECK(same);
  }
}

TEST_CASE("local model and empty disc") {
  Analysis local(load_curve_spec(testing::data_path("sqrt_local.json")), {});
  const auto r = local.report();
  CHECK(r["braid"]["word"] == "s1");
  CHECK(r["surface"]["is_disc"] == true);
  CHECK(r["verdict"] == "inconclusive");
  CHECK(r["abelianization"]["free_rank"] == 1);

  Analysis empty(load_curve_spec(testing::data_path("rudolph_empty.json")), {});
  const auto e = empty.report();
  CHECK(e["surface"]["components"] == 3);
  CHECK(e["braid"]["alexander"].is_null());
  CHECK(e["verdict"] == "inconclusive");
  CHECK(e["notes"] == json::array({"not a disc"}));
  CHECK(e["abelianization"]["free_rank"] == 3);
}

TEST_CASE("large loop") {
  AnalysisOptions o;
  o.threads = 4;
  Analysis a(load_curve_spec(testing::data_path("rudolph_large.json")), o);
  CHECK(a.braid().to_text() == "s1 s2 s1 s2 s1 s2 s1 s2");
  CHECK(a.surface().chi == -5);
  CHECK(a.alexander_json()["text"] == "1 - t + t^3 - t^5 + t^6");
}

TEST_CASE("cli exit codes") {
  const std::string fixture = testing::data_path("rudolph_8_20.json");
  CHECK(run_cli("analyze " + fixture) == 0);
  CHECK(run_cli("analyze " + testing::data_path("rudolph_empty.json")) == 0);
  CHECK(run_cli("presentation --format json " + fixture) == 0);
  CHECK(run_cli("analyze " + testing::data_path("missing.json")) == 2);
  CHECK(run_cli("frobnicate") == 2);
  CHECK(run_cli("alexander " + testing::data_path("rudolph_empty.json")) != 0);
  CHECK(run_cli("--hom-budget 3 homs --target S5 " + fixture) == 4);
}
