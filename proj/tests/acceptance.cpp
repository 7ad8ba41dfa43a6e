// Acceptance run for the bundled 8_20 example: one PASS/FAIL line per criterion.

#include "curvebraid/braid.hpp"
#include "curvebraid/geometry.hpp"
#include "curvebraid/groups.hpp"
#include "curvebraid/laurent.hpp"
#include "curvebraid/pipeline.hpp"
#include "curvebraid/smith.hpp"

#include "oracles/fox.hpp"
#include "oracles/homs.hpp"
#include "oracles/minors.hpp"
#include "support.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace curvebraid;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string &what) {
    if (!cond) {
      ok = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

int failures = 0;

void criterion(int id, const std::string &title, double limit_s, const std::function<Outcome()> &body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception &e) {
    o.ok = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit_s > 0 && secs >= limit_s)
    o.expect(false, "took " + std::to_string(secs) + " s, limit " + std::to_string(limit_s) + " s");
  std::printf("[%s] %2d %s (%.2f s)%s%s\n", o.ok ? "PASS" : "FAIL", id, title.c_str(), secs,
              o.detail.empty() ? "" : " : ", o.detail.c_str());
  std::fflush(stdout);
  failures += o.ok ? 0 : 1;
}

std::string slurp(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

AnalysisOptions threaded() {
  AnalysisOptions o;
  o.threads = 4;
  return o;
}

} // namespace

int main() {
  const auto f = testing::fixture_curve();
  const auto spec = load_curve_spec(testing::data_path("rudolph_8_20.json"));
  Analysis fixture(spec, threaded());

  criterion(1, "branch set is the eighth roots of unity", 1.0, [&] {
    Outcome o;
    const auto b = branch_points(f);
    o.expect(b.points.size() == 8, "found " + std::to_string(b.points.size()) + " points");
    for (const auto &p : b.points)
      o.expect(std::abs(std::pow(p.z, 8) - 1.0) <= 1e-9, "|z^8 - 1| too large");
    return o;
  });

  criterion(2, "B+ has one ray per branch point with the factorization labels", 30.0, [&] {
    Outcome o;
    BPlusOptions opts;
    opts.grid_step = 0.01;
    opts.threads = 4;
    const auto g = trace_bplus(f, testing::fixture_window(), opts);
    o.expect(g.arcs.size() == 8, std::to_string(g.arcs.size()) + " arcs");
    std::vector<int> per_branch(g.branches.points.size(), 0);
    for (const auto &a : g.arcs) {
      const int at = a.start == ArcEnd::Branch ? a.start_branch : a.end_branch;
      if (at < 0) {
        o.expect(false, "arc without a branch end");
        continue;
      }
      ++per_branch[at];
      // At z^4 = s (s = +-1) the fiber is (w - s)^2 (w + 2s): the double root s sits
      // above the simple root -2s when s = 1, so the coinciding pair is (2,3).
      const double s = std::real(std::pow(g.branches.points[at].z, 4));
      const int expected = s > 0 ? 2 : 1;
      o.expect(a.label == expected, "arc " + std::to_string(a.id) + " has label " + std::to_string(a.label));
    }
    for (int n : per_branch)
      o.expect(n == 1, "a branch point emits " + std::to_string(n) + " arcs");
    return o;
  });

  criterion(3, "fixture loop: 4 regions, 5 edges, 2 branch terminals", 0.0, [&] {
    Outcome o;
    const auto &r = fixture.regions();
    o.expect(r.regions.size() == 4, std::to_string(r.regions.size()) + " regions");
    o.expect(r.edges.size() == 5, std::to_string(r.edges.size()) + " edges");
    o.expect(r.terminals.size() == 2, std::to_string(r.terminals.size()) + " terminals");
    return o;
  });

  criterion(4, "presentation reproduces the published relation list", 0.0, [&] {
    Outcome o;
    const auto &p = fixture.presentation().presentation;
    o.expect(p.generator_count() == 12, "generator count");
    o.expect(p.relations.size() == 11, "relation count");
    const std::string expected = "generators: a11 a21 a31 a12 a22 a32 a13 a23 a33 a14 a24 a34\n"
                                 "1. edge: a11 = a21\n"
                                 "2. edge: a11 = a12, a31 = a22, a21 = a31 a32 a31^-1\n"
                                 "3. edge: a12 = a13, a32 = a23, a22 = a32 a33 a32^-1\n"
                                 "4. edge: a13 = a14, a33 = a24, a23 = a33 a34 a33^-1\n"
                                 "5. edge: a14 = a24\n";
    o.expect(p.to_text() == expected, "text differs:\n" + p.to_text());
    return o;
  });

  criterion(5, "S3 surjection with witness conjugate to a11->(23), a31->(12)", 0.0, [&] {
    Outcome o;
    const auto &t = fixture.simplified();
    const auto t0 = std::chrono::steady_clock::now();
    const auto h = count_homs(t.simplified, 3);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.expect(secs < 5.0, "search took " + std::to_string(secs) + " s");
    o.expect(h.surjective > 0 && h.witness.has_value(), "no surjection");
    if (h.witness) {
      const SymmetricGroup s3(3);
      const auto image = [&](int g) {
        int acc = 0;
        for (const auto &l : t.images[g])
          acc = s3.mul(acc, l.power > 0 ? (*h.witness)[l.gen] : s3.inverse((*h.witness)[l.gen]));
        return acc;
      };
      const int a11 = image(0), a31 = image(2);
      const int t23 = s3.index_of({0, 2, 1}), t12 = s3.index_of({1, 0, 2});
      bool conjugate = false;
      for (int g = 0; g < s3.order(); ++g)
        conjugate = conjugate || (s3.mul(s3.mul(s3.inverse(g), a11), g) == t23 &&
                                  s3.mul(s3.mul(s3.inverse(g), a31), g) == t12);
      o.expect(conjugate, "witness a11 -> " + s3.cycle_text(a11) + ", a31 -> " + s3.cycle_text(a31));
    }
    o.expect(fixture.report()["verdict"] == "knotted-certified", "verdict");
    return o;
  });

  criterion(6, "fixture piece is one disc; an empty loop gives three discs", 0.0, [&] {
    Outcome o;
    const auto &s = fixture.surface();
    o.expect(s.chi == 1 && s.components == 1, "fixture chi " + std::to_string(s.chi) + ", components " +
                                                  std::to_string(s.components));
    Analysis empty(load_curve_spec(testing::data_path("rudolph_empty.json")), {});
    const auto &e = empty.surface();
    o.expect(e.components == 3, "empty loop gives " + std::to_string(e.components) + " components");
    return o;
  });

  criterion(7, "boundary knot: one component, exponent sum 2, Alexander of 8_20", 0.0, [&] {
    Outcome o;
    const auto &b = fixture.braid();
    o.expect(closure_components(b) == 1, "components");
    o.expect(exponent_sum(b) == 2, "exponent sum " + std::to_string(exponent_sum(b)));
    o.expect(band_euler_characteristic(3, exponent_sum(b)) == fixture.surface().chi, "chi != 3 - bands");
    // Table value, recomputed by Fox calculus from the tabulated braid s1^3 s2 s1^-3 s2.
    const auto table = oracle::alexander(3, {1, 1, 1, 2, -1, -1, -1, 2});
    const auto squared = (1 - LaurentPoly::t() + LaurentPoly::monomial(1, 2)) *
                         (1 - LaurentPoly::t() + LaurentPoly::monomial(1, 2));
    const auto got = alexander_from_braid(b);
    std::vector<long long> coeffs;
    for (int e = got.min_exponent(); e <= got.max_exponent(); ++e)
      coeffs.push_back(got.coeff(e));
    o.expect(coeffs == table, "Alexander " + got.to_string());
    o.expect(got == squared.normalized(), "Alexander is not (t^2 - t + 1)^2");
    return o;
  });

  criterion(8, "loop |z| = 1.2: exponent sum 8, 3-cycle, chi -5", 0.0, [&] {
    Outcome o;
    Analysis large(load_curve_spec(testing::data_path("rudolph_large.json")), threaded());
    const auto &b = large.braid();
    o.expect(exponent_sum(b) == 8, "exponent sum " + std::to_string(exponent_sum(b)));
    const auto cycles = permutation(b).cycles();
    o.expect(cycles.size() == 1 && cycles[0].size() == 3, "permutation is not a 3-cycle");
    o.expect(large.surface().chi == -5, "chi " + std::to_string(large.surface().chi));
    // Closure is T(3,4) of genus 3, so its fibre surface has chi 1 - 2g = -5 as well.
    o.expect(1 - 2 * 3 == band_euler_characteristic(3, exponent_sum(b)), "genus mismatch");
    return o;
  });

  criterion(9, "oracle equivalence and ring property suites", 0.0, [&] {
    Outcome o;
    BraidWord s13(2, {{1, 1}, {1, 1}, {1, 1}});
    o.expect(alexander_from_braid(s13) == 1 - LaurentPoly::t() + LaurentPoly::monomial(1, 2), "trefoil Alexander");
    o.expect(oracle::alexander(2, {1, 1, 1}) == std::vector<long long>{1, -1, 1}, "Fox trefoil");
    const auto trefoil = Presentation::from_relators({"x", "y"}, {"x y x y^-1 x^-1 y^-1"});
    const auto h = count_homs(trefoil, 3);
    const auto brute = oracle::count_homs(2, {{{0, 1}, {1, 1}, {0, 1}, {1, -1}, {0, -1}, {1, -1}}}, 3);
    o.expect(h.total == 12 && brute.total == 12, "trefoil homs " + std::to_string(h.total));

    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> dim(1, 4), val(-9, 9), e(-3, 3), c(-5, 5), nterms(0, 4);
    int snf_bad = 0, ring_bad = 0;
    for (int trial = 0; trial < 1000; ++trial) {
      const int r = dim(rng), cols = dim(rng);
      IntMatrix m(r, cols);
      oracle::Mat om(r, std::vector<long long>(cols));
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < cols; ++j)
          om[i][j] = m(i, j) = val(rng);
      const auto d = smith_normal_form(m);
      const auto expect = oracle::invariant_factors(om);
      snf_bad += std::vector<long long>(d.begin(), d.end()) == expect ? 0 : 1;

      const auto random_laurent = [&] {
        std::map<int, LaurentPoly::Coeff> terms;
        for (int k = nterms(rng); k > 0; --k)
          terms[e(rng)] += c(rng);
        return LaurentPoly(terms);
      };
      const auto a = random_laurent(), b = random_laurent(), z = random_laurent();
      const bool ring = (a * b) * z == a * (b * z) && a * (b + z) == a * b + a * z && a * b == b * a &&
                        (a + b) - b == a;
      ring_bad += ring ? 0 : 1;
    }
    o.expect(snf_bad == 0, std::to_string(snf_bad) + " Smith forms disagree with determinantal divisors");
    o.expect(ring_bad == 0, std::to_string(ring_bad) + " Laurent ring identities fail");
    return o;
  });

  criterion(10, "repeated CLI analyze runs are byte identical", 0.0, [&] {
    Outcome o;
    const std::string a = "acceptance_run_a.json", b = "acceptance_run_b.json";
    for (const auto &out : {a, b}) {
      const std::string cmd = std::string(CURVEBRAID_CLI) + " --out " + out + " analyze " +
                              testing::data_path("rudolph_8_20.json");
      o.expect(std::system(cmd.c_str()) == 0, "cli failed");
    }
    const auto ra = slurp(a), rb = slurp(b);
    o.expect(!ra.empty() && ra == rb, "reports differ");
    std::remove(a.c_str());
    std::remove(b.c_str());
    return o;
  });

  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
