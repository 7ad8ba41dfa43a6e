#include "doctest.h"

#include "curvebraid/braid.hpp"
#include "curvebraid/error.hpp"

#include "oracles/fox.hpp"
#include "support.hpp"

#include <random>

using namespace curvebraid;

namespace {

BraidWord word(int n, std::vector<int> letters) {
  std::vector<BraidLetter> l;
  for (int x : letters)
    l.push_back({std::abs(x), x > 0 ? 1 : -1});
  return BraidWord(n, l);
}

std::vector<long long> coeffs(const LaurentPoly &p) {
  std::vector<long long> out;
  for (int e = p.min_exponent(); e <= p.max_exponent(); ++e)
    out.push_back(p.coeff(e));
  return out;
}

std::vector<int> signed_letters(const BraidWord &b) {
  std::vector<int> out;
  for (const auto &l : b.letters())
    out.push_back(l.sign * l.index);
  return out;
}

BraidWord random_word(std::mt19937_64 &rng, int n, int len) {
  std::uniform_int_distribution<int> idx(1, n - 1), sgn(0, 1);
  std::vector<BraidLetter> l;
  for (int k = 0; k < len; ++k)
    l.push_back({idx(rng), sgn(rng) ? 1 : -1});
  return BraidWord(n, l);
}

// One random braid-relation rewrite, if any applies.
BraidWord rewrite(std::mt19937_64 &rng, const BraidWord &b) {
  auto l = b.letters();
  std::vector<std::size_t> spots(l.size());
  for (std::size_t k = 0; k < l.size(); ++k)
    spots[k] = k;
  std::shuffle(spots.begin(), spots.end(), rng);
  for (std::size_t k : spots) {
    if (k + 1 < l.size() && std::abs(l[k].index - l[k + 1].index) >= 2) {
      std::swap(l[k], l[k + 1]);
      return BraidWord(b.strands(), l);
    }
    if (k + 2 < l.size() && l[k].sign == 1 && l[k + 1].sign == 1 && l[k + 2].sign == 1 &&
        l[k].index == l[k + 2].index && std::abs(l[k].index - l[k + 1].index) == 1) {
      std::swap(l[k].index, l[k + 1].index);
      l[k + 2].index = l[k].index;
      return BraidWord(b.strands(), l);
    }
  }
  // Insert a cancelling pair instead.
  std::uniform_int_distribution<int> idx(1, b.strands() - 1);
  const int i = idx(rng);
  l.insert(l.begin(), {{i, 1}, {i, -1}});
  return BraidWord(b.strands(), l);
}

} // namespace

TEST_CASE("braid text round trip") {
  const auto b = word(3, {2, 2, 1, -2});
  CHECK(b.to_text() == "s2 s2 s1 -s2");
  CHECK(BraidWord::from_text(3, "s2 s2 s1 -s2") == b);
  CHECK(BraidWord(3, {}).to_text().empty());
  CHECK_THROWS_AS(BraidWord::from_text(3, "s3"), Error);
  CHECK_THROWS_AS(BraidWord::from_text(3, "x1"), Error);
}

TEST_CASE("braid_from_crossings") {
  CHECK(braid_from_crossings({}, 3).size() == 0);
  const auto b = braid_from_crossings({{0.2, 2, 1}, {0.6, 2, 1}}, 3);
  CHECK(b == word(3, {2, 2}));
}

TEST_CASE("permutation, exponent sum, closure components") {
  CHECK(permutation(word(3, {1})).images == std::vector<int>{2, 1, 3});
  CHECK(permutation(word(3, {2, 2})) == Perm::identity(3));
  const auto big = word(3, {1, 2, 1, 2, 1, 2, 1, 2});
  const auto p = permutation(big);
  CHECK(p.cycles().size() == 1);
  CHECK(p == permutation(word(3, {1, 2})));
  CHECK(exponent_sum(BraidWord(3, {})) == 0);
  CHECK(exponent_sum(word(3, {2, 2})) == 2);
  CHECK(exponent_sum(big) == 8);
  CHECK(closure_components(BraidWord(3, {})) == 3);
  CHECK(closure_components(word(2, {1})) == 1);
}

TEST_CASE("band Euler characteristic") {
  CHECK(band_euler_characteristic(3, 2) == 1);
  CHECK(band_euler_characteristic(3, 8) == -5);
  CHECK(band_euler_characteristic(1, 0) == 1);
  // T(3,4) has genus (3-1)(4-1)/2 = 3, so chi = 1 - 2g = -5.
  CHECK(band_euler_characteristic(3, 8) == 1 - 2 * 3);
}

TEST_CASE("permutation is a homomorphism and exponent sum survives braid relations") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + trial % 4;
    const auto a = random_word(rng, n, 6), b = random_word(rng, n, 5);
    CHECK(permutation(a * b) == permutation(a).then(permutation(b)));
    auto c = a;
    for (int k = 0; k < 5; ++k)
      c = rewrite(rng, c);
    CHECK(exponent_sum(c) == exponent_sum(a));
    CHECK(permutation(c) == permutation(a));
  }
}

TEST_CASE("Alexander polynomial examples") {
  using V = std::vector<long long>;
  CHECK(coeffs(alexander_from_braid(word(2, {1, 1, 1}))) == V{1, -1, 1});
  CHECK(coeffs(alexander_from_braid(word(2, {1}))) == V{1});
  CHECK(coeffs(alexander_from_braid(word(1, {}))) == V{1});
  // Figure eight: 1 - 3t + t^2.
  CHECK(coeffs(alexander_from_braid(word(3, {1, -2, 1, -2}))) == V{1, -3, 1});
  // 8_20 from the knot table braid s1^3 s2 s1^-3 s2.
  const auto k820 = word(3, {1, 1, 1, 2, -1, -1, -1, 2});
  CHECK(coeffs(alexander_from_braid(k820)) == V{1, -2, 3, -2, 1});
  CHECK(oracle::alexander(3, signed_letters(k820)) == V{1, -2, 3, -2, 1});
  // T(3,4).
  CHECK(coeffs(alexander_from_braid(word(3, {1, 2, 1, 2, 1, 2, 1, 2}))) == V{1, -1, 0, 1, 0, -1, 1});
  try {
    (void)alexander_from_braid(word(3, {1}));
    FAIL("expected NotAKnot");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::NotAKnot);
  }
}

TEST_CASE("Burau Alexander polynomial agrees with Fox calculus") {
  std::mt19937_64 rng(9);
  int knots = 0;
  for (int trial = 0; trial < 600 && knots < 200; ++trial) {
    const int n = 2 + trial % 4;
    const auto b = random_word(rng, n, 3 + trial % 8);
    if (closure_components(b) != 1)
      continue;
    ++knots;
    const auto burau = alexander_from_braid(b);
    CHECK(coeffs(burau) == oracle::alexander(n, signed_letters(b)));
    CHECK(std::llabs(burau.value_at_one()) == 1);
  }
  CHECK(knots >= 100);
}

TEST_CASE("Alexander polynomial is a conjugacy and braid-relation invariant") {
  std::mt19937_64 rng(21);
  int checked = 0;
  for (int trial = 0; trial < 800 && checked < 150; ++trial) {
    const int n = 2 + trial % 3;
    const auto b = random_word(rng, n, 2 + trial % 7);
    if (closure_components(b) != 1)
      continue;
    ++checked;
    const auto d = alexander_from_braid(b);
    const auto g = random_word(rng, n, 3);
    CHECK(alexander_from_braid(g * b * g.inverse()) == d);
    auto c = b;
    for (int k = 0; k < 4; ++k)
      c = rewrite(rng, c);
    CHECK(alexander_from_braid(c) == d);
  }
}

TEST_CASE("surface invariants") {
  const auto f = testing::fixture_curve();
  const auto branches = branch_points(f);
  SUBCASE("bundled disc") {
    const auto spec = load_curve_spec(testing::data_path("rudolph_8_20.json"));
    const auto s = surface_invariants(f, spec.loop, branches);
    CHECK(s.enclosed == 2);
    CHECK(s.chi == 1);
    CHECK(s.components == 1);
    CHECK(s.is_disc());
    for (const auto &p : s.local)
      CHECK(p.cycles().size() == 2); // a transposition
  }
  SUBCASE("disc enclosing nothing") {
    const auto s = surface_invariants(f, PlanePath::circle(0.0, 0.3, 64, 0.3), branches);
    CHECK(s.chi == 3);
    CHECK(s.components == 3);
  }
  SUBCASE("disc of radius 1.2") {
    const auto s = surface_invariants(f, PlanePath::circle(0.0, 1.2, 256, 0.3), branches);
    CHECK(s.enclosed == 8);
    CHECK(s.chi == -5);
    CHECK(s.components == 1);
  }
}
