#pragma once

#include "curvebraid/config.hpp"
#include "curvebraid/geometry.hpp"
#include "curvebraid/laurent.hpp"
#include "curvebraid/path.hpp"
#include "curvebraid/poly.hpp"
#include "curvebraid/tracking.hpp"

#include <string>
#include <vector>

namespace curvebraid {

struct BraidLetter {
  int index = 1; // sigma_index, 1 <= index < strands
  int sign = 1;
  bool operator==(const BraidLetter &) const = default;
};

class BraidWord {
public:
  BraidWord() = default;
  BraidWord(int strands, std::vector<BraidLetter> letters);

  int strands() const { return strands_; }
  const std::vector<BraidLetter> &letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }

  BraidWord operator*(const BraidWord &o) const;
  BraidWord inverse() const;
  bool operator==(const BraidWord &) const = default;

  /// "s2 s2 -s1"; the empty word prints as "".
  std::string to_text() const;
  static BraidWord from_text(int strands, const std::string &text);

private:
  int strands_ = 1;
  std::vector<BraidLetter> letters_;
};

/// 1-based images: images[k - 1] is where position k ends up.
struct Perm {
  std::vector<int> images;

  static Perm identity(int n);
  int size() const { return static_cast<int>(images.size()); }
  /// First this, then o.
  Perm then(const Perm &o) const;
  std::vector<std::vector<int>> cycles() const;
  bool operator==(const Perm &) const = default;
};

BraidWord braid_from_crossings(const std::vector<CrossingEvent> &events, int strands);
Perm permutation(const BraidWord &b);
int exponent_sum(const BraidWord &b);
int closure_components(const BraidWord &b);
int band_euler_characteristic(int strands, int bands);

/// Reduced Burau: the (n-1)x(n-1) matrix of b over Z[t, 1/t].
std::vector<std::vector<LaurentPoly>> reduced_burau(const BraidWord &b);
/// Determinant by expansion over column subsets; no division.
LaurentPoly laurent_determinant(const std::vector<std::vector<LaurentPoly>> &m);
/// Normalized Alexander polynomial of the closure. Throws Error(NotAKnot) for links.
LaurentPoly alexander_from_braid(const BraidWord &b);

struct SurfaceInvariants {
  int strands = 0;
  int enclosed = 0; // simple branch points inside D
  int chi = 0;
  int components = 0;
  Complex base;
  /// Local monodromy of each enclosed branch point, seen from the base point.
  std::vector<int> branches;
  std::vector<Perm> local;
  bool is_disc() const { return chi == 1 && components == 1; }
};

struct SurfaceOptions {
  TrackOptions track;
  double grid_step = 0.02;
};

SurfaceInvariants surface_invariants(const BivariatePoly &f, const PlanePath &disc,
                                     const BranchSet &branches, const SurfaceOptions &opts = {});

} // namespace curvebraid
