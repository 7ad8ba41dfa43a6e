#pragma once

#include "curvebraid/geometry.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace curvebraid {

/// Meridian of sheet `strand` (1-based) over region `region` (1-based, canonical order).
struct GenId {
  int strand = 0;
  int region = 0;
  bool operator==(const GenId &) const = default;
};

struct GroupLetter {
  int gen = 0; // index into Presentation::generators
  int power = 1;
  bool operator==(const GroupLetter &) const = default;
};
using GroupWord = std::vector<GroupLetter>;

GroupWord word_inverse(const GroupWord &w);
GroupWord word_concat(const GroupWord &a, const GroupWord &b);
GroupWord free_reduce(const GroupWord &w);
GroupWord cyclic_reduce(const GroupWord &w);
/// Replaces each generator g by images[g]; missing images keep the letter.
GroupWord substitute(const GroupWord &w, const std::vector<std::optional<GroupWord>> &images);
int occurrences(const GroupWord &w, int gen);

struct Generator {
  std::string name;
  std::optional<GenId> origin;
};

/// lhs = rhs; relators are lhs * rhs^-1. `edge` is the 1-based edge that produced it, 0 if none.
struct Relation {
  GroupWord lhs;
  GroupWord rhs;
  int edge = 0;
};

struct Presentation {
  std::vector<Generator> generators;
  std::vector<Relation> relations;

  int generator_count() const { return static_cast<int>(generators.size()); }
  std::vector<GroupWord> relators() const;

  /// Grouped "k. edge: a11 = a21, ..." lines; relations without an edge print one per line.
  std::string to_text() const;
  std::string word_text(const GroupWord &w) const;
  nlohmann::json to_json() const;

  /// Presentation with named generators and relators given as words in those names,
  /// e.g. from_relators({"x", "y"}, {"x y x y^-1 x^-1 y^-1"}).
  static Presentation from_relators(const std::vector<std::string> &names,
                                    const std::vector<std::string> &relators);
};

/// Regions ordered so that every chord points from an earlier to a later region (ties by index).
/// Result[k] is the RegionMap index of canonical region k + 1.
std::vector<int> canonical_region_order(const RegionMap &regions);

struct OrevkovPresentation {
  Presentation presentation;
  std::vector<int> region_order; // canonical position -> RegionMap index
  std::vector<int> edge_order;   // displayed edge k + 1 -> RegionMap edge id
};

/// Generators a_i(U_j) for every sheet and region, n relations per chord and one per terminal.
/// Throws Error(NonSimpleTerminal) when a terminal is not a simple tangency.
OrevkovPresentation build_presentation(const RegionMap &regions, int strands);

struct TietzeResult {
  Presentation simplified;
  /// images[k]: original generator k as a word in the simplified generators.
  std::vector<GroupWord> images;
};

TietzeResult tietze_simplify(const Presentation &p);

struct Abelianization {
  int free_rank = 0;
  std::vector<std::int64_t> torsion; // invariant factors > 1
  bool is_z() const { return free_rank == 1 && torsion.empty(); }
};

Abelianization abelianization(const Presentation &p);

/// Symmetric group S_m as permutations of {0..m-1}; element 0 is the identity.
class SymmetricGroup {
public:
  explicit SymmetricGroup(int m);
  int degree() const { return m_; }
  int order() const { return static_cast<int>(elements_.size()); }
  int mul(int a, int b) const { return table_[std::size_t(a) * elements_.size() + b]; } // a then b
  int inverse(int a) const { return inverse_[a]; }
  const std::vector<int> &element(int a) const { return elements_[a]; }
  int index_of(const std::vector<int> &perm) const;
  /// Cycle notation on 1..m, e.g. "(23)" or "(1 10)"; identity is "()".
  std::string cycle_text(int a) const;
  /// Size of the subgroup generated by the given elements.
  int generated_order(const std::vector<int> &gens) const;

private:
  int m_;
  std::vector<std::vector<int>> elements_;
  std::vector<int> table_;
  std::vector<int> inverse_;
};

struct HomCount {
  int degree = 0;
  std::uint64_t total = 0;
  std::uint64_t surjective = 0;
  std::optional<std::vector<int>> witness; // element index per generator
  std::uint64_t nodes = 0;
};

/// Exhaustive backtracking over generator images in S_m. Throws Error(TooLarge) once more than
/// `node_budget` partial assignments have been visited.
HomCount count_homs(const Presentation &p, int m, std::uint64_t node_budget = 50'000'000);

struct Certificate {
  bool certified = false;
  int degree = 0; // target S_m of the witness
  std::vector<int> witness;
  std::vector<HomCount> counts;
};

/// Looks for a surjection onto one of the nonabelian targets S_m, in order.
/// An uncertified result is inconclusive, not a proof of cyclicity.
Certificate is_noncyclic_certificate(const Presentation &p, const std::vector<int> &targets = {3},
                                     std::uint64_t node_budget = 50'000'000);

} // namespace curvebraid
