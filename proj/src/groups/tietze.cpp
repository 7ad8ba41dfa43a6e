#include "curvebraid/groups.hpp"

#include <algorithm>
#include <set>

namespace curvebraid {

namespace {

struct Elimination {
  int gen;
  GroupWord word; // in original generator indices
};

// Relator rotated so its first letter is the single occurrence of gen.
GroupWord rotate_to(const GroupWord &r, int gen) {
  const auto it = std::find_if(r.begin(), r.end(), [&](const GroupLetter &l) { return l.gen == gen; });
  GroupWord out(it, r.end());
  out.insert(out.end(), r.begin(), it);
  return out;
}

} // namespace

TietzeResult tietze_simplify(const Presentation &p) {
  const int ng = p.generator_count();
  std::vector<GroupWord> rels;
  for (const auto &r : p.relators()) {
    auto c = cyclic_reduce(r);
    if (!c.empty())
      rels.push_back(std::move(c));
  }
  std::vector<bool> alive(ng, true);
  std::vector<Elimination> history;

  for (;;) {
    // Shortest relator with a generator occurring exactly once; ties by relator then generator.
    int best_rel = -1, best_gen = -1;
    for (std::size_t r = 0; r < rels.size(); ++r) {
      if (best_rel >= 0 && rels[r].size() >= rels[best_rel].size())
        continue;
      int gen = -1;
      for (const auto &l : rels[r])
        if (occurrences(rels[r], l.gen) == 1 && (gen < 0 || l.gen < gen))
          gen = l.gen;
      if (gen >= 0) {
        best_rel = static_cast<int>(r);
        best_gen = gen;
      }
    }
    if (best_rel < 0)
      break;
    const auto rot = rotate_to(rels[best_rel], best_gen);
    GroupWord rest(rot.begin() + 1, rot.end());
    const GroupWord value = rot.front().power > 0 ? word_inverse(rest) : rest;
    history.push_back({best_gen, value});
    alive[best_gen] = false;
    rels.erase(rels.begin() + best_rel);

    std::vector<std::optional<GroupWord>> images(ng);
    images[best_gen] = value;
    std::vector<GroupWord> next;
    std::set<std::vector<std::pair<int, int>>> seen;
    for (const auto &r : rels) {
      auto c = cyclic_reduce(substitute(r, images));
      if (c.empty())
        continue;
      std::vector<std::pair<int, int>> key;
      for (const auto &l : c)
        key.emplace_back(l.gen, l.power);
      if (seen.insert(key).second)
        next.push_back(std::move(c));
    }
    rels = std::move(next);
  }

  TietzeResult out;
  std::vector<int> renumber(ng, -1);
  for (int g = 0; g < ng; ++g)
    if (alive[g]) {
      renumber[g] = out.simplified.generator_count();
      out.simplified.generators.push_back(p.generators[g]);
    }
  const auto rename = [&](const GroupWord &w) {
    GroupWord r;
    for (const auto &l : w)
      r.push_back({renumber[l.gen], l.power});
    return r;
  };
  for (const auto &r : rels)
    out.simplified.relations.push_back({rename(r), {}, 0});

  // Images of the original generators, resolving eliminations last-first.
  std::vector<std::optional<GroupWord>> value(ng);
  for (int g = 0; g < ng; ++g)
    if (alive[g])
      value[g] = GroupWord{{g, 1}};
  for (auto it = history.rbegin(); it != history.rend(); ++it)
    value[it->gen] = substitute(it->word, value);
  for (int g = 0; g < ng; ++g)
    out.images.push_back(rename(*value[g]));
  return out;
}

} // namespace curvebraid
