#pragma once

// Homomorphism count into S_m by trying every tuple of images.

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Perm = std::vector<int>;
using Relator = std::vector<std::pair<int, int>>; // (generator, +-1)

struct Counts {
  long long total = 0;
  long long surjective = 0;
};

inline Perm compose(const Perm &a, const Perm &b) { // x -> b(a(x))
  Perm c(a.size());
  for (std::size_t x = 0; x < a.size(); ++x)
    c[x] = b[a[x]];
  return c;
}

inline Perm invert(const Perm &a) {
  Perm c(a.size());
  for (std::size_t x = 0; x < a.size(); ++x)
    c[a[x]] = static_cast<int>(x);
  return c;
}

inline Counts count_homs(int gens, const std::vector<Relator> &rels, int m) {
  std::vector<Perm> group;
  Perm p(m);
  std::iota(p.begin(), p.end(), 0);
  const Perm id = p;
  do
    group.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  Counts c;
  std::vector<int> choice(gens, 0);
  for (;;) {
    bool ok = true;
    for (const auto &r : rels) {
      Perm acc = id;
      for (const auto &[g, s] : r)
        acc = compose(acc, s > 0 ? group[choice[g]] : invert(group[choice[g]]));
      if (acc != id) {
        ok = false;
        break;
      }
    }
    if (ok) {
      ++c.total;
      std::set<Perm> seen{id};
      std::vector<Perm> todo{id};
      while (!todo.empty()) {
        const Perm x = todo.back();
        todo.pop_back();
        for (int g = 0; g < gens; ++g) {
          const Perm y = compose(x, group[choice[g]]);
          if (seen.insert(y).second)
            todo.push_back(y);
        }
      }
      c.surjective += seen.size() == group.size();
    }
    int k = 0;
    while (k < gens && ++choice[k] == static_cast<int>(group.size()))
      choice[k++] = 0;
    if (k == gens)
      break;
  }
  return c;
}

} // namespace oracle
