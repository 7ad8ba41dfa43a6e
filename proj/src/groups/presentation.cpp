#include "curvebraid/error.hpp"
#include "curvebraid/groups.hpp"

#include <algorithm>
#include <queue>
#include <tuple>

namespace curvebraid {

std::vector<int> canonical_region_order(const RegionMap &regions) {
  const int nr = static_cast<int>(regions.regions.size());
  std::vector<std::vector<int>> out(nr);
  std::vector<int> indegree(nr, 0);
  for (const auto &e : regions.edges) {
    if (!e.chord || e.from_region == e.to_region)
      continue;
    out[e.from_region].push_back(e.to_region);
    ++indegree[e.to_region];
  }
  // Kahn's algorithm, smallest index first; leftovers of a cycle follow by index.
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (int r = 0; r < nr; ++r)
    if (indegree[r] == 0)
      ready.push(r);
  std::vector<int> order;
  std::vector<bool> placed(nr, false);
  while (static_cast<int>(order.size()) < nr) {
    if (ready.empty()) {
      for (int r = 0; r < nr; ++r)
        if (!placed[r]) {
          ready.push(r);
          indegree[r] = 0;
          break;
        }
    }
    const int r = ready.top();
    ready.pop();
    if (placed[r])
      continue;
    placed[r] = true;
    order.push_back(r);
    for (int s : out[r])
      if (--indegree[s] == 0 && !placed[s])
        ready.push(s);
  }
  return order;
}

OrevkovPresentation build_presentation(const RegionMap &regions, int strands) {
  if (strands < 1)
    throw Error(ErrorCode::InvalidInput, "need at least one strand");
  OrevkovPresentation out;
  out.region_order = canonical_region_order(regions);
  const int nr = static_cast<int>(regions.regions.size());
  std::vector<int> rank(nr);
  for (int k = 0; k < nr; ++k)
    rank[out.region_order[k]] = k;

  auto &p = out.presentation;
  const bool compact = strands <= 9 && nr <= 9;
  for (int j = 1; j <= nr; ++j)
    for (int i = 1; i <= strands; ++i) {
      const std::string name = "a" + std::to_string(i) + (compact ? "" : "_") + std::to_string(j);
      p.generators.push_back({name, GenId{i, j}});
    }
  // Generator index of a_i(U) for canonical region position j (0-based).
  const auto gen = [&](int i, int j) { return GroupWord{{j * strands + (i - 1), 1}}; };

  std::vector<bool> terminal_edge(regions.edges.size(), false);
  for (const auto &t : regions.terminals) {
    if (!t.simple)
      throw Error(ErrorCode::NonSimpleTerminal, "branch terminal is not a simple tangency");
    terminal_edge[t.edge] = true;
  }

  // Display order: terminals of a region before the chords leaving it.
  struct Item {
    std::tuple<int, int, int, int> key;
    int edge;
    bool chord;
  };
  std::vector<Item> items;
  for (const auto &e : regions.edges) {
    if (e.label < 1 || e.label >= strands)
      throw Error(ErrorCode::InvalidInput, "edge label out of range");
    if (e.chord)
      items.push_back({{rank[e.from_region], 1, rank[e.to_region], e.id}, e.id, true});
    else if (terminal_edge[e.id])
      items.push_back({{rank[e.from_region], 0, 0, e.id}, e.id, false});
  }
  std::sort(items.begin(), items.end(), [](const Item &a, const Item &b) { return a.key < b.key; });

  int display = 0;
  for (const auto &item : items) {
    const auto &e = regions.edges[item.edge];
    out.edge_order.push_back(e.id);
    ++display;
    const int i = e.label;
    if (!item.chord) {
      // One relation per terminal on this edge (an arc between two branch points has two).
      for (const auto &t : regions.terminals)
        if (t.edge == e.id)
          p.relations.push_back({gen(i, rank[t.region]), gen(i + 1, rank[t.region]), display});
      continue;
    }
    const int u = rank[e.from_region], v = rank[e.to_region];
    for (int k = 1; k <= strands; ++k)
      if (k != i && k != i + 1)
        p.relations.push_back({gen(k, u), gen(k, v), display});
    p.relations.push_back({gen(i + 1, u), gen(i, v), display});
    GroupWord conj = gen(i + 1, u);
    conj.push_back({gen(i + 1, v)[0]});
    conj.push_back({(u * strands + i), -1});
    p.relations.push_back({gen(i, u), conj, display});
  }
  return out;
}

} // namespace curvebraid
