#include "curvebraid/error.hpp"
#include "curvebraid/groups.hpp"
#include "curvebraid/smith.hpp"

#include <algorithm>
#include <numeric>

namespace curvebraid {

Abelianization abelianization(const Presentation &p) {
  const auto rels = p.relators();
  const int ng = p.generator_count();
  Abelianization out;
  if (rels.empty() || ng == 0) {
    out.free_rank = ng;
    return out;
  }
  IntMatrix m(static_cast<int>(rels.size()), ng);
  for (std::size_t r = 0; r < rels.size(); ++r)
    for (const auto &l : rels[r])
      m(static_cast<int>(r), l.gen) += l.power;
  int rank = 0;
  for (auto d : smith_normal_form(m)) {
    if (d == 0)
      continue;
    ++rank;
    if (d > 1)
      out.torsion.push_back(d);
  }
  out.free_rank = ng - rank;
  return out;
}

SymmetricGroup::SymmetricGroup(int m) : m_(m) {
  if (m < 1 || m > 6)
    throw Error(ErrorCode::InvalidInput, "symmetric group degree must be between 1 and 6");
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  do
    elements_.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));
  const std::size_t n = elements_.size();
  table_.resize(n * n);
  inverse_.resize(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::vector<int> c(m);
      for (int x = 0; x < m; ++x)
        c[x] = elements_[b][elements_[a][x]];
      const int idx = index_of(c);
      table_[a * n + b] = idx;
      if (idx == 0)
        inverse_[a] = static_cast<int>(b);
    }
}

int SymmetricGroup::index_of(const std::vector<int> &perm) const {
  // Elements are generated in lexicographic order.
  const auto it = std::lower_bound(elements_.begin(), elements_.end(), perm);
  if (it == elements_.end() || *it != perm)
    throw Error(ErrorCode::InvalidInput, "not a permutation of the right degree");
  return static_cast<int>(it - elements_.begin());
}

std::string SymmetricGroup::cycle_text(int a) const {
  const auto &p = elements_[a];
  std::string out;
  std::vector<bool> seen(m_, false);
  for (int s = 0; s < m_; ++s) {
    if (seen[s] || p[s] == s)
      continue;
    std::string cyc;
    for (int x = s; !seen[x]; x = p[x]) {
      seen[x] = true;
      if (!cyc.empty() && m_ > 9)
        cyc += ' ';
      cyc += std::to_string(x + 1);
    }
    out += "(" + cyc + ")";
  }
  return out.empty() ? "()" : out;
}

int SymmetricGroup::generated_order(const std::vector<int> &gens) const {
  std::vector<bool> in(elements_.size(), false);
  std::vector<int> queue{0};
  in[0] = true;
  for (std::size_t k = 0; k < queue.size(); ++k)
    for (int g : gens) {
      const int x = mul(queue[k], g);
      if (!in[x]) {
        in[x] = true;
        queue.push_back(x);
      }
    }
  return static_cast<int>(queue.size());
}

namespace {

struct Search {
  const SymmetricGroup &group;
  std::vector<int> order;                      // generator assignment order
  std::vector<std::vector<GroupWord>> checks;  // relators completed at each depth
  std::vector<int> image;
  std::uint64_t budget;
  HomCount result;

  bool holds(const GroupWord &w) const {
    int acc = 0;
    for (const auto &l : w) {
      const int g = image[l.gen];
      acc = group.mul(acc, l.power > 0 ? g : group.inverse(g));
    }
    return acc == 0;
  }

  void run(std::size_t depth) {
    if (depth == order.size()) {
      ++result.total;
      if (group.generated_order(image) == group.order()) {
        if (result.surjective++ == 0)
          result.witness = image;
      }
      return;
    }
    const int gen = order[depth];
    for (int e = 0; e < group.order(); ++e) {
      if (++result.nodes > budget)
        throw Error(ErrorCode::TooLarge, "homomorphism search exceeded its node budget");
      image[gen] = e;
      bool ok = true;
      for (const auto &w : checks[depth])
        if (!(ok = holds(w)))
          break;
      if (ok)
        run(depth + 1);
    }
    image[gen] = 0;
  }
};

} // namespace

HomCount count_homs(const Presentation &p, int m, std::uint64_t node_budget) {
  const SymmetricGroup group(m);
  const int ng = p.generator_count();
  const auto rels = p.relators();

  // Most constrained generators first so relators close early.
  std::vector<int> freq(ng, 0);
  for (const auto &r : rels)
    for (const auto &l : r)
      ++freq[l.gen];
  Search s{group, {}, {}, std::vector<int>(ng, 0), node_budget, {}};
  s.result.degree = m;
  s.order.resize(ng);
  std::iota(s.order.begin(), s.order.end(), 0);
  std::stable_sort(s.order.begin(), s.order.end(), [&](int a, int b) { return freq[a] > freq[b]; });
  std::vector<int> pos(ng);
  for (int k = 0; k < ng; ++k)
    pos[s.order[k]] = k;
  s.checks.resize(std::max(ng, 1));
  for (const auto &r : rels) {
    int last = 0;
    for (const auto &l : r)
      last = std::max(last, pos[l.gen]);
    if (r.empty())
      continue;
    s.checks[last].push_back(r);
  }
  if (ng == 0) {
    s.result.total = 1;
    s.result.surjective = group.order() == 1;
    if (s.result.surjective)
      s.result.witness = std::vector<int>{};
    return s.result;
  }
  s.run(0);
  return s.result;
}

Certificate is_noncyclic_certificate(const Presentation &p, const std::vector<int> &targets,
                                     std::uint64_t node_budget) {
  Certificate c;
  for (int m : targets) {
    if (m < 3)
      throw Error(ErrorCode::InvalidInput, "certificate targets must be nonabelian (S_m with m >= 3)");
    auto h = count_homs(p, m, node_budget);
    c.counts.push_back(h);
    if (h.witness && !c.certified) {
      c.certified = true;
      c.degree = m;
      c.witness = *h.witness;
      break;
    }
  }
  return c;
}

} // namespace curvebraid
