#include "curvebraid/error.hpp"
#include "curvebraid/groups.hpp"

#include <map>
#include <sstream>

namespace curvebraid {

GroupWord word_inverse(const GroupWord &w) {
  GroupWord r(w.rbegin(), w.rend());
  for (auto &l : r)
    l.power = -l.power;
  return r;
}

GroupWord word_concat(const GroupWord &a, const GroupWord &b) {
  GroupWord r = a;
  r.insert(r.end(), b.begin(), b.end());
  return free_reduce(r);
}

GroupWord free_reduce(const GroupWord &w) {
  GroupWord out;
  for (const auto &l : w) {
    if (!out.empty() && out.back().gen == l.gen && out.back().power == -l.power)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

GroupWord cyclic_reduce(const GroupWord &w) {
  GroupWord r = free_reduce(w);
  std::size_t a = 0, b = r.size();
  while (b - a >= 2 && r[a].gen == r[b - 1].gen && r[a].power == -r[b - 1].power) {
    ++a;
    --b;
  }
  return GroupWord(r.begin() + a, r.begin() + b);
}

GroupWord substitute(const GroupWord &w, const std::vector<std::optional<GroupWord>> &images) {
  GroupWord out;
  for (const auto &l : w) {
    if (l.gen < static_cast<int>(images.size()) && images[l.gen]) {
      const auto &img = *images[l.gen];
      if (l.power > 0)
        out.insert(out.end(), img.begin(), img.end());
      else {
        const auto inv = word_inverse(img);
        out.insert(out.end(), inv.begin(), inv.end());
      }
    } else {
      out.push_back(l);
    }
  }
  return free_reduce(out);
}

int occurrences(const GroupWord &w, int gen) {
  int n = 0;
  for (const auto &l : w)
    n += l.gen == gen;
  return n;
}

std::vector<GroupWord> Presentation::relators() const {
  std::vector<GroupWord> out;
  out.reserve(relations.size());
  for (const auto &r : relations) {
    GroupWord w = r.lhs;
    const auto inv = word_inverse(r.rhs);
    w.insert(w.end(), inv.begin(), inv.end());
    out.push_back(free_reduce(w));
  }
  return out;
}

std::string Presentation::word_text(const GroupWord &w) const {
  if (w.empty())
    return "1";
  std::string out;
  for (const auto &l : w) {
    if (!out.empty())
      out += ' ';
    out += generators[l.gen].name;
    if (l.power != 1)
      out += "^" + std::to_string(l.power);
  }
  return out;
}

std::string Presentation::to_text() const {
  std::ostringstream os;
  os << "generators:";
  for (const auto &g : generators)
    os << ' ' << g.name;
  os << '\n';
  std::size_t k = 0;
  while (k < relations.size()) {
    const int edge = relations[k].edge;
    if (edge > 0)
      os << edge << ". edge: ";
    std::size_t j = k;
    for (; j < relations.size() && (j == k || (edge > 0 && relations[j].edge == edge)); ++j) {
      if (j > k)
        os << ", ";
      os << word_text(relations[j].lhs) << " = " << word_text(relations[j].rhs);
    }
    os << '\n';
    k = j;
  }
  return os.str();
}

nlohmann::json Presentation::to_json() const {
  auto gens = nlohmann::json::array();
  for (const auto &g : generators) {
    nlohmann::json j{{"name", g.name}};
    if (g.origin) {
      j["strand"] = g.origin->strand;
      j["region"] = g.origin->region;
    }
    gens.push_back(j);
  }
  auto rels = nlohmann::json::array();
  for (const auto &w : relators()) {
    auto r = nlohmann::json::array();
    for (const auto &l : w)
      for (int k = 0; k < std::abs(l.power); ++k)
        r.push_back(l.power > 0 ? l.gen + 1 : -(l.gen + 1));
    rels.push_back(r);
  }
  auto text = nlohmann::json::array();
  for (const auto &r : relations)
    text.push_back(word_text(r.lhs) + " = " + word_text(r.rhs));
  return {{"generators", gens}, {"relators", rels}, {"relations", text}};
}

Presentation Presentation::from_relators(const std::vector<std::string> &names,
                                         const std::vector<std::string> &relators) {
  Presentation p;
  std::map<std::string, int> index;
  for (const auto &n : names) {
    if (!index.emplace(n, static_cast<int>(p.generators.size())).second)
      throw Error(ErrorCode::InvalidInput, "duplicate generator " + n);
    p.generators.push_back({n, std::nullopt});
  }
  for (const auto &text : relators) {
    std::istringstream in(text);
    GroupWord w;
    for (std::string tok; in >> tok;) {
      int power = 1;
      const auto caret = tok.find('^');
      std::string name = tok.substr(0, caret);
      if (caret != std::string::npos) {
        try {
          power = std::stoi(tok.substr(caret + 1));
        } catch (const std::logic_error &) {
          throw Error(ErrorCode::InvalidInput, "bad exponent in '" + tok + "'");
        }
      }
      const auto it = index.find(name);
      if (it == index.end())
        throw Error(ErrorCode::InvalidInput, "unknown generator '" + name + "'");
      for (int k = 0; k < std::abs(power); ++k)
        w.push_back({it->second, power > 0 ? 1 : -1});
    }
    p.relations.push_back({free_reduce(w), {}, 0});
  }
  return p;
}

} // namespace curvebraid
