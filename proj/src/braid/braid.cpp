#include "curvebraid/braid.hpp"
#include "curvebraid/error.hpp"

#include <numeric>
#include <sstream>

namespace curvebraid {

BraidWord::BraidWord(int strands, std::vector<BraidLetter> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 1)
    throw Error(ErrorCode::InvalidInput, "braid needs at least one strand");
  for (const auto &l : letters_)
    if (l.index < 1 || l.index >= strands_ || (l.sign != 1 && l.sign != -1))
      throw Error(ErrorCode::InvalidInput, "braid letter out of range");
}

BraidWord BraidWord::operator*(const BraidWord &o) const {
  if (o.strands_ != strands_)
    throw Error(ErrorCode::InvalidInput, "braid strand counts differ");
  auto letters = letters_;
  letters.insert(letters.end(), o.letters_.begin(), o.letters_.end());
  return BraidWord(strands_, std::move(letters));
}

BraidWord BraidWord::inverse() const {
  std::vector<BraidLetter> letters(letters_.rbegin(), letters_.rend());
  for (auto &l : letters)
    l.sign = -l.sign;
  return BraidWord(strands_, std::move(letters));
}

std::string BraidWord::to_text() const {
  std::string out;
  for (const auto &l : letters_) {
    if (!out.empty())
      out += ' ';
    out += (l.sign < 0 ? "-s" : "s") + std::to_string(l.index);
  }
  return out;
}

BraidWord BraidWord::from_text(int strands, const std::string &text) {
  std::istringstream in(text);
  std::vector<BraidLetter> letters;
  for (std::string tok; in >> tok;) {
    int sign = 1;
    std::size_t pos = 0;
    if (tok[0] == '-') {
      sign = -1;
      pos = 1;
    }
    if (pos >= tok.size() || tok[pos] != 's')
      throw Error(ErrorCode::InvalidInput, "bad braid letter '" + tok + "'");
    try {
      std::size_t used = 0;
      const int idx = std::stoi(tok.substr(pos + 1), &used);
      if (used != tok.size() - pos - 1)
        throw std::invalid_argument(tok);
      letters.push_back({idx, sign});
    } catch (const std::logic_error &) {
      throw Error(ErrorCode::InvalidInput, "bad braid letter '" + tok + "'");
    }
  }
  return BraidWord(strands, std::move(letters));
}

Perm Perm::identity(int n) {
  Perm p;
  p.images.resize(n);
  std::iota(p.images.begin(), p.images.end(), 1);
  return p;
}

Perm Perm::then(const Perm &o) const {
  Perm r;
  r.images.reserve(images.size());
  for (int x : images)
    r.images.push_back(o.images[x - 1]);
  return r;
}

std::vector<std::vector<int>> Perm::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(images.size(), false);
  for (int k = 1; k <= size(); ++k) {
    if (seen[k - 1])
      continue;
    std::vector<int> cyc;
    for (int x = k; !seen[x - 1]; x = images[x - 1]) {
      seen[x - 1] = true;
      cyc.push_back(x);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

BraidWord braid_from_crossings(const std::vector<CrossingEvent> &events, int strands) {
  std::vector<BraidLetter> letters;
  letters.reserve(events.size());
  for (const auto &e : events)
    letters.push_back({e.index, e.sign});
  return BraidWord(strands, std::move(letters));
}

Perm permutation(const BraidWord &b) {
  // Follow every starting position through the swaps.
  std::vector<int> where(b.strands());
  std::iota(where.begin(), where.end(), 1);
  for (const auto &l : b.letters())
    for (int &p : where) {
      if (p == l.index)
        p = l.index + 1;
      else if (p == l.index + 1)
        p = l.index;
    }
  return Perm{where};
}

int exponent_sum(const BraidWord &b) {
  int s = 0;
  for (const auto &l : b.letters())
    s += l.sign;
  return s;
}

int closure_components(const BraidWord &b) { return static_cast<int>(permutation(b).cycles().size()); }

int band_euler_characteristic(int strands, int bands) {
  if (strands < 1 || bands < 0)
    throw Error(ErrorCode::InvalidInput, "need n >= 1 sheets and k >= 0 bands");
  return strands - bands;
}

} // namespace curvebraid
