#include "curvebraid/smith.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace curvebraid {

namespace {

using Entry = IntMatrix::Entry;

Entry mul_sub(Entry a, Entry q, Entry b) {
  Entry prod, out;
  if (__builtin_mul_overflow(q, b, &prod) || __builtin_sub_overflow(a, prod, &out))
    throw std::overflow_error("Smith normal form: entry overflow");
  return out;
}

void swap_rows(IntMatrix &m, int a, int b) {
  for (int c = 0; c < m.cols(); ++c)
    std::swap(m(a, c), m(b, c));
}

void swap_cols(IntMatrix &m, int a, int b) {
  for (int r = 0; r < m.rows(); ++r)
    std::swap(m(r, a), m(r, b));
}

} // namespace

IntMatrix::IntMatrix(int rows, int cols, std::vector<Entry> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (rows < 0 || cols < 0 || data_.size() != std::size_t(rows) * std::size_t(cols))
    throw std::invalid_argument("IntMatrix: dimensions do not match entry count");
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::diagonal(const std::vector<Entry> &d) {
  const int n = static_cast<int>(d.size());
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    m(i, i) = d[i];
  return m;
}

std::vector<Entry> smith_normal_form(IntMatrix m) {
  const int rows = m.rows();
  const int cols = m.cols();
  const int steps = std::min(rows, cols);
  std::vector<Entry> diag;
  diag.reserve(steps);

  for (int s = 0; s < steps; ++s) {
    for (;;) {
      // Pivot: smallest nonzero magnitude in the trailing block.
      int pr = -1, pc = -1;
      for (int r = s; r < rows; ++r) {
        for (int c = s; c < cols; ++c) {
          if (m(r, c) != 0 && (pr < 0 || std::llabs(m(r, c)) < std::llabs(m(pr, pc)))) {
            pr = r;
            pc = c;
          }
        }
      }
      if (pr < 0) {
        diag.resize(steps, 0);
        return diag;
      }
      swap_rows(m, s, pr);
      swap_cols(m, s, pc);

      bool clean = true;
      for (int r = s + 1; r < rows; ++r) {
        if (m(r, s) == 0)
          continue;
        const Entry q = m(r, s) / m(s, s);
        for (int c = s; c < cols; ++c)
          m(r, c) = mul_sub(m(r, c), q, m(s, c));
        if (m(r, s) != 0)
          clean = false;
      }
      for (int c = s + 1; c < cols; ++c) {
        if (m(s, c) == 0)
          continue;
        const Entry q = m(s, c) / m(s, s);
        for (int r = s; r < rows; ++r)
          m(r, c) = mul_sub(m(r, c), q, m(r, s));
        if (m(s, c) != 0)
          clean = false;
      }
      if (!clean)
        continue;

      // Divisibility: fold an offending row into the pivot row and reduce again.
      bool divides = true;
      for (int r = s + 1; r < rows && divides; ++r) {
        for (int c = s + 1; c < cols; ++c) {
          if (m(r, c) % m(s, s) != 0) {
            for (int k = s; k < cols; ++k)
              m(s, k) = mul_sub(m(s, k), -1, m(r, k));
            divides = false;
            break;
          }
        }
      }
      if (divides)
        break;
    }
    diag.push_back(std::llabs(m(s, s)));
  }
  return diag;
}

} // namespace curvebraid
