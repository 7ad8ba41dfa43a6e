#include "curvebraid/braid.hpp"
#include "curvebraid/error.hpp"

namespace curvebraid {

namespace {

using Matrix = std::vector<std::vector<LaurentPoly>>;

Matrix identity(int m) {
  Matrix id(m, std::vector<LaurentPoly>(m));
  for (int k = 0; k < m; ++k)
    id[k][k] = 1;
  return id;
}

// Reduced Burau image of a single letter, m = n - 1.
Matrix letter_matrix(int m, BraidLetter l) {
  Matrix g = identity(m);
  const LaurentPoly t = LaurentPoly::t();
  const LaurentPoly ti = LaurentPoly::monomial(1, -1);
  const int i = l.index - 1; // row of sigma_i
  if (m == 1) {
    g[0][0] = l.sign > 0 ? -t : -ti;
    return g;
  }
  if (l.sign > 0) {
    g[i][i] = -t;
    if (i > 0)
      g[i][i - 1] = t;
    if (i + 1 < m)
      g[i][i + 1] = 1;
  } else {
    g[i][i] = -ti;
    if (i > 0)
      g[i][i - 1] = 1;
    if (i + 1 < m)
      g[i][i + 1] = ti;
  }
  return g;
}

Matrix multiply(const Matrix &a, const Matrix &b) {
  const std::size_t m = a.size();
  Matrix c(m, std::vector<LaurentPoly>(m));
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t k = 0; k < m; ++k) {
      if (a[r][k].is_zero())
        continue;
      for (std::size_t s = 0; s < m; ++s)
        if (!b[k][s].is_zero())
          c[r][s] += a[r][k] * b[k][s];
    }
  return c;
}

} // namespace

std::vector<std::vector<LaurentPoly>> reduced_burau(const BraidWord &b) {
  const int m = b.strands() - 1;
  Matrix acc = identity(m);
  if (m == 0)
    return acc;
  for (const auto &l : b.letters())
    acc = multiply(acc, letter_matrix(m, l));
  return acc;
}

LaurentPoly laurent_determinant(const std::vector<std::vector<LaurentPoly>> &m) {
  const std::size_t n = m.size();
  if (n == 0)
    return 1;
  if (n > 20)
    throw Error(ErrorCode::TooLarge, "determinant expansion limited to 20 rows");
  // dp[mask]: signed sum over assignments of the first popcount(mask) rows to columns in mask.
  std::vector<LaurentPoly> dp(std::size_t(1) << n);
  dp[0] = 1;
  for (std::size_t mask = 0; mask < dp.size(); ++mask) {
    if (dp[mask].is_zero())
      continue;
    const int row = __builtin_popcountll(mask);
    if (row == static_cast<int>(n))
      continue;
    for (std::size_t col = 0; col < n; ++col) {
      if (mask & (std::size_t(1) << col) || m[row][col].is_zero())
        continue;
      // Sign: parity of the chosen columns to the right of col.
      const int inversions = __builtin_popcountll(mask >> (col + 1));
      const LaurentPoly term = dp[mask] * m[row][col];
      if (inversions % 2)
        dp[mask | (std::size_t(1) << col)] -= term;
      else
        dp[mask | (std::size_t(1) << col)] += term;
    }
  }
  return dp.back();
}

LaurentPoly alexander_from_braid(const BraidWord &b) {
  if (closure_components(b) != 1)
    throw Error(ErrorCode::NotAKnot, "braid closure has more than one component");
  auto m = reduced_burau(b);
  for (std::size_t k = 0; k < m.size(); ++k)
    m[k][k] -= 1;
  const LaurentPoly det = laurent_determinant(m);
  LaurentPoly sum;
  for (int k = 0; k < b.strands(); ++k)
    sum += LaurentPoly::monomial(1, k);
  const auto q = divide_exact(det, sum);
  if (!q)
    throw Error(ErrorCode::InvalidInput, "Burau determinant not divisible by [n]_t");
  return q->normalized();
}

} // namespace curvebraid
