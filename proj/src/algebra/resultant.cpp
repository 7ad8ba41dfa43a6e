#include "curvebraid/resultant.hpp"

#include "curvebraid/error.hpp"

#include <Eigen/Dense>

#include <numbers>

namespace curvebraid {

namespace {

// Sylvester matrix of a (degree n) and b (degree m) in w, with formal degrees
// (leading coefficients are allowed to vanish at a particular z).
Complex sylvester_determinant(const std::vector<Complex> &a, const std::vector<Complex> &b) {
  const int n = static_cast<int>(a.size()) - 1;
  const int m = static_cast<int>(b.size()) - 1;
  const int size = n + m;
  Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(size, size);
  for (int row = 0; row < m; ++row) {
    for (int k = 0; k <= n; ++k)
      s(row, row + k) = a[n - k];
  }
  for (int row = 0; row < n; ++row) {
    for (int k = 0; k <= m; ++k)
      s(m + row, row + k) = b[m - k];
  }
  return s.partialPivLu().determinant();
}

} // namespace

UniPoly resultant_w(const BivariatePoly &f, const BivariatePoly &g) {
  const int n = f.wdegree();
  const int m = g.wdegree();
  if (n < 1 || m < 1)
    throw Error(ErrorCode::InvalidInput, "resultant_w requires w-degree >= 1 for both inputs");

  // Each Sylvester row block is homogeneous in the z-degrees of its polynomial.
  const int bound = m * f.zdegree() + n * g.zdegree();
  const int samples = bound + 1;

  std::vector<UniPoly> fc, gc;
  for (int k = 0; k <= n; ++k)
    fc.push_back(f.w_coefficient(k));
  for (int k = 0; k <= m; ++k)
    gc.push_back(g.w_coefficient(k));

  std::vector<Complex> values(samples);
  for (int j = 0; j < samples; ++j) {
    const Complex z = std::polar(1.0, 2.0 * std::numbers::pi * j / samples);
    std::vector<Complex> a(n + 1), b(m + 1);
    for (int k = 0; k <= n; ++k)
      a[k] = fc[k](z);
    for (int k = 0; k <= m; ++k)
      b[k] = gc[k](z);
    values[j] = sylvester_determinant(a, b);
  }

  // Inverse DFT on the unit circle recovers the coefficients.
  std::vector<Complex> coeffs(samples);
  for (int k = 0; k < samples; ++k) {
    Complex acc{};
    for (int j = 0; j < samples; ++j)
      acc += values[j] * std::polar(1.0, -2.0 * std::numbers::pi * double(j) * k / samples);
    coeffs[k] = acc / static_cast<double>(samples);
  }
  return UniPoly(std::move(coeffs)).trimmed(1e-12);
}

UniPoly discriminant_w(const BivariatePoly &f) { return resultant_w(f, f.partial_w()); }

} // namespace curvebraid
