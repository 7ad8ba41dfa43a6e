#include "curvebraid/poly.hpp"

#include "curvebraid/error.hpp"

#include <algorithm>
#include <cmath>

namespace curvebraid {

UniPoly::UniPoly(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  for (const auto &c : coeffs_) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
      throw Error(ErrorCode::InvalidInput, "non-finite polynomial coefficient");
  }
  while (!coeffs_.empty() && coeffs_.back() == Complex{})
    coeffs_.pop_back();
}

Complex UniPoly::operator[](int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size()))
    return {};
  return coeffs_[k];
}

Complex UniPoly::operator()(Complex x) const {
  Complex acc{};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

double UniPoly::scale_at(Complex x) const {
  const double r = std::abs(x);
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * r + std::abs(*it);
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1)
    return {};
  std::vector<Complex> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k)
    d[k - 1] = coeffs_[k] * static_cast<double>(k);
  return UniPoly(std::move(d));
}

UniPoly UniPoly::trimmed(double rel_tol) const {
  double biggest = 0.0;
  for (const auto &c : coeffs_)
    biggest = std::max(biggest, std::abs(c));
  std::vector<Complex> out = coeffs_;
  for (auto &c : out) {
    if (std::abs(c) <= rel_tol * biggest)
      c = {};
  }
  return UniPoly(std::move(out));
}

BivariatePoly::BivariatePoly(std::map<Monomial, Complex> terms) {
  for (const auto &[m, c] : terms) {
    if (m.zdeg < 0 || m.wdeg < 0)
      throw Error(ErrorCode::InvalidInput, "negative exponent in bivariate polynomial");
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
      throw Error(ErrorCode::InvalidInput, "non-finite bivariate coefficient");
    if (c == Complex{})
      continue;
    terms_[m] += c;
  }
  std::erase_if(terms_, [](const auto &kv) { return kv.second == Complex{}; });
  for (const auto &[m, c] : terms_) {
    wdegree_ = std::max(wdegree_, m.wdeg);
    zdegree_ = std::max(zdegree_, m.zdeg);
  }
}

UniPoly BivariatePoly::w_coefficient(int k) const {
  std::vector<Complex> c(zdegree_ + 1);
  for (const auto &[m, v] : terms_) {
    if (m.wdeg == k)
      c[m.zdeg] += v;
  }
  return UniPoly(std::move(c));
}

UniPoly BivariatePoly::fiber_polynomial(Complex z) const {
  std::vector<Complex> c(wdegree_ + 1);
  for (int k = 0; k <= wdegree_; ++k)
    c[k] = w_coefficient(k)(z);
  return UniPoly(std::move(c));
}

namespace {

// Coefficients in z of each power of w, evaluated at z, by Horner per w-power.
std::vector<Complex> coefficients_at(const std::map<BivariatePoly::Monomial, Complex> &terms,
                                     int wdegree, int zdegree, Complex z) {
  std::vector<std::vector<Complex>> byw(wdegree + 1, std::vector<Complex>(zdegree + 1));
  for (const auto &[m, v] : terms)
    byw[m.wdeg][m.zdeg] += v;
  std::vector<Complex> out(wdegree + 1);
  for (int k = 0; k <= wdegree; ++k) {
    Complex acc{};
    for (int j = zdegree; j >= 0; --j)
      acc = acc * z + byw[k][j];
    out[k] = acc;
  }
  return out;
}

} // namespace

Complex BivariatePoly::operator()(Complex z, Complex w) const {
  const auto c = coefficients_at(terms_, wdegree_, zdegree_, z);
  Complex acc{};
  for (int k = wdegree_; k >= 0; --k)
    acc = acc * w + c[k];
  return acc;
}

Complex BivariatePoly::dz(Complex z, Complex w) const {
  Complex acc{};
  for (const auto &[m, v] : terms_) {
    if (m.zdeg == 0)
      continue;
    acc += v * static_cast<double>(m.zdeg) * std::pow(z, m.zdeg - 1) * std::pow(w, m.wdeg);
  }
  return acc;
}

Complex BivariatePoly::dw(Complex z, Complex w) const {
  Complex acc{};
  for (const auto &[m, v] : terms_) {
    if (m.wdeg == 0)
      continue;
    acc += v * static_cast<double>(m.wdeg) * std::pow(z, m.zdeg) * std::pow(w, m.wdeg - 1);
  }
  return acc;
}

double BivariatePoly::scale_at(Complex z, Complex w) const {
  const double rz = std::abs(z);
  const double rw = std::abs(w);
  double acc = 0.0;
  for (const auto &[m, v] : terms_)
    acc += std::abs(v) * std::pow(rz, m.zdeg) * std::pow(rw, m.wdeg);
  return acc;
}

BivariatePoly BivariatePoly::partial_w() const {
  if (wdegree_ < 1)
    throw Error(ErrorCode::InvalidInput, "partial_w requires w-degree at least 1");
  std::map<Monomial, Complex> d;
  for (const auto &[m, v] : terms_) {
    if (m.wdeg == 0)
      continue;
    d[{m.zdeg, m.wdeg - 1}] += v * static_cast<double>(m.wdeg);
  }
  return BivariatePoly(std::move(d));
}

BivariatePoly partial_w(const BivariatePoly &f) { return f.partial_w(); }

} // namespace curvebraid
