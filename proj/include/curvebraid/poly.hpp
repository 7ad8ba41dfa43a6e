#pragma once

#include <complex>
#include <map>
#include <utility>
#include <vector>

namespace curvebraid {

using Complex = std::complex<double>;

/// Dense univariate polynomial with complex coefficients; coeffs[k] multiplies x^k.
class UniPoly {
public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Complex> coeffs);

  const std::vector<Complex> &coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Complex leading() const { return coeffs_.empty() ? Complex{} : coeffs_.back(); }
  Complex operator[](int k) const;

  Complex operator()(Complex x) const;
  /// sum |a_k| |x|^k, the natural magnitude against which residuals are judged.
  double scale_at(Complex x) const;
  UniPoly derivative() const;

  /// Drops trailing coefficients below rel_tol * max|a_k|.
  UniPoly trimmed(double rel_tol = 1e-12) const;

private:
  std::vector<Complex> coeffs_;
};

/// f(z, w) stored by monomial; wdegree is the largest w-exponent with a nonzero coefficient.
class BivariatePoly {
public:
  struct Monomial {
    int zdeg;
    int wdeg;
    auto operator<=>(const Monomial &) const = default;
  };

  BivariatePoly() = default;
  explicit BivariatePoly(std::map<Monomial, Complex> terms);

  const std::map<Monomial, Complex> &terms() const { return terms_; }
  int wdegree() const { return wdegree_; }
  int zdegree() const { return zdegree_; }

  /// Coefficient of w^k as a polynomial in z.
  UniPoly w_coefficient(int k) const;
  /// f_0(z), the coefficient of the top power of w.
  UniPoly leading_coefficient() const { return w_coefficient(wdegree_); }
  /// f(z, .) as a polynomial in w.
  UniPoly fiber_polynomial(Complex z) const;

  Complex operator()(Complex z, Complex w) const;
  Complex dz(Complex z, Complex w) const;
  Complex dw(Complex z, Complex w) const;
  double scale_at(Complex z, Complex w) const;

  BivariatePoly partial_w() const;

private:
  std::map<Monomial, Complex> terms_;
  int wdegree_ = 0;
  int zdegree_ = 0;
};

/// Horner evaluation of f at (z, w).
inline Complex eval_bivariate(const BivariatePoly &f, Complex z, Complex w) { return f(z, w); }
BivariatePoly partial_w(const BivariatePoly &f);

} // namespace curvebraid
