#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace curvebraid {

/// Integer Laurent polynomial in t. Zero coefficients are never stored.
class LaurentPoly {
public:
  using Coeff = std::int64_t;

  LaurentPoly() = default;
  LaurentPoly(Coeff constant); // NOLINT: integers promote implicitly
  explicit LaurentPoly(std::map<int, Coeff> coeffs);

  static LaurentPoly monomial(Coeff c, int exponent);
  /// t
  static LaurentPoly t() { return monomial(1, 1); }

  const std::map<int, Coeff> &coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  Coeff coeff(int exponent) const;
  int min_exponent() const;
  int max_exponent() const;
  Coeff value_at_one() const;

  LaurentPoly operator-() const;
  LaurentPoly &operator+=(const LaurentPoly &o);
  LaurentPoly &operator-=(const LaurentPoly &o);
  LaurentPoly &operator*=(const LaurentPoly &o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly &b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly &b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly &b) { return a *= b; }
  bool operator==(const LaurentPoly &) const = default;

  /// Multiplied by the unit +-t^k that makes the lowest exponent 0 and its coefficient positive.
  LaurentPoly normalized() const;

  /// Human readable, increasing exponents: "1 - 2t + 3t^2".
  std::string to_string() const;

private:
  void set(int exponent, Coeff c);

  std::map<int, Coeff> coeffs_;
};

inline LaurentPoly laurent_add(const LaurentPoly &a, const LaurentPoly &b) { return a + b; }
inline LaurentPoly laurent_mul(const LaurentPoly &a, const LaurentPoly &b) { return a * b; }
inline LaurentPoly laurent_normalize(const LaurentPoly &a) { return a.normalized(); }

/// q with a = q * b exactly, or nullopt when b does not divide a in Z[t, 1/t].
std::optional<LaurentPoly> divide_exact(const LaurentPoly &a, const LaurentPoly &b);

} // namespace curvebraid
