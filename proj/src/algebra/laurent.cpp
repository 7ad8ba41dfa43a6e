#include "curvebraid/laurent.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace curvebraid {

namespace {

LaurentPoly::Coeff checked_mul(LaurentPoly::Coeff a, LaurentPoly::Coeff b) {
  LaurentPoly::Coeff r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("Laurent coefficient overflow");
  return r;
}

LaurentPoly::Coeff checked_add(LaurentPoly::Coeff a, LaurentPoly::Coeff b) {
  LaurentPoly::Coeff r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("Laurent coefficient overflow");
  return r;
}

} // namespace

LaurentPoly::LaurentPoly(Coeff constant) {
  if (constant != 0)
    coeffs_[0] = constant;
}

LaurentPoly::LaurentPoly(std::map<int, Coeff> coeffs) {
  for (const auto &[e, c] : coeffs) {
    if (c != 0)
      coeffs_[e] = c;
  }
}

LaurentPoly LaurentPoly::monomial(Coeff c, int exponent) { return LaurentPoly({{exponent, c}}); }

LaurentPoly::Coeff LaurentPoly::coeff(int exponent) const {
  auto it = coeffs_.find(exponent);
  return it == coeffs_.end() ? 0 : it->second;
}

int LaurentPoly::min_exponent() const { return coeffs_.empty() ? 0 : coeffs_.begin()->first; }
int LaurentPoly::max_exponent() const { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }

LaurentPoly::Coeff LaurentPoly::value_at_one() const {
  Coeff acc = 0;
  for (const auto &[e, c] : coeffs_)
    acc = checked_add(acc, c);
  return acc;
}

void LaurentPoly::set(int exponent, Coeff c) {
  if (c == 0)
    coeffs_.erase(exponent);
  else
    coeffs_[exponent] = c;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out;
  for (const auto &[e, c] : coeffs_)
    out.coeffs_[e] = -c;
  return out;
}

LaurentPoly &LaurentPoly::operator+=(const LaurentPoly &o) {
  for (const auto &[e, c] : o.coeffs_)
    set(e, checked_add(coeff(e), c));
  return *this;
}

LaurentPoly &LaurentPoly::operator-=(const LaurentPoly &o) { return *this += -o; }

LaurentPoly &LaurentPoly::operator*=(const LaurentPoly &o) {
  std::map<int, Coeff> product;
  for (const auto &[ea, ca] : coeffs_) {
    for (const auto &[eb, cb] : o.coeffs_)
      product[ea + eb] = checked_add(product[ea + eb], checked_mul(ca, cb));
  }
  *this = LaurentPoly(std::move(product));
  return *this;
}

LaurentPoly LaurentPoly::normalized() const {
  if (coeffs_.empty())
    return {};
  const int shift = min_exponent();
  const Coeff sign = coeffs_.begin()->second < 0 ? -1 : 1;
  std::map<int, Coeff> out;
  for (const auto &[e, c] : coeffs_)
    out[e - shift] = sign * c;
  return LaurentPoly(std::move(out));
}

std::string LaurentPoly::to_string() const {
  if (coeffs_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto &[e, c] : coeffs_) {
    const Coeff mag = c < 0 ? -c : c;
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1)
      os << mag;
    os << 't';
    if (e != 1)
      os << '^' << e;
  }
  return os.str();
}

std::optional<LaurentPoly> divide_exact(const LaurentPoly &a, const LaurentPoly &b) {
  if (b.is_zero())
    throw std::domain_error("division by the zero Laurent polynomial");
  if (a.is_zero())
    return LaurentPoly{};
  // Long division from the top exponent down; every step must be exact over Z.
  LaurentPoly rem = a;
  std::map<int, LaurentPoly::Coeff> quotient;
  const int bmax = b.max_exponent();
  const int bmin = b.min_exponent();
  const auto blead = b.coeff(bmax);
  while (!rem.is_zero()) {
    if (rem.max_exponent() - rem.min_exponent() < bmax - bmin)
      return std::nullopt;
    const int e = rem.max_exponent();
    const auto c = rem.coeff(e);
    if (c % blead != 0)
      return std::nullopt;
    const auto q = c / blead;
    quotient[e - bmax] = q;
    rem -= LaurentPoly::monomial(q, e - bmax) * b;
  }
  return LaurentPoly(std::move(quotient));
}

} // namespace curvebraid
