#pragma once

#include "curvebraid/geometry.hpp"
#include "curvebraid/pipeline.hpp"
#include "curvebraid/poly.hpp"

#include <numbers>
#include <string>

namespace testing {

using curvebraid::BivariatePoly;
using curvebraid::Complex;

inline BivariatePoly fixture_curve() {
  return BivariatePoly({{{0, 3}, 1.0}, {{0, 1}, -3.0}, {{4, 0}, 2.0}});
}

inline BivariatePoly poly(std::initializer_list<std::tuple<int, int, double>> terms) {
  std::map<BivariatePoly::Monomial, Complex> m;
  for (const auto &[zd, wd, c] : terms)
    m[{zd, wd}] = c;
  return BivariatePoly(m);
}

inline std::string data_path(const std::string &name) { return std::string(CURVEBRAID_DATA_DIR) + "/" + name; }

inline curvebraid::Window fixture_window() { return {-1.6, 1.6, -1.6, 1.6}; }

/// e^{i pi k / 4}
inline Complex eighth_root(int k) { return std::polar(1.0, std::numbers::pi * k / 4.0); }

} // namespace testing
