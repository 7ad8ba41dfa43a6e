#include "curvebraid/tracking.hpp"

#include "curvebraid/error.hpp"

#include <algorithm>
#include <cmath>

namespace curvebraid {

namespace {

// Sign of a crossing in which the strand moving up in real-part order passes below
// (smaller imaginary part). With this orientation a counter-clockwise loop around a
// simple branch point yields a positive letter.
constexpr int kCrossingOrientation = +1;

// Strand positions at parameter t inside the sample interval [a, b], by Newton from
// the linear interpolation of the two samples.
std::vector<Complex> strands_between(const StrandSheet &sheet, const StrandSample &a,
                                     const StrandSample &b, double t) {
  const auto &f = sheet.curve();
  const double span = b.t - a.t;
  const double s = span > 0.0 ? (t - a.t) / span : 0.0;
  const Complex z = sheet.path().at(t);
  const int n = static_cast<int>(a.w.size());
  std::vector<Complex> guess(n), out(n);
  for (int k = 0; k < n; ++k) {
    guess[k] = a.w[k] + s * (b.w[k] - a.w[k]);
    Complex x = guess[k];
    for (int it = 0; it < 30; ++it) {
      const Complex delta = f(z, x) / f.dw(z, x);
      x -= delta;
      if (std::abs(delta) <= 1e-15 * (1.0 + std::abs(x)))
        break;
    }
    out[k] = x;
  }
  for (int k = 0; k < n; ++k) {
    const double own = std::abs(out[k] - guess[k]);
    for (int j = 0; j < n; ++j) {
      if (j != k && std::abs(out[k] - guess[j]) <= own)
        throw Error(ErrorCode::MatchingAmbiguity, "strand identity lost while refining a crossing");
    }
  }
  return out;
}

struct PendingSwap {
  double t;
  int p;
  int q;
  std::vector<Complex> w;
};

double real_gap(const std::vector<Complex> &w, int p, int q) { return w[p].real() - w[q].real(); }

void check_endpoint(const std::vector<Complex> &w, const std::vector<int> &order, double rel_tol) {
  for (std::size_t k = 0; k + 1 < order.size(); ++k) {
    const Complex a = w[order[k]];
    const Complex b = w[order[k + 1]];
    if (std::abs(b.real() - a.real()) <= rel_tol * (1.0 + std::abs(a) + std::abs(b)))
      throw Error(ErrorCode::TangentialCrossing, "real parts coincide at a path endpoint");
  }
}

} // namespace

std::vector<CrossingEvent> crossings(const StrandSheet &sheet) {
  const auto &samples = sheet.samples();
  std::vector<CrossingEvent> events;
  if (samples.size() < 2)
    return events;
  const int n = sheet.strands();
  const double endpoint_tol = 1e-12;

  std::vector<int> order = sorted_strand_order(samples.front().w);
  check_endpoint(samples.front().w, order, endpoint_tol);
  check_endpoint(samples.back().w, sorted_strand_order(samples.back().w), endpoint_tol);

  for (std::size_t s = 0; s + 1 < samples.size(); ++s) {
    const auto &a = samples[s];
    const auto &b = samples[s + 1];
    std::vector<PendingSwap> swaps;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double ga = real_gap(a.w, p, q);
        const double gb = real_gap(b.w, p, q);
        if ((ga < 0.0) == (gb < 0.0))
          continue;
        double lo = a.t, hi = b.t;
        double glo = ga;
        for (int it = 0; it < 80 && hi - lo > 1e-13; ++it) {
          const double mid = 0.5 * (lo + hi);
          const auto w = strands_between(sheet, a, b, mid);
          const double g = real_gap(w, p, q);
          if ((g < 0.0) == (glo < 0.0)) {
            lo = mid;
            glo = g;
          } else {
            hi = mid;
          }
        }
        const double tc = 0.5 * (lo + hi);
        swaps.push_back({tc, p, q, strands_between(sheet, a, b, tc)});
      }
    }
    std::sort(swaps.begin(), swaps.end(),
              [](const PendingSwap &x, const PendingSwap &y) { return x.t < y.t; });

    for (const auto &sw : swaps) {
      const auto pp = std::find(order.begin(), order.end(), sw.p) - order.begin();
      const auto pq = std::find(order.begin(), order.end(), sw.q) - order.begin();
      if (std::abs(pp - pq) != 1)
        throw Error(ErrorCode::ResolutionFailure,
                    "non-adjacent strands exchange real-part order (triple coincidence?)");
      const auto lower = std::min(pp, pq);
      const int up = order[lower];        // moves from position lower to lower + 1
      const int down = order[lower + 1];
      const int sign = sw.w[up].imag() < sw.w[down].imag() ? 1 : -1;
      events.push_back({sw.t, static_cast<int>(lower) + 1, kCrossingOrientation * sign});
      std::swap(order[lower], order[lower + 1]);
    }

    if (order != sorted_strand_order(b.w))
      throw Error(ErrorCode::ResolutionFailure, "sorted order drifted between samples");

    // Adjacent strands touching in real part at a sample without exchanging order.
    if (s + 2 < samples.size()) {
      for (int k = 0; k + 1 < n; ++k) {
        const Complex x = b.w[order[k]];
        const Complex y = b.w[order[k + 1]];
        if (std::abs(y.real() - x.real()) <= 1e-11 * (1.0 + std::abs(x) + std::abs(y))) {
          const int p = order[k];
          const int q = order[k + 1];
          const auto &c = samples[s + 2];
          // A genuine crossing changes the sign of the gap across the neighbouring samples.
          if ((real_gap(a.w, p, q) < 0.0) == (real_gap(c.w, p, q) < 0.0))
            throw Error(ErrorCode::TangentialCrossing,
                        "real parts touch without crossing near t=" + std::to_string(b.t));
        }
      }
    }
  }
  return events;
}

} // namespace curvebraid
