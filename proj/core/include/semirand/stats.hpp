#pragma once

#include <cmath>
#include <stdexcept>

namespace semirand {

struct Interval {
  double low = 0.0;
  double high = 0.0;
};

// Wilson score interval for a binomial proportion; z defaults to the 95%
// two-sided normal quantile.
inline Interval wilson_interval(long long successes, long long trials,
                                double z = 1.959963984540054) {
  if (trials <= 0) throw std::invalid_argument("wilson interval needs trials >= 1");
  if (successes < 0 || successes > trials)
    throw std::invalid_argument("successes out of range");
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (p + z2 / (2.0 * n)) / denom;
  const double half = (z / denom) * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n));
  Interval iv;
  iv.low = std::max(0.0, center - half);
  iv.high = std::min(1.0, center + half);
  // At the boundaries the interval endpoint is exactly p; keep it free of
  // rounding noise.
  if (successes == trials) iv.high = 1.0;
  if (successes == 0) iv.low = 0.0;
  return iv;
}

}  // namespace semirand
