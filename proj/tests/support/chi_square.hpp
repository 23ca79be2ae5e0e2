#pragma once

// Chi-square goodness-of-fit helper for the sampler uniformity tests.

#include <cmath>
#include <cstdint>
#include <vector>

namespace testsupport {

// Regularized upper incomplete gamma Q(a, x), series/continued-fraction split
// (Numerical Recipes style).
inline double gamma_q(double a, double x) {
  if (x < 0.0 || a <= 0.0) return 1.0;
  if (x == 0.0) return 1.0;
  double gln = std::lgamma(a);
  if (x < a + 1.0) {
    // P(a,x) by series, return 1 - P
    double ap = a;
    double sum = 1.0 / a;
    double del = sum;
    for (int i = 0; i < 500; ++i) {
      ap += 1.0;
      del *= x / ap;
      sum += del;
      if (std::fabs(del) < std::fabs(sum) * 1e-15) break;
    }
    return 1.0 - sum * std::exp(-x + a * std::log(x) - gln);
  }
  // Q(a,x) by modified Lentz continued fraction
  const double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 500; ++i) {
    double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < 1e-15) break;
  }
  return std::exp(-x + a * std::log(x) - gln) * h;
}

// p-value of a uniform-expectation goodness-of-fit test over k cells.
inline double chi_square_uniform_pvalue(const std::vector<std::uint64_t>& counts) {
  const std::size_t k = counts.size();
  std::uint64_t total = 0;
  for (auto c : counts) total += c;
  const double expect = static_cast<double>(total) / static_cast<double>(k);
  double stat = 0.0;
  for (auto c : counts) {
    double d = static_cast<double>(c) - expect;
    stat += d * d / expect;
  }
  return gamma_q(0.5 * static_cast<double>(k - 1), 0.5 * stat);
}

}  // namespace testsupport
