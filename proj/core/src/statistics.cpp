#include "pocsa/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "pocsa/errors.hpp"

namespace pocsa {

Summary summarize(std::span<const double> values) {
  if (values.empty()) throw ConfigError("cannot summarize an empty set of runs");
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  const std::size_t n = sorted.size();

  Summary s;
  s.count = n;
  s.min = sorted.front();
  s.max = sorted.back();
  s.median = n % 2 == 1 ? sorted[n / 2] : 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);
  // Summed in input order so the result does not depend on sorting.
  double sum = 0.0;
  for (double v : values) sum += v;
  s.mean = sum / static_cast<double>(n);
  if (n > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - s.mean) * (v - s.mean);
    s.stddev = std::sqrt(ss / static_cast<double>(n - 1));
  }
  return s;
}

}  // namespace pocsa
