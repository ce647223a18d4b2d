#pragma once

#include <cstddef>
#include <span>

namespace pocsa {

struct Summary {
  std::size_t count = 0;
  double mean = 0.0;
  double median = 0.0;
  double min = 0.0;
  double max = 0.0;
  double stddev = 0.0;  // sample (n - 1) standard deviation; 0 for one value
};

/// Throws ConfigError on empty input.
Summary summarize(std::span<const double> values);

}  // namespace pocsa
