#pragma once

#include <stdexcept>
#include <string>

namespace pocsa {

/// A parameter or campaign setting outside its declared range.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The objective returned a non-finite value; the message names the point.
class EvaluationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pocsa
