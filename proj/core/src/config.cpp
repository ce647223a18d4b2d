#include "pocsa/config.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>

#include "pocsa/benchmarks.hpp"
#include "pocsa/errors.hpp"
#include "pocsa/rng.hpp"

namespace pocsa {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <class T>
T parse_integer(std::string_view key, std::string_view text) {
  T value{};
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end || text.empty())
    throw ConfigError("invalid integer for '" + std::string(key) + "': '" +
                      std::string(text) + "'");
  return value;
}

double parse_real(std::string_view key, std::string_view text) {
  // from_chars for double is missing from older libstdc++; strtod is enough.
  const std::string s(text);
  char* end = nullptr;
  const double value = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size())
    throw ConfigError("invalid number for '" + std::string(key) + "': '" + s + "'");
  return value;
}

bool parse_bool(std::string_view key, std::string_view text) {
  if (text == "1" || text == "true" || text == "yes" || text == "on") return true;
  if (text == "0" || text == "false" || text == "no" || text == "off") return false;
  throw ConfigError("invalid boolean for '" + std::string(key) + "': '" +
                    std::string(text) + "'");
}

}  // namespace

std::string_view to_string(Algorithm algorithm) noexcept {
  switch (algorithm) {
    case Algorithm::csa: return "csa";
    case Algorithm::r_csa: return "r-csa";
    case Algorithm::b_csa: return "b-csa";
    case Algorithm::po_csa: return "po-csa";
  }
  return "unknown";
}

std::optional<Algorithm> parse_algorithm(std::string_view text) noexcept {
  if (text == "csa") return Algorithm::csa;
  if (text == "r-csa") return Algorithm::r_csa;
  if (text == "b-csa") return Algorithm::b_csa;
  if (text == "po-csa") return Algorithm::po_csa;
  return std::nullopt;
}

std::uint64_t CampaignConfig::effective_rotation_seed() const noexcept {
  if (rotation_seed) return *rotation_seed;
  return derive_seed(derive_seed(seed, 0x9000ULL + static_cast<std::uint64_t>(function)), dim);
}

std::vector<std::string> validate(const CampaignConfig& c) {
  std::vector<std::string> errors;
  if (c.function < 1 || c.function > bench::kFunctionCount)
    errors.push_back("function must be in 1..14");
  if (c.dim < 1) errors.push_back("dim must be positive");
  if (c.function >= 9 && c.function <= 14 && c.dim < 2)
    errors.push_back("rotated functions (9..14) need dim >= 2");
  if (c.effective_optimizers() < 2) errors.push_back("optimizers must be at least 2");
  if (c.budget_per_optimizer < 1) errors.push_back("budget_per_optimizer must be at least 1");
  if (c.runs < 1) errors.push_back("runs must be at least 1");
  if (c.algorithm == Algorithm::csa && !c.tgen0)
    errors.push_back("algorithm csa needs tgen0");
  if (c.tgen0 && !(*c.tgen0 > 0.0)) errors.push_back("tgen0 must be positive");
  if (!(c.tac0 > 0.0)) errors.push_back("tac0 must be positive");
  if (!(c.alpha > 0.0 && c.alpha <= 0.1)) errors.push_back("alpha must lie in (0, 0.1]");
  if (!(c.beta > 1.0)) errors.push_back("beta must exceed 1");
  if (!(c.phi > 0.0 && c.phi <= 0.1)) errors.push_back("phi must lie in (0, 0.1]");
  if (!(c.mu > 0.0 && c.mu <= 0.1)) errors.push_back("mu must lie in (0, 0.1]");
  if (!(c.delta >= 0.0 && c.delta <= 0.05)) errors.push_back("delta must lie in [0, 0.05]");
  if (c.threads < 1) errors.push_back("threads must be at least 1");
  if (c.rotation_count != 0 && c.rotation_count < c.dim)
    errors.push_back("rotation_count must be 0 or at least dim");
  if (c.out_dir.empty()) errors.push_back("out_dir must not be empty");
  return errors;
}

void set_config_value(CampaignConfig& c, std::string_view key, std::string_view value) {
  value = trim(value);
  if (key == "algorithm") {
    auto a = parse_algorithm(value);
    if (!a) throw ConfigError("unknown algorithm '" + std::string(value) +
                              "' (expected csa, r-csa, b-csa or po-csa)");
    c.algorithm = *a;
  } else if (key == "function") {
    if (!value.empty() && (value.front() == 'f' || value.front() == 'F'))
      value.remove_prefix(1);
    c.function = parse_integer<int>(key, value);
  } else if (key == "dim") {
    c.dim = parse_integer<std::size_t>(key, value);
  } else if (key == "optimizers") {
    c.optimizers = parse_integer<std::size_t>(key, value);
  } else if (key == "budget_per_optimizer") {
    // Accept scientific shorthand such as 2e5.
    const double v = parse_real(key, value);
    if (!(v >= 0.0 && v <= 9.0e18 && v == static_cast<double>(static_cast<std::uint64_t>(v))))
      throw ConfigError("invalid integer for 'budget_per_optimizer': '" + std::string(value) + "'");
    c.budget_per_optimizer = static_cast<std::uint64_t>(v);
  } else if (key == "runs") {
    c.runs = parse_integer<std::size_t>(key, value);
  } else if (key == "seed") {
    c.seed = parse_integer<std::uint64_t>(key, value);
  } else if (key == "rotation_seed") {
    c.rotation_seed = parse_integer<std::uint64_t>(key, value);
  } else if (key == "rotation_count") {
    c.rotation_count = parse_integer<std::size_t>(key, value);
  } else if (key == "tgen0") {
    c.tgen0 = parse_real(key, value);
  } else if (key == "tac0") {
    c.tac0 = parse_real(key, value);
  } else if (key == "alpha") {
    c.alpha = parse_real(key, value);
  } else if (key == "beta") {
    c.beta = parse_real(key, value);
  } else if (key == "phi") {
    c.phi = parse_real(key, value);
  } else if (key == "mu") {
    c.mu = parse_real(key, value);
  } else if (key == "delta") {
    c.delta = parse_real(key, value);
  } else if (key == "trace") {
    c.trace = parse_bool(key, value);
  } else if (key == "trace_members") {
    c.trace_members = parse_bool(key, value);
  } else if (key == "out_dir") {
    c.out_dir = std::string(value);
  } else if (key == "threads") {
    c.threads = parse_integer<std::size_t>(key, value);
  } else {
    throw ConfigError("unknown config key '" + std::string(key) + "'");
  }
}

void apply_config_file(CampaignConfig& config, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = trim(line);
    if (view.empty() || view.front() == '#') continue;
    const auto eq = view.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError(path + ":" + std::to_string(line_no) + ": expected key=value");
    set_config_value(config, trim(view.substr(0, eq)), view.substr(eq + 1));
  }
}

std::string format_double(double value) {
  char buf[64];
  const auto result = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, result.ptr);
}

std::vector<std::pair<std::string, std::string>> config_entries(const CampaignConfig& c) {
  std::vector<std::pair<std::string, std::string>> e;
  e.emplace_back("algorithm", std::string(to_string(c.algorithm)));
  e.emplace_back("function", std::to_string(c.function));
  e.emplace_back("dim", std::to_string(c.dim));
  e.emplace_back("optimizers", std::to_string(c.effective_optimizers()));
  e.emplace_back("budget_per_optimizer", std::to_string(c.budget_per_optimizer));
  e.emplace_back("runs", std::to_string(c.runs));
  e.emplace_back("seed", std::to_string(c.seed));
  e.emplace_back("rotation_seed", std::to_string(c.effective_rotation_seed()));
  e.emplace_back("rotation_count", std::to_string(c.rotation_count));
  if (c.tgen0) e.emplace_back("tgen0", format_double(*c.tgen0));
  e.emplace_back("tac0", format_double(c.tac0));
  e.emplace_back("alpha", format_double(c.alpha));
  e.emplace_back("beta", format_double(c.beta));
  e.emplace_back("phi", format_double(c.phi));
  e.emplace_back("mu", format_double(c.mu));
  e.emplace_back("delta", format_double(c.delta));
  e.emplace_back("trace", c.trace ? "true" : "false");
  e.emplace_back("trace_members", c.trace_members ? "true" : "false");
  e.emplace_back("out_dir", c.out_dir);
  e.emplace_back("threads", std::to_string(c.threads));
  return e;
}

}  // namespace pocsa
