#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "qhm/classical.hpp"
#include "qhm/perturbation.hpp"

namespace qhm {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using ConfigMap = std::map<std::string, std::string>;

/// Flat `key = value` lines; `#` starts a comment. Keys are the long flag names without dashes.
ConfigMap parseConfigText(const std::string& text);
ConfigMap readConfigFile(const std::string& path);

struct RunConfig {
  int order = 1;
  /// Per-order metric parameters as `p/q` strings; missing entries stay formal.
  std::map<int, std::string> lambda, kappa;
  bool formal = false;  // `params = formal` overrides every explicit value
  FlowConfig flow;
  double fpLambda = 0.0;  // free particle
  double fpKappa = 1.0;
  unsigned workers = 0;
  std::optional<std::string> out;

  /// Unknown keys and malformed values throw ConfigError.
  static RunConfig fromMap(const ConfigMap& m);
  MetricParams metricParams() const;
};

/// Strict `p/q` or integer; decimals are rejected so the symbolic core never sees floats.
Rational parseExactRational(const std::string& s);

}  // namespace qhm
