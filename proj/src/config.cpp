#include "qhm/config.hpp"

#include <fstream>
#include <regex>
#include <sstream>

namespace qhm {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parseDouble(const std::string& key, const std::string& v) {
  std::size_t used = 0;
  double d = 0;
  try {
    d = std::stod(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != v.size() || v.empty()) throw ConfigError(key + ": not a number: '" + v + "'");
  return d;
}

long parseLong(const std::string& key, const std::string& v) {
  std::size_t used = 0;
  long n = 0;
  try {
    n = std::stol(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != v.size() || v.empty()) throw ConfigError(key + ": not an integer: '" + v + "'");
  return n;
}

}  // namespace

ConfigMap parseConfigText(const std::string& text) {
  ConfigMap m;
  std::istringstream in(text);
  std::string line;
  int n = 0;
  while (std::getline(in, line)) {
    ++n;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError("config line " + std::to_string(n) + ": expected key = value");
    std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
    if (key.empty()) throw ConfigError("config line " + std::to_string(n) + ": empty key");
    m[key] = value;
  }
  return m;
}

ConfigMap readConfigFile(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot read config file " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parseConfigText(ss.str());
}

Rational parseExactRational(const std::string& s) {
  static const std::regex re(R"([+-]?[0-9]+(/[0-9]+)?)");
  if (!std::regex_match(s, re)) throw ConfigError("not an exact rational (use p/q): '" + s + "'");
  std::string t = s[0] == '+' ? s.substr(1) : s;
  Rational r;
  if (r.set_str(t, 10) != 0 || r.get_den() == 0) throw ConfigError("not an exact rational: '" + s + "'");
  r.canonicalize();
  return r;
}

RunConfig RunConfig::fromMap(const ConfigMap& m) {
  RunConfig c;
  static const std::regex param(R"(([lk])([1-9][0-9]*))");
  for (const auto& [key, v] : m) {
    std::smatch sm;
    if (key == "order") {
      long n = parseLong(key, v);
      if (n < 1) throw ConfigError("order must be at least 1");
      if (n > Symbol::kMaxOrder) throw ConfigError("order above " + std::to_string(Symbol::kMaxOrder) + " is not supported");
      c.order = static_cast<int>(n);
    } else if (key == "params") {
      if (v != "formal") throw ConfigError("params: only the token 'formal' is accepted");
      c.formal = true;
    } else if (std::regex_match(key, sm, param)) {
      if (v != "formal") parseExactRational(v);
      (sm[1] == "l" ? c.lambda : c.kappa)[std::stoi(sm[2])] = v;
    } else if (key == "epsilon") {
      c.flow.eps = parseDouble(key, v);
    } else if (key == "mass") {
      c.flow.mass = parseDouble(key, v);
      if (!(c.flow.mass > 0)) throw ConfigError("mass must be positive");
    } else if (key == "init-x") {
      c.flow.x0 = parseDouble(key, v);
    } else if (key == "init-p") {
      c.flow.p0 = parseDouble(key, v);
    } else if (key == "dt") {
      c.flow.dt = parseDouble(key, v);
      if (!(c.flow.dt > 0)) throw ConfigError("dt must be positive");
    } else if (key == "steps") {
      c.flow.steps = parseLong(key, v);
      if (c.flow.steps < 0) throw ConfigError("steps must be non-negative");
    } else if (key == "max-steps") {
      c.flow.maxSteps = parseLong(key, v);
    } else if (key == "p-floor") {
      c.flow.pFloor = parseDouble(key, v);
    } else if (key == "closure-tol") {
      c.flow.closureTol = parseDouble(key, v);
    } else if (key == "mode") {
      if (v == "regularized")
        c.flow.mode = FlowMode::Regularized;
      else if (v == "physical")
        c.flow.mode = FlowMode::Physical;
      else
        throw ConfigError("mode must be regularized or physical");
    } else if (key == "lambda") {
      c.fpLambda = parseDouble(key, v);
    } else if (key == "kappa") {
      c.fpKappa = parseDouble(key, v);
    } else if (key == "workers") {
      long n = parseLong(key, v);
      if (n < 0) throw ConfigError("workers must be non-negative");
      c.workers = static_cast<unsigned>(n);
    } else if (key == "out") {
      c.out = v;
    } else {
      throw ConfigError("unknown config key '" + key + "'");
    }
  }
  return c;
}

MetricParams RunConfig::metricParams() const {
  MetricParams p = MetricParams::formal(order);
  if (!formal) {
    for (const auto& [j, v] : lambda)
      if (j <= order && v != "formal") p.lambda[static_cast<std::size_t>(j - 1)] = ParamPoly(GaussianRational(parseExactRational(v)));
    for (const auto& [j, v] : kappa)
      if (j <= order && v != "formal") p.kappa[static_cast<std::size_t>(j - 1)] = ParamPoly(GaussianRational(parseExactRational(v)));
  }
  p.validate();
  return p;
}

}  // namespace qhm
