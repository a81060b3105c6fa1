#include <CLI11.hpp>

#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qhm/classical.hpp"
#include "qhm/config.hpp"
#include "qhm/free_particle.hpp"
#include "qhm/observables.hpp"
#include "qhm/perturbation.hpp"
#include "qhm/serialize.hpp"
#include "qhm/verify.hpp"

using namespace qhm;

namespace {

constexpr int kOk = 0, kEngine = 1, kUsage = 2;

void emit(const std::optional<std::string>& path, const std::string& text) {
  if (!path) {
    std::cout << text;
    return;
  }
  std::ofstream f(*path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + *path);
  f << text;
}

std::string series(const std::string& name, const SeriesExpr& s) {
  std::ostringstream os;
  for (int j = 0; j <= s.order(); ++j) os << name << '[' << j << "] = " << toText(s[j]) << '\n';
  return os.str();
}

int cmdDerive(const RunConfig& c) {
  QSeries q = deriveMetricSeries(c.metricParams());
  SeriesExpr X = conjugateBySqrtMetric(OperatorExpr::x(), q);
  SeriesExpr P = conjugateBySqrtMetric(OperatorExpr::p(), q);
  SeriesExpr h = equivalentHermitian(q);
  std::optional<ClassicalHamiltonian> hc;
  std::string hcNote;
  try {
    hc = classicalLimit(h);
  } catch (const std::domain_error& e) {
    hcNote = e.what();
  }

  std::ostringstream log;
  for (const auto& rec : q.orders) {
    ScalingReport s = scalingDegree(rec.q);
    log << "order " << rec.j << ": R terms " << rec.r.size() << ", particular terms " << rec.particular.size()
        << ", Q terms " << rec.q.size() << ", Q hermitian " << (isHermitian(rec.q) ? "yes" : "no")
        << ", Q degree " << (s.homogeneousOfDegree(-5 * rec.j) ? std::to_string(-5 * rec.j) : "mixed")
        << ", [h0,Q] = R " << (commutator(Model::cubic().h0, rec.q) == rec.r ? "yes" : "no") << '\n';
  }
  log << "h orders 0.." << h.order() << " hermitian yes\n";
  log << "classical limit: hbar weight w = 2 - pPow - 2j per term of h_j, w = 0 survives, parity terms need w > 0: "
      << (hc ? "ok" : hcNote) << '\n';

  std::map<std::string, std::string> files;
  for (const auto& rec : q.orders) {
    files["Q" + std::to_string(rec.j) + ".txt"] = toText(rec.q) + "\n";
    files["Q" + std::to_string(rec.j) + ".sym.txt"] = toText(symmetricForm(rec.q)) + "\n";
    files["R" + std::to_string(rec.j) + ".txt"] = toText(rec.r) + "\n";
  }
  files["X.txt"] = series("X", X);
  files["P.txt"] = series("P", P);
  files["h.txt"] = series("h", h);
  files["Hc.txt"] = (hc ? hc->str() : "unavailable: " + hcNote) + "\n";
  files["derive.log"] = log.str();

  if (c.out) {
    std::filesystem::create_directories(*c.out);
    for (const auto& [name, text] : files) emit(*c.out + "/" + name, text);
  } else {
    std::ostringstream all;
    for (const auto& rec : q.orders) {
      all << "Q" << rec.j << " = " << files["Q" + std::to_string(rec.j) + ".txt"];
      all << "Q" << rec.j << " symmetric = " << files["Q" + std::to_string(rec.j) + ".sym.txt"];
      all << "R" << rec.j << " = " << files["R" + std::to_string(rec.j) + ".txt"];
    }
    all << files["X.txt"] << files["P.txt"] << files["h.txt"] << "Hc = " << files["Hc.txt"] << files["derive.log"];
    std::cout << all.str();
  }
  return kOk;
}

int cmdVerify(const RunConfig& c) {
  VerificationReport r = verifyTables(c.workers);
  emit(c.out, r.str());
  return r.count(CheckStatus::Fail) == 0 ? kOk : kEngine;
}

int cmdObservables(const RunConfig& c) {
  QSeries q = deriveMetricSeries(c.metricParams());
  std::string text = series("X", conjugateBySqrtMetric(OperatorExpr::x(), q)) +
                     series("P", conjugateBySqrtMetric(OperatorExpr::p(), q)) + series("h", equivalentHermitian(q));
  emit(c.out, text);
  return kOk;
}

ClassicalHamiltonian classicalFor(const RunConfig& c) {
  RunConfig two = c;
  two.order = std::max(2, c.order);
  return classicalLimit(equivalentHermitian(deriveMetricSeries(two.metricParams())));
}

int cmdClassical(const RunConfig& c) {
  emit(c.out, classicalFor(c).str() + "\n");
  return kOk;
}

int cmdOrbit(const RunConfig& c) {
  FlowConfig f = c.flow;
  if (f.eps == 0 && f.steps == 0) f.steps = 1000;  // free motion never returns
  FlowResult r = hamiltonFlow(classicalFor(c), f);
  std::ostringstream csv;
  writeCsv(csv, r);
  emit(c.out, csv.str());
  (c.out ? std::cout : std::cerr) << flowSummary(r, f);
  return kOk;
}

int cmdFreeParticle(const RunConfig& c) {
  double l = c.fpLambda, k = c.fpKappa;
  std::ostringstream os;
  char buf[256];
  auto line = [&](const char* fmt, auto... args) {
    std::snprintf(buf, sizeof buf, fmt, args...);
    os << buf << '\n';
  };
  auto pf = [](bool b) { return b ? "pass" : "fail"; };
  ParityLinearD eta = freeParticleMetric(l, k);
  line("lambda %.12f", l);
  line("kappa %.12f", k);
  line("eta %.12f + %.12f*P", eta.a, eta.b);
  line("positivity %s", pf(eta.positive()));
  ParityLinearD root = sqrt(eta);
  ParityLinearD back = root * root;
  double sqrtErr = std::max(std::abs(back.a - eta.a), std::abs(back.b - eta.b));
  line("sqrt_eta %.12f + %.12f*P", root.a, root.b);
  line("sqrt_round_trip %s", pf(sqrtErr < 1e-12 * std::max(1.0, std::abs(eta.a))));
  FreeParticleObservables o = freeParticleObservables();
  os << "X " << o.X.str() << '\n' << "P " << o.P.str() << '\n';
  line("ccr %s", pf(o.ccr));
  line("squares %s", pf(o.squares));
  // Gaussians centred at +1 and -1/2 on a symmetric grid.
  const int n = 4001;
  std::vector<double> grid(n);
  std::vector<std::complex<double>> phi(n), psi(n);
  for (int i = 0; i < n; ++i) {
    grid[i] = -20.0 + 40.0 * i / (n - 1);
    phi[i] = std::exp(-(grid[i] - 1) * (grid[i] - 1));
    psi[i] = std::exp(-(grid[i] + 0.5) * (grid[i] + 0.5)) * std::complex<double>(1, 0.5);
  }
  auto ip = [&](const auto& a, const auto& b) { return freeParticleInnerProduct(grid, a, b, l, k); };
  std::complex<double> pp = ip(phi, phi), ps = ip(phi, psi);
  line("inner_product phi,phi %.12f %+.12fi", pp.real(), pp.imag());
  line("inner_product phi,psi %.12f %+.12fi", ps.real(), ps.imag());
  LocalizedState s = localizedState(1.0, l, k);
  line("localized position %.12f %.12f", s.position[0], s.position[1]);
  line("localized weight %.12f %.12f", s.weight[0], s.weight[1]);
  line("localized overlap %.12f + %.12f*P", s.overlap.a, s.overlap.b);
  emit(c.out, os.str());
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Metric operators for p^2/2 + i eps x^3"};
  app.require_subcommand(1, 1);
  std::string configPath;
  ConfigMap flags;
  auto addCommon = [&](CLI::App* cmd) {
    cmd->add_option("--config", configPath, "flat key = value file; flags override it");
    for (const char* name : {"order", "params", "l1", "l2", "l3", "k1", "k2", "k3", "epsilon", "mass", "init-x",
                             "init-p", "dt", "steps", "max-steps", "p-floor", "closure-tol", "mode", "lambda", "kappa",
                             "workers", "out"}) {
      std::string key = name;
      cmd->add_option_function<std::string>(
          "--" + key, [&flags, key](const std::string& v) { flags[key] = v; }, "");
    }
  };
  struct Command {
    const char* name;
    const char* help;
    int (*run)(const RunConfig&);
  };
  const Command commands[] = {{"derive", "metric series, observables, h and the classical limit", cmdDerive},
                              {"verify-tables", "recompute and compare every printed value", cmdVerify},
                              {"observables", "X, P and h", cmdObservables},
                              {"classical", "classical limit of h", cmdClassical},
                              {"orbit", "classical trajectory as CSV", cmdOrbit},
                              {"free-particle", "free-particle quantization report", cmdFreeParticle}};
  for (const auto& c : commands) addCommon(app.add_subcommand(c.name, c.help));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  RunConfig config;
  try {
    ConfigMap merged = configPath.empty() ? ConfigMap{} : readConfigFile(configPath);
    for (const auto& [k, v] : flags) merged[k] = v;
    config = RunConfig::fromMap(merged);
    config.metricParams();
  } catch (const std::exception& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  }

  for (const auto& c : commands) {
    if (!app.got_subcommand(c.name)) continue;
    try {
      return c.run(config);
    } catch (const EngineError& e) {
      std::cerr << "engine failure at order " << e.order() << ": " << e.what() << '\n';
      return kEngine;
    } catch (const std::invalid_argument& e) {
      std::cerr << "usage error: " << e.what() << '\n';
      return kUsage;
    } catch (const std::exception& e) {
      std::cerr << "failure: " << e.what() << '\n';
      return kEngine;
    }
  }
  return kUsage;
}
