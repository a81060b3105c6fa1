#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qhm/series.hpp"

namespace qhm {

/// coeff * m^massPow * eps^epsPow * x^xPow * p^pPow
struct ClassicalTerm {
  int xPow = 0;
  int pPow = 0;
  int massPow = 0;
  Rational coeff;
  int epsPow = 0;
  friend bool operator==(const ClassicalTerm&, const ClassicalTerm&) = default;
};

struct ClassicalHamiltonian {
  std::vector<ClassicalTerm> terms;  // ascending epsPow, then descending xPow

  double value(double x, double p, double eps, double mass) const;
  double dx(double x, double p, double eps, double mass) const;
  double dp(double x, double p, double eps, double mass) const;
  std::string str() const;
};

/// hbar -> 0 limit of a Hermitian h. At order j a term s {x^a, p^b} carries
/// hbar weight w = 2 - b - 2j; only w = 0 survives, with s {x^a,p^b} -> 2s x^a p^b
/// and mass power j-1. Parity terms must have w > 0 and are dropped.
/// Throws std::domain_error on w < 0, a parity term with w <= 0, or a
/// surviving coefficient that depends on metric parameters.
ClassicalHamiltonian classicalLimit(const SeriesExpr& h);

enum class FlowMode { Regularized, Physical };

struct FlowConfig {
  double eps = 0.1;
  double mass = 1.0;
  double x0 = 0.0;
  double p0 = 1.0;
  double dt = 0.01;       // step in the integration variable
  long steps = 0;         // 0: stop one period after the start
  long maxSteps = 10000000;
  double pFloor = 1e-6;
  double closureTol = 1e-6;
  FlowMode mode = FlowMode::Regularized;
};

struct FlowSample {
  double t, x, p, h;
};

struct FlowResult {
  std::vector<FlowSample> samples;
  double energy = 0;
  bool periodFound = false;
  double period = 0;
  double closure = 0;         // phase-space distance at the return
  /// Regularized: max |u^s (H - E)| / (E u0^s), the relative error of the
  /// conserved regular quantity (H itself is 0/0 at the p -> 0 point).
  /// Physical: max |H - E| / E.
  double maxDrift = 0;
  double endDrift = 0;        // |H - E| / E at the return (or last sample)
  long stepsTaken = 0;
};

/// Classic RK4. Regularized mode integrates (x, u = p^2) in a fictitious time
/// where the flow generated by u^s (H - E) is polynomial, which removes the
/// p -> 0 singularity of H_c at x -> 0; physical mode integrates (x, p) in t
/// and aborts when |p| drops below the floor.
/// Throws std::domain_error (singularity floor) or std::invalid_argument.
FlowResult hamiltonFlow(const ClassicalHamiltonian& hc, const FlowConfig& cfg);

void writeCsv(std::ostream& os, const FlowResult& r);
std::string flowSummary(const FlowResult& r, const FlowConfig& cfg);

}  // namespace qhm
