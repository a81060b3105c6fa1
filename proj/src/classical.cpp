#include "qhm/classical.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace qhm {

ClassicalHamiltonian classicalLimit(const SeriesExpr& h) {
  ClassicalHamiltonian hc;
  for (int j = 0; j <= h.order(); ++j) {
    SymmetricForm form = symmetricForm(h[j]);
    if (!form.hermitian()) throw std::domain_error("classicalLimit: order " + std::to_string(j) + " is not Hermitian");
    for (const SymmetricTerm& t : form.terms) {
      if (t.pPow - t.xPow != 2 - 5 * j)
        throw std::domain_error("classicalLimit: hbar grading violated at order " + std::to_string(j));
      int w = 2 - t.pPow - 2 * j;
      if (t.parity) {
        if (w <= 0) throw std::domain_error("classicalLimit: parity term with hbar weight <= 0 at order " +
                                            std::to_string(j));
        continue;
      }
      if (w < 0) throw std::domain_error("classicalLimit: negative hbar weight at order " + std::to_string(j));
      if (w > 0) continue;
      if (!t.coeff.isConstant() || !t.coeff.constant().isReal())
        throw std::domain_error("classicalLimit: surviving coefficient is not a real constant at order " +
                                std::to_string(j));
      Rational c = t.coeff.constant().re();
      if (t.anticommutator) c *= 2;
      hc.terms.push_back({t.xPow, t.pPow, j - 1, c, j});
    }
  }
  return hc;
}

namespace {

double term(const ClassicalTerm& t, double x, double p, double eps, double mass, int dxOrder, int dpOrder) {
  double c = t.coeff.get_d() * std::pow(mass, t.massPow) * std::pow(eps, t.epsPow);
  int a = t.xPow, b = t.pPow;
  if (dxOrder) {
    if (a == 0) return 0;
    c *= a;
    --a;
  }
  if (dpOrder) {
    if (b == 0) return 0;
    c *= b;
    --b;
  }
  return c * std::pow(x, a) * std::pow(p, b);
}

}  // namespace

double ClassicalHamiltonian::value(double x, double p, double eps, double mass) const {
  double s = 0;
  for (const auto& t : terms) s += term(t, x, p, eps, mass, 0, 0);
  return s;
}

double ClassicalHamiltonian::dx(double x, double p, double eps, double mass) const {
  double s = 0;
  for (const auto& t : terms) s += term(t, x, p, eps, mass, 1, 0);
  return s;
}

double ClassicalHamiltonian::dp(double x, double p, double eps, double mass) const {
  double s = 0;
  for (const auto& t : terms) s += term(t, x, p, eps, mass, 0, 1);
  return s;
}

std::string ClassicalHamiltonian::str() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms) {
    if (!first) os << " + ";
    first = false;
    os << rationalString(t.coeff);
    if (t.massPow != 0) os << "*m^" << t.massPow;
    if (t.epsPow != 0) os << "*eps^" << t.epsPow;
    os << "*x^" << t.xPow << "*p^" << t.pPow;
  }
  return os.str();
}

namespace {

using State = std::array<double, 3>;  // (x, p or u, t)

State axpy(const State& a, double h, const State& b) {
  return {a[0] + h * b[0], a[1] + h * b[1], a[2] + h * b[2]};
}

template <class F>
State rk4(const F& f, const State& s, double h) {
  State k1 = f(s), k2 = f(axpy(s, h / 2, k1)), k3 = f(axpy(s, h / 2, k2)), k4 = f(axpy(s, h, k3));
  State out;
  for (int i = 0; i < 3; ++i) out[i] = s[i] + h / 6 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
  return out;
}

// Cubic Hermite interpolant on [0, 1] with end slopes scaled by the step h.
double hermite(double y0, double y1, double d0, double d1, double h, double th) {
  double t2 = th * th, t3 = t2 * th;
  return (2 * t3 - 3 * t2 + 1) * y0 + (t3 - 2 * t2 + th) * h * d0 + (-2 * t3 + 3 * t2) * y1 + (t3 - t2) * h * d1;
}

}  // namespace

FlowResult hamiltonFlow(const ClassicalHamiltonian& hc, const FlowConfig& cfg) {
  if (!(cfg.dt > 0)) throw std::invalid_argument("dt must be positive");
  if (cfg.p0 == 0) throw std::invalid_argument("p0 must be nonzero");
  if (cfg.steps < 0) throw std::invalid_argument("steps must be non-negative");
  const double eps = cfg.eps, m = cfg.mass;
  FlowResult res;
  res.energy = hc.value(cfg.x0, cfg.p0, eps, m);
  const double E = res.energy;
  if (!std::isfinite(E) || E == 0) throw std::invalid_argument("initial energy must be finite and nonzero");
  const bool regularized = cfg.mode == FlowMode::Regularized;
  const double sgnP = cfg.p0 > 0 ? 1.0 : -1.0;

  // Regularized variables: K(x, u) = u^s (H - E) with H a polynomial in x and u^{1/2}.
  int s = 0;
  for (const auto& t : hc.terms) {
    if (regularized && t.pPow % 2 != 0) throw std::invalid_argument("regularized flow needs even powers of p");
    s = std::max(s, -t.pPow / 2);
  }
  auto kTerm = [&](const ClassicalTerm& t, double x, double u, int dx, int du) {
    double c = t.coeff.get_d() * std::pow(m, t.massPow) * std::pow(eps, t.epsPow);
    int a = t.xPow, b = t.pPow / 2 + s;
    if (dx) { if (a == 0) return 0.0; c *= a; --a; }
    if (du) { if (b == 0) return 0.0; c *= b; --b; }
    return c * std::pow(x, a) * std::pow(u, b);
  };
  auto field = [&](const State& st) -> State {
    if (regularized) {
      double x = st[0], u = st[1];
      double ku = -E * (s > 0 ? s * std::pow(u, s - 1) : 0.0), kx = 0;
      for (const auto& t : hc.terms) {
        ku += kTerm(t, x, u, 0, 1);
        kx += kTerm(t, x, u, 1, 0);
      }
      double du = std::max(u, 0.0);
      return {ku, -kx, sgnP * std::pow(du, s - 0.5) / 2};
    }
    return {hc.dp(st[0], st[1], eps, m), -hc.dx(st[0], st[1], eps, m), 1.0};
  };
  auto momentum = [&](const State& st) { return regularized ? sgnP * std::sqrt(std::max(st[1], 0.0)) : st[1]; };
  auto energyError = [&](const State& st) {
    if (!regularized) return std::abs(hc.value(st[0], st[1], eps, m) - E) / E;
    double k = -E * std::pow(st[1], s);
    for (const auto& t : hc.terms) k += kTerm(t, st[0], st[1], 0, 0);
    return std::abs(k) / (std::abs(E) * std::pow(cfg.p0 * cfg.p0, s));
  };
  auto sample = [&](const State& st) {
    double p = momentum(st);
    double h = p != 0 ? hc.value(st[0], p, eps, m) : std::numeric_limits<double>::quiet_NaN();
    res.samples.push_back({st[2], st[0], p, h});
  };

  State st{cfg.x0, regularized ? cfg.p0 * cfg.p0 : cfg.p0, 0.0};
  State f0 = field(st);
  // Poincare section through the start, on the coordinate moving fastest there.
  const int q = std::abs(f0[0]) >= std::abs(f0[1]) ? 0 : 1;
  const double q0 = st[q], dir = f0[q] > 0 ? 1.0 : -1.0;
  sample(st);
  const long limit = cfg.steps > 0 ? cfg.steps : cfg.maxSteps;
  for (long n = 0; n < limit; ++n) {
    State next = rk4(field, st, cfg.dt);
    ++res.stepsTaken;
    // A sign change of p in physical mode means the step jumped across the floor.
    bool below = regularized ? next[1] < -cfg.pFloor
                             : std::abs(next[1]) < cfg.pFloor || (next[1] > 0) != (st[1] > 0);
    if (below)
      throw std::domain_error("momentum fell below the singularity floor at step " + std::to_string(n + 1));
    res.maxDrift = std::max(res.maxDrift, energyError(next));
    bool crossed = !res.periodFound && (st[q] - q0) * dir < 0 && (next[q] - q0) * dir >= 0;
    if (crossed) {
      State fa = field(st), fb = field(next);
      double lo = 0, hi = 1;
      for (int it = 0; it < 200; ++it) {
        double mid = (lo + hi) / 2;
        double v = (hermite(st[q], next[q], fa[q], fb[q], cfg.dt, mid) - q0) * dir;
        (v < 0 ? lo : hi) = mid;
      }
      double th = (lo + hi) / 2;
      State ret;
      for (int i = 0; i < 3; ++i) ret[i] = hermite(st[i], next[i], fa[i], fb[i], cfg.dt, th);
      res.periodFound = true;
      res.period = std::abs(ret[2]);
      double dx = ret[0] - cfg.x0, dp = momentum(ret) - cfg.p0;
      res.closure = std::sqrt(dx * dx + dp * dp);
      double pr = momentum(ret);
      res.endDrift = pr != 0 ? std::abs(hc.value(ret[0], pr, eps, m) - E) / std::abs(E) : 0.0;
      if (cfg.steps == 0) {
        sample(ret);
        st = ret;
        break;
      }
    }
    st = next;
    sample(st);
  }
  if (!res.periodFound) {
    double p = momentum(st);
    res.endDrift = p != 0 ? std::abs(hc.value(st[0], p, eps, m) - E) / std::abs(E) : 0.0;
  }
  return res;
}

void writeCsv(std::ostream& os, const FlowResult& r) {
  os << "t,x,p,H\n";
  char buf[128];
  for (const auto& s : r.samples) {
    std::snprintf(buf, sizeof buf, "%.12f,%.12f,%.12f,%.12f\n", s.t, s.x, s.p, s.h);
    os << buf;
  }
}

std::string flowSummary(const FlowResult& r, const FlowConfig& cfg) {
  char buf[512];
  std::ostringstream os;
  std::snprintf(buf, sizeof buf, "mode %s\neps %.6g\nmass %.6g\ninit %.12g %.12g\ndt %.6g\n",
                cfg.mode == FlowMode::Regularized ? "regularized" : "physical", cfg.eps, cfg.mass, cfg.x0, cfg.p0,
                cfg.dt);
  os << buf;
  std::snprintf(buf, sizeof buf, "energy %.15g\nsteps %ld\n", r.energy, r.stepsTaken);
  os << buf;
  if (r.periodFound) {
    std::snprintf(buf, sizeof buf, "period %.12f\nclosure %.3e\nclosed %s\n", r.period, r.closure,
                  r.closure <= cfg.closureTol ? "yes" : "no");
    os << buf;
  } else {
    os << "period none\n";
  }
  std::snprintf(buf, sizeof buf, "drift_max %.3e\ndrift_end %.3e\n", r.maxDrift, r.endDrift);
  os << buf;
  return os.str();
}

}  // namespace qhm
