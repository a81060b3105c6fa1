#include <doctest.h>

#include <cmath>
#include <random>

#include "qhm/classical.hpp"
#include "qhm/free_particle.hpp"
#include "qhm/observables.hpp"

using namespace qhm;

namespace {

const GaussianRational I = GaussianRational::i();

const QSeries& formal(int n) {
  static std::map<int, QSeries> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, deriveMetricSeries(MetricParams::formal(n))).first;
  return it->second;
}

FlowResult regularizedOrbit(double dt) {
  FlowConfig c;
  c.dt = dt;
  return hamiltonFlow(classicalLimit(equivalentHermitian(formal(2))), c);
}

}  // namespace

TEST_CASE("physical observables") {
  const QSeries& q = formal(2);
  SeriesExpr X = conjugateBySqrtMetric(OperatorExpr::x(), q), P = conjugateBySqrtMetric(OperatorExpr::p(), q);
  CHECK(X[0] == OperatorExpr::x());
  CHECK(X[1] == commutator(OperatorExpr::x(), q.q(1)) * GaussianRational::fraction(-1, 2));
  CHECK(isAntiHermitian(X[1]));
  SeriesExpr ccr = commutator(X, P);
  CHECK(ccr[0] == OperatorExpr(I));
  for (int j = 1; j <= ccr.order(); ++j) CHECK(ccr[j].isZero());
  SeriesExpr back = conjugateBySqrtMetric(OperatorExpr::x(), q, -1);
  CHECK(back[1] == -X[1]);
}

TEST_CASE("equivalent Hermitian Hamiltonian") {
  const QSeries& q = formal(3);
  SeriesExpr h = equivalentHermitian(q);
  CHECK(h.order() == 4);
  for (int j = 0; j <= h.order(); ++j) {
    CAPTURE(j);
    CHECK(isHermitian(h[j]));
    CHECK(scalingDegree(h[j]).homogeneousOfDegree(2 - 5 * j));
  }
  Model m = Model::cubic();
  // h1 enters one order later than h0
  SeriesExpr shifted = conjugateBySqrtMetric(m.h1, q, -1);
  SeriesExpr base = conjugateBySqrtMetric(m.h0, q, -1);
  for (int j = 0; j <= q.order(); ++j) CHECK(h[j] == base[j] + (j > 0 ? shifted[j - 1] : OperatorExpr()));
}

TEST_CASE("classical limit") {
  ClassicalHamiltonian hc = classicalLimit(equivalentHermitian(formal(2)));
  REQUIRE(hc.terms.size() == 2);
  CHECK(hc.terms[0] == ClassicalTerm{0, 2, -1, Rational(1, 2), 0});
  CHECK(hc.terms[1] == ClassicalTerm{6, -2, 1, Rational(3, 8), 2});
  double x = 0.7, p = 1.3, eps = 0.2, m = 1.5, h = 1e-6;
  CHECK(hc.value(x, p, eps, m) == doctest::Approx(p * p / (2 * m) + 0.375 * m * eps * eps * std::pow(x, 6) / (p * p)));
  CHECK(hc.dx(x, p, eps, m) ==
        doctest::Approx((hc.value(x + h, p, eps, m) - hc.value(x - h, p, eps, m)) / (2 * h)).epsilon(1e-6));
  CHECK(hc.dp(x, p, eps, m) ==
        doctest::Approx((hc.value(x, p + h, eps, m) - hc.value(x, p - h, eps, m)) / (2 * h)).epsilon(1e-6));
  SeriesExpr bad(1);
  bad[1] = OperatorExpr::x(3) * I;
  CHECK_THROWS_AS(classicalLimit(bad), std::domain_error);
}

TEST_CASE("orbit: conservation, closure, convergence order") {
  FlowResult a = regularizedOrbit(0.01), b = regularizedOrbit(0.005);
  REQUIRE(a.periodFound);
  REQUIRE(b.periodFound);
  CHECK(a.maxDrift < 1e-8);
  CHECK(a.closure < 1e-6);
  CHECK(a.period == doctest::Approx(b.period).epsilon(1e-8));
  double ratio = a.maxDrift / b.maxDrift;
  CHECK(ratio > 8.0);
  CHECK(ratio < 32.0);
}

TEST_CASE("orbit: free motion and the singularity guard") {
  ClassicalHamiltonian hc = classicalLimit(equivalentHermitian(formal(2)));
  FlowConfig c;
  c.eps = 0;
  c.steps = 10;
  FlowResult r = hamiltonFlow(hc, c);
  REQUIRE(r.samples.size() == 11);
  for (const auto& s : r.samples) {
    CHECK(s.p == doctest::Approx(1.0));
    CHECK(s.x == doctest::Approx(s.t).epsilon(1e-12));
  }
  CHECK(!r.periodFound);
  c = FlowConfig{};
  c.mode = FlowMode::Physical;
  CHECK_THROWS_AS(hamiltonFlow(hc, c), std::domain_error);
  c = FlowConfig{};
  c.dt = 0;
  CHECK_THROWS_AS(hamiltonFlow(hc, c), std::invalid_argument);
}

TEST_CASE("parity-linear algebra") {
  std::mt19937 g(41);
  std::uniform_real_distribution<double> u(-2, 2);
  for (int n = 0; n < 50; ++n) {
    ParityLinearD a{u(g), u(g)}, b{u(g), u(g)}, c{u(g), u(g)};
    ParityLinearD ab = a * b, ba = b * a;
    CHECK(ab.a == doctest::Approx(ba.a));
    CHECK(ab.b == doctest::Approx(ba.b));
    ParityLinearD l = (a * b) * c, r = a * (b * c);
    CHECK(l.a == doctest::Approx(r.a));
    CHECK(l.b == doctest::Approx(r.b));
    ParityLinearD pos{std::abs(a.b) + 0.1 + std::abs(u(g)), a.b};
    ParityLinearD s = sqrt(pos * pos);
    CHECK(s.a == doctest::Approx(pos.a));
    CHECK(s.b == doctest::Approx(pos.b));
    if (std::abs(a.a * a.a - a.b * a.b) > 1e-3) {
      ParityLinearD one = a * a.inverse();
      CHECK(one.a == doctest::Approx(1.0));
      CHECK(one.b == doctest::Approx(0.0).epsilon(1e-9));
    }
  }
  ParityLinearQ v{Rational(25, 4), Rational(-6)};  // eigenvalues 1/4 and 49/4
  auto root = sqrtExact(v);
  REQUIRE(root);
  CHECK(*root * *root == v);
  CHECK(root->positive());
  CHECK(!sqrtExact(ParityLinearQ{Rational(2), Rational(0)}));
  CHECK_THROWS(ParityLinearQ{Rational(1), Rational(1)}.inverse());
}

TEST_CASE("free particle") {
  FreeParticleObservables o = freeParticleObservables();
  CHECK(o.ccr);
  CHECK(o.squares);
  for (int k = -2; k <= 2; ++k) CHECK(freeParticleMetric(0.3, k).positive());
  ParityLinearD eta = freeParticleMetric(0.0, 1.0);
  CHECK(eta.a == doctest::Approx(std::cosh(1.0)));
  CHECK(eta.b == doctest::Approx(-std::sinh(1.0)));
  LocalizedState s = localizedState(0.5, 0.0, 1.0);
  CHECK(s.weight[0] == doctest::Approx(std::cosh(0.5)));
  CHECK(s.weight[1] == doctest::Approx(std::sinh(0.5)));
  CHECK(s.overlap.a == doctest::Approx(1.0));
  CHECK(s.overlap.b == doctest::Approx(0.0));
  LocalizedState plain = localizedState(0.5, 0.4, 0.0);
  CHECK(plain.weight[0] == doctest::Approx(std::exp(0.2)));
  CHECK(plain.weight[1] == 0.0);

  std::vector<double> grid;
  std::vector<std::complex<double>> phi, psi;
  for (int i = -400; i <= 400; ++i) {
    double x = i / 40.0;
    grid.push_back(x);
    phi.push_back(std::exp(-(x - 1) * (x - 1)));
    psi.push_back(std::exp(-x * x) * std::complex<double>(0, 1));
  }
  std::complex<double> plainIp = freeParticleInnerProduct(grid, phi, psi, 0.0, 0.0);
  CHECK(plainIp.imag() == doctest::Approx(std::sqrt(M_PI / 2) * std::exp(-0.5)).epsilon(1e-9));
  CHECK(std::real(freeParticleInnerProduct(grid, phi, phi, 0.0, 1.5)) > 0);
  std::vector<double> skew = grid;
  skew.back() += 0.1;
  CHECK_THROWS_AS(freeParticleInnerProduct(skew, phi, psi, 0, 0), std::invalid_argument);
}
