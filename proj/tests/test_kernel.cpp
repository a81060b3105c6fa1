#include <doctest.h>

#include <random>

#include "qhm/kernel.hpp"
#include "qhm/momentum_rep.hpp"
#include "qhm/perturbation.hpp"
#include "qhm/verify.hpp"
#include "random_expr.hpp"

using namespace qhm;

namespace {

const GaussianRational I = GaussianRational::i();
BiPoly X() { return BiPoly::x(); }
BiPoly Y() { return BiPoly::y(); }

QSeries formal3() {
  static const QSeries q = deriveMetricSeries(MetricParams::formal(3));
  return q;
}

}  // namespace

TEST_CASE("elementary kernels") {
  CHECK(toKernel(OperatorExpr::p(-5)) == Kernel(pow(X() - Y(), 4) * BiPoly(GaussianRational::fraction(1, 48) * I),
                                                Basis::signMinus()));
  CHECK(toKernel(OperatorExpr::p(-1)) == Kernel(BiPoly(GaussianRational::fraction(1, 2) * I), Basis::signMinus()));
  CHECK(toKernel(OperatorExpr::x(3) * (GaussianRational(-2) * I)) ==
        Kernel(BiPoly::monomial(3, 0, ParamPoly(GaussianRational(-2) * I)), Basis::deltaMinus()));
  CHECK(toKernel(OperatorExpr::p()) == Kernel(BiPoly(-I), Basis::deltaMinus(1)));
  CHECK(toKernel(OperatorExpr::p(-2) * OperatorExpr::parity()) ==
        Kernel(BiPoly(GaussianRational::fraction(-1, 2)) * (X() + Y()), Basis::signPlus()));
}

TEST_CASE("delta terms are canonicalized onto the support") {
  // y delta'(x - y) = x delta'(x - y) + delta(x - y)
  Kernel lhs(Y(), Basis::deltaMinus(1));
  Kernel rhs = Kernel(X(), Basis::deltaMinus(1)) + Kernel(BiPoly(1), Basis::deltaMinus());
  CHECK(lhs == rhs);
  CHECK(Kernel(X() - Y(), Basis::deltaMinus()).isZero());
  CHECK(Kernel(X() + Y(), Basis::deltaPlus()).isZero());
  CHECK(Kernel(Y(), Basis::deltaPlus()) == Kernel(-X(), Basis::deltaPlus()));
}

TEST_CASE("property: kernel of the adjoint is the adjoint kernel") {
  std::mt19937 g(31);
  for (int n = 0; n < 50; ++n) {
    OperatorExpr a = qhm::testing::randomExpr(g, 3, 4, -6, -1);
    CHECK(toKernel(adjoint(a)) == toKernel(a).adjoint());
  }
}

TEST_CASE("property: kernels are linear over parameters") {
  std::mt19937 g(32);
  for (int n = 0; n < 30; ++n) {
    OperatorExpr a = qhm::testing::randomExpr(g, 3, 4, -6, -1), b = qhm::testing::randomExpr(g, 3, 4, -6, -1);
    ParamPoly c = qhm::testing::randomParamPoly(g);
    CHECK(toKernel(a * c + b) == toKernel(a) * c + toKernel(b));
    CHECK(applyWaveOperator(toKernel(a) * c + toKernel(b)) ==
          applyWaveOperator(toKernel(a)) * c + applyWaveOperator(toKernel(b)));
  }
}

TEST_CASE("homogeneous solutions are annihilated by the wave operator") {
  for (int n = 1; n <= 16; ++n) {
    CHECK(applyWaveOperator(toKernel(OperatorExpr::p(-n))).isZero());
    CHECK(applyWaveOperator(toKernel(OperatorExpr::p(-n) * OperatorExpr::parity())).isZero());
  }
}

TEST_CASE("wave round trip for Q1 and Q3") {
  QSeries q = formal3();
  for (int j : {1, 3}) {
    CAPTURE(j);
    CHECK(applyWaveOperator(toKernel(q.q(j))) == toKernel(q.orders[j - 1].r) * ParamPoly(2));
    CHECK(kernelHermitianCheck(toKernel(q.q(j))).ok);
  }
  CHECK(applyWaveOperator(toKernel(q.orders[0].particular)) ==
        Kernel(BiPoly::monomial(3, 0, ParamPoly(GaussianRational(-4) * I)), Basis::deltaMinus()));
}

TEST_CASE("printed-shape kernels rebuilt from recomputed coefficients") {
  QSeries q = formal3();
  const int comps[6][2] = {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {0, 2}, {2, 0}};
  for (const auto& [mu, nu] : comps) {
    Kernel t = toKernel(tComponent(q, mu, nu));
    std::map<int, Rational> b;
    for (const auto& [l, v] : recomputeB(t, mu, nu)) {
      REQUIRE(v.im() == 0);
      b[l] = v.re();
    }
    CHECK(printedTKernel(mu, nu, b) == t);
    CHECK(applyWaveOperator(t) == toKernel(sComponent(q, mu, nu)) * ParamPoly(2));
  }
  CHECK(toKernel(sComponent(q, 2, 0)) == printedSKernel(2, 0));
}

TEST_CASE("kappa_1-linear part of R3 against a momentum-space oracle") {
  // R3 = -(1/6) [[h1, Q1], Q1] with lambda_1 = 0 evaluated by composing the
  // momentum-space action of each factor; the kappa_1-odd part is S_01.
  QSeries q = formal3();
  OperatorExpr h1 = Model::cubic().h1;
  RationalFunction f(UPoly({GaussianRational(1), GaussianRational(2), GaussianRational(0), GaussianRational(1)}),
                     UPoly({GaussianRational(3), GaussianRational(0), GaussianRational(1)}));
  auto apply = [](const OperatorExpr& a, const RationalFunction& v) { return momentumRepApply(a, v); };
  auto r3 = [&](long kappa) {
    std::map<int, ParamPoly> v = {{Symbol::lambda(1).index(), ParamPoly()},
                                  {Symbol::kappa(1).index(), ParamPoly(kappa)}};
    OperatorExpr q1 = q.q(1).substitute(v);
    RationalFunction a = apply(h1, apply(q1, apply(q1, f)));
    RationalFunction b = apply(q1, apply(h1, apply(q1, f)));
    RationalFunction c = apply(q1, apply(q1, apply(h1, f)));
    return a + RationalFunction::laurent(0, GaussianRational(-2)) * b + c;
  };
  RationalFunction oddPart = (r3(1) + RationalFunction::laurent(0, GaussianRational(-1)) * r3(-1));
  RationalFunction oracle = RationalFunction::laurent(0, GaussianRational::fraction(-1, 12)) * oddPart;
  CHECK(apply(sComponent(q, 0, 1), f) == oracle);
}
