#include <doctest.h>

#include <random>

#include "qhm/momentum_rep.hpp"
#include "qhm/operator_expr.hpp"
#include "qhm/serialize.hpp"
#include "random_expr.hpp"

using namespace qhm;
using qhm::testing::randomExpr;

namespace {

const GaussianRational I = GaussianRational::i();

// (1 + p + 3 p^2) / (p^2 + 2): no poles at small integers, nonzero derivatives.
RationalFunction testFunction(std::mt19937& g) {
  std::uniform_int_distribution<int> c(-4, 4), s(1, 3);
  UPoly num({GaussianRational(c(g)), GaussianRational(c(g)), GaussianRational(s(g))});
  UPoly den({GaussianRational(s(g) + 1), GaussianRational(0), GaussianRational(1)});
  return RationalFunction(num, den);
}

OperatorExpr reflect(const OperatorExpr& a) {
  OperatorExpr out;
  for (const auto& [m, c] : a.terms()) out.addTerm(m, (m.xPow + m.pPow) % 2 == 0 ? c : ParamPoly() - c);
  return out;
}

}  // namespace

TEST_CASE("gaussian rationals") {
  GaussianRational a(Rational(1, 2), Rational(-3, 4));
  CHECK(a * a.conj() == GaussianRational(Rational(13, 16)));
  CHECK(I * I == GaussianRational(-1));
  CHECK(GaussianRational::iPower(-1) == -I);
  CHECK(GaussianRational::iPower(6) == GaussianRational(-1));
  CHECK((a / a) == GaussianRational(1));
  CHECK(GaussianRational::fraction(6, 8).str() == "3/4");
  CHECK_THROWS(GaussianRational(1) / GaussianRational());
}

TEST_CASE("param polynomials") {
  ParamPoly l1 = ParamPoly::symbol(Symbol::lambda(1)), k1 = ParamPoly::symbol(Symbol::kappa(1));
  ParamPoly f = (l1 + k1) * (l1 - k1);
  CHECK(f == l1 * l1 - k1 * k1);
  CHECK(f.coefficient(exponentsOf({{Symbol::lambda(1), 2}})) == GaussianRational(1));
  CHECK(!f.isConstant());
  CHECK(ParamPoly(GaussianRational(I)).isConstant());
  CHECK(!ParamPoly(GaussianRational(I)).isReal());
  CHECK(parseParamPoly(f.str()) == f);
  CHECK((l1 - l1).isZero());
}

TEST_CASE("CCR and elementary products") {
  OperatorExpr x = OperatorExpr::x(), p = OperatorExpr::p();
  CHECK(x * p - p * x == OperatorExpr(I));
  CHECK(commutator(x, OperatorExpr::p(-1)) == OperatorExpr::p(-2) * (-I));
  CHECK(OperatorExpr::p(-1) * OperatorExpr::p(1) == OperatorExpr(1));
  CHECK(p * x == x * p - OperatorExpr(I));
  OperatorExpr P = OperatorExpr::parity();
  CHECK(P * P == OperatorExpr(1));
  CHECK(P * x == -(x * P));
  CHECK(P * p == -(p * P));
}

TEST_CASE("momentum representation examples") {
  RationalFunction p2 = RationalFunction::laurent(2);
  CHECK(momentumRepApply(OperatorExpr::x(), p2) == RationalFunction::laurent(1, GaussianRational(2) * I));
  CHECK(momentumRepApply(OperatorExpr::p(-5), RationalFunction::laurent(0)) == RationalFunction::laurent(-5));
  CHECK(momentumRepApply(OperatorExpr::parity(), RationalFunction::laurent(3)) ==
        RationalFunction::laurent(3, GaussianRational(-1)));
  CHECK_THROWS_AS(RationalFunction::laurent(-1).evaluate(GaussianRational(0)), PoleError);
}

TEST_CASE("property: multiplication is associative") {
  std::mt19937 g(11);
  for (int n = 0; n < 60; ++n) {
    OperatorExpr a = randomExpr(g, 3, 6, -6, 6), b = randomExpr(g, 3, 6, -6, 6), c = randomExpr(g, 3, 6, -6, 6);
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("property: adjoint is an involutive anti-homomorphism") {
  std::mt19937 g(12);
  for (int n = 0; n < 60; ++n) {
    OperatorExpr a = randomExpr(g), b = randomExpr(g);
    CHECK(adjoint(a * b) == adjoint(b) * adjoint(a));
    CHECK(adjoint(adjoint(a)) == a);
    OperatorExpr h = a + adjoint(a);
    CHECK(isHermitian(h));
    CHECK(isAntiHermitian(a - adjoint(a)));
  }
}

TEST_CASE("property: multiply and commutator agree with the momentum representation") {
  std::mt19937 g(13);
  for (int n = 0; n < 100; ++n) {
    OperatorExpr a = randomExpr(g), b = randomExpr(g);
    RationalFunction f = testFunction(g);
    CHECK(momentumRepApply(a * b, f) == momentumRepApply(a, momentumRepApply(b, f)));
    RationalFunction ab = momentumRepApply(a, momentumRepApply(b, f));
    RationalFunction ba = momentumRepApply(b, momentumRepApply(a, f));
    CHECK(momentumRepApply(commutator(a, b), f) == ab + RationalFunction::laurent(0, GaussianRational(-1)) * ba);
  }
}

TEST_CASE("property: normal form does not depend on how a product is grouped") {
  std::mt19937 g(14);
  for (int n = 0; n < 30; ++n) {
    std::vector<OperatorExpr> f = {OperatorExpr::x(), OperatorExpr::p(-2), OperatorExpr::parity(), OperatorExpr::x(2),
                                   OperatorExpr::p(3)};
    std::shuffle(f.begin(), f.end(), g);
    OperatorExpr left = f[0];
    for (std::size_t i = 1; i < f.size(); ++i) left = left * f[i];
    OperatorExpr right = f.back();
    for (std::size_t i = f.size() - 1; i-- > 0;) right = f[i] * right;
    CHECK(left == right);
  }
}

TEST_CASE("property: parity conjugation reflects x and p") {
  std::mt19937 g(15);
  OperatorExpr P = OperatorExpr::parity();
  for (int n = 0; n < 60; ++n) {
    OperatorExpr a = randomExpr(g);
    CHECK(P * a * P == reflect(a));
  }
}

TEST_CASE("property: serialization round trip") {
  std::mt19937 g(16);
  for (int n = 0; n < 60; ++n) {
    OperatorExpr a = randomExpr(g);
    a = a * qhm::testing::randomParamPoly(g);
    CHECK(parseOperatorExpr(toText(a)) == a);
  }
  CHECK(parseOperatorExpr("0").isZero());
  CHECK_THROWS_AS(parseOperatorExpr("[1]*x^"), ParseError);
}

TEST_CASE("symmetric form and scaling degree") {
  OperatorExpr a = anti(4, -1);
  CHECK(scalingDegree(a).homogeneousOfDegree(-5));
  CHECK(scalingDegree(OperatorExpr::x() + OperatorExpr::p()).degrees == std::vector<int>{-1, 1});
  SymmetricForm f = symmetricForm(a * GaussianRational::fraction(1, 4) + OperatorExpr::p(-5) * ParamPoly(3));
  CHECK(f.hermitian());
  CHECK(f.coefficient(4, -1, false) == ParamPoly(GaussianRational::fraction(1, 4)));
  CHECK(f.coefficient(0, -5, false) == ParamPoly(3));
  CHECK(f.expand() == a * GaussianRational::fraction(1, 4) + OperatorExpr::p(-5) * ParamPoly(3));
  CHECK(!symmetricForm(OperatorExpr::x(3) * I).hermitian());
  std::mt19937 g(17);
  for (int n = 0; n < 40; ++n) {
    OperatorExpr r = randomExpr(g);
    OperatorExpr h = r + adjoint(r);
    SymmetricForm s = symmetricForm(h);
    CHECK(s.hermitian());
    CHECK(s.expand() == h);
  }
}
