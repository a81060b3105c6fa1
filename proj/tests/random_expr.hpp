#pragma once

#include <random>

#include "qhm/operator_expr.hpp"

namespace qhm::testing {

inline GaussianRational randomCoeff(std::mt19937& g) {
  std::uniform_int_distribution<int> n(-9, 9), d(1, 6);
  return {Rational(n(g), d(g)), Rational(n(g), d(g))};
}

/// Sum of up to `terms` monomials with xPow in [0, maxX], pPow in [minP, maxP].
inline OperatorExpr randomExpr(std::mt19937& g, int terms = 3, int maxX = 3, int minP = -3, int maxP = 3,
                               bool parity = true) {
  std::uniform_int_distribution<int> xs(0, maxX), ps(minP, maxP), coin(0, 1), count(1, terms);
  OperatorExpr out;
  int n = count(g);
  for (int i = 0; i < n; ++i)
    out.addTerm({xs(g), ps(g), parity && coin(g) == 1}, ParamPoly(randomCoeff(g)));
  return out;
}

inline ParamPoly randomParamPoly(std::mt19937& g) {
  std::uniform_int_distribution<int> sym(0, 5), deg(0, 2), count(1, 3);
  ParamPoly out;
  int n = count(g);
  for (int i = 0; i < n; ++i) {
    ParamPoly t(randomCoeff(g));
    for (int k = deg(g); k > 0; --k) {
      int s = sym(g);
      t = t * ParamPoly::symbol(s % 2 == 0 ? Symbol::lambda(s / 2 + 1) : Symbol::kappa(s / 2 + 1));
    }
    out += t;
  }
  return out;
}

}  // namespace qhm::testing
