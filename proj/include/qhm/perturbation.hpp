#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "qhm/operator_expr.hpp"
#include "qhm/series.hpp"

namespace qhm {

/// H = h0 + eps*h1 with h0 = p^2/2. `epsilonWeight` is the scaling weight of
/// eps under x -> x/l, p -> l p (5 for the cubic potential i x^3).
struct Model {
  OperatorExpr h0;
  OperatorExpr h1;
  int epsilonWeight = 5;

  static Model cubic() { return monomialPotential(3); }
  /// h1 = i x^n, weight n + 2.
  static Model monomialPotential(int n);
};

class EngineError : public std::runtime_error {
 public:
  EngineError(int order, const std::string& what)
      : std::runtime_error("order " + std::to_string(order) + ": " + what), order_(order) {}
  int order() const { return order_; }

 private:
  int order_;
};

/// Free parameters lambda_j, kappa_j (formal symbols or rational constants).
struct MetricParams {
  int order = 1;
  std::vector<ParamPoly> lambda;  // lambda[j-1]
  std::vector<ParamPoly> kappa;   // kappa[j-1]

  static MetricParams formal(int order);
  /// Throws std::invalid_argument when order < 1 or a parameter is not real.
  void validate() const;
};

struct OrderRecord {
  int j = 0;
  OperatorExpr r;            // right-hand side of [h0, Q_j] = R_j
  OperatorExpr particular;   // q - homogeneous
  OperatorExpr homogeneous;  // lambda_j p^-wj + i^wj kappa_j p^-wj P
  OperatorExpr q;            // particular + homogeneous
};

struct QSeries {
  SeriesExpr series;
  std::vector<OrderRecord> orders;
  const OperatorExpr& q(int j) const { return orders.at(static_cast<std::size_t>(j - 1)).q; }
  int order() const { return static_cast<int>(orders.size()); }
};

/// q_k = sum_{m=1}^k sum_{n=1}^m (-1)^n n^k C(m,n) / (k! 2^{m-1}).
Rational qCoefficient(int k);

/// Ordered k-tuples of positive integers summing to j, lexicographic.
std::vector<std::vector<int>> compositions(int j, int k);

/// R_1 = -2 h1; R_j = sum_{k>=2} q_k Z_kj. `priorQ` holds Q_1..Q_{j-1}.
OperatorExpr buildR(int j, std::span<const OperatorExpr> priorQ, const Model& model = Model::cubic());

/// Hermitian Q with [p^2/2, Q] = r for anti-Hermitian r.
OperatorExpr solveCommutatorEquation(const OperatorExpr& r);

/// lambda_j p^-wj + i^wj kappa_j p^-wj P.
OperatorExpr homogeneousPart(int j, const MetricParams& params, const Model& model = Model::cubic());

/// Drops the (Hermitian part of the) x-degree-0 terms of `particular` and adds the homogeneous part.
OperatorExpr canonicalQ(int j, const OperatorExpr& particular, const MetricParams& params,
                        const Model& model = Model::cubic());

QSeries deriveMetricSeries(const MetricParams& params, const Model& model = Model::cubic());

/// (1/32)(x^4 p^-1 + 4 x^3 p^-1 x + 6 x^2 p^-1 x^2 + 4 x p^-1 x^3 + p^-1 x^4) + alpha p^alphaPower.
OperatorExpr bbjForm(const ParamPoly& alpha, int alphaPower = -5);

struct BbjReport {
  ParamPoly lambdaTilde;    // p^-5 coefficient of the BBJ operator in symmetric form
  ParamPoly lambda1;        // value of lambda_1 that reproduces it
  bool equal = false;       // Q1(lambda_1, kappa_1 = 0) == BBJ
  OperatorExpr difference;  // BBJ - Q1 after substitution
};

/// `q1` is the first-order metric exponent with formal lambda_1, kappa_1.
BbjReport bbjCompare(const OperatorExpr& q1, const ParamPoly& alpha, int alphaPower = -5);

}  // namespace qhm
