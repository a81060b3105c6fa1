#pragma once

#include <vector>

#include "qhm/operator_expr.hpp"

namespace qhm {

/// Truncated power series sum_{j=0}^{order} coeff[j] eps^j. Every operation
/// drops contributions beyond `order`.
class SeriesExpr {
 public:
  explicit SeriesExpr(int order = 0) : coeffs_(static_cast<std::size_t>(order) + 1) {}
  static SeriesExpr constant(const OperatorExpr& a, int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const OperatorExpr& operator[](int j) const { return coeffs_.at(static_cast<std::size_t>(j)); }
  OperatorExpr& operator[](int j) { return coeffs_.at(static_cast<std::size_t>(j)); }
  /// Lowest order with a nonzero coefficient, or order()+1 for the zero series.
  int valuation() const;

  SeriesExpr& operator+=(const SeriesExpr& o);
  SeriesExpr& operator-=(const SeriesExpr& o);
  SeriesExpr& operator*=(const GaussianRational& c);
  friend SeriesExpr operator+(SeriesExpr a, const SeriesExpr& b) { return a += b; }
  friend SeriesExpr operator-(SeriesExpr a, const SeriesExpr& b) { return a -= b; }
  friend SeriesExpr operator*(SeriesExpr a, const GaussianRational& c) { return a *= c; }
  friend SeriesExpr operator*(const SeriesExpr& a, const SeriesExpr& b);
  friend bool operator==(const SeriesExpr& a, const SeriesExpr& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::vector<OperatorExpr> coeffs_;
};

SeriesExpr commutator(const SeriesExpr& a, const SeriesExpr& b, int k = 1);

/// e^{-s Q} A e^{s Q} = A + sum_k s^k/k! [A,Q]_k for Q without an eps^0 term.
SeriesExpr conjugateByExponential(const SeriesExpr& a, const SeriesExpr& q, const GaussianRational& s);

}  // namespace qhm
