#pragma once

#include <stdexcept>
#include <vector>

#include "qhm/operator_expr.hpp"

namespace qhm {

/// Dense univariate polynomial in p over GaussianRational (index = power).
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<GaussianRational> coeffs);
  static UPoly monomial(int power, GaussianRational c = GaussianRational(1));

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool isZero() const { return c_.empty(); }
  const std::vector<GaussianRational>& coeffs() const { return c_; }
  const GaussianRational& lead() const { return c_.back(); }

  UPoly derivative() const;
  /// q(p) -> q(-p)
  UPoly reflected() const;
  GaussianRational operator()(const GaussianRational& p) const;

  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }
  UPoly scaled(const GaussianRational& s) const;
  /// Euclidean division; returns {quotient, remainder}.
  std::pair<UPoly, UPoly> divmod(const UPoly& d) const;
  UPoly monic() const;

 private:
  void trim();
  std::vector<GaussianRational> c_;
};

UPoly gcd(UPoly a, UPoly b);

class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// num/den in lowest terms with a monic denominator.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(UPoly::monomial(0)) {}
  RationalFunction(UPoly num, UPoly den);
  /// c * p^k for any integer k.
  static RationalFunction laurent(int k, GaussianRational c = GaussianRational(1));

  const UPoly& num() const { return num_; }
  const UPoly& den() const { return den_; }
  bool isZero() const { return num_.isZero(); }

  RationalFunction derivative() const;
  RationalFunction reflected() const;
  /// Throws PoleError at a root of the denominator.
  GaussianRational evaluate(const GaussianRational& p) const;

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  UPoly num_;
  UPoly den_;
};

/// Applies `a` in the momentum representation: x -> i d/dp, p -> multiplication,
/// P -> f(p) -> f(-p). The expression must have constant coefficients.
RationalFunction momentumRepApply(const OperatorExpr& a, const RationalFunction& f);

}  // namespace qhm
