#pragma once

#include <cmath>
#include <complex>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qhm/operator_expr.hpp"

namespace qhm {

/// a + b P on the parity-graded space (P^2 = 1, eigenvalues a + b and a - b).
template <class T>
struct ParityLinear {
  T a{};
  T b{};

  static ParityLinear identity() { return {T(1), T(0)}; }
  friend ParityLinear operator+(const ParityLinear& l, const ParityLinear& r) { return {l.a + r.a, l.b + r.b}; }
  friend ParityLinear operator-(const ParityLinear& l, const ParityLinear& r) { return {l.a - r.a, l.b - r.b}; }
  friend ParityLinear operator*(const ParityLinear& l, const ParityLinear& r) {
    return {l.a * r.a + l.b * r.b, l.a * r.b + l.b * r.a};
  }
  friend bool operator==(const ParityLinear& l, const ParityLinear& r) { return l.a == r.a && l.b == r.b; }

  bool positive() const { return a > (b < T(0) ? T(-b) : b); }
  ParityLinear inverse() const {
    T det = a * a - b * b;
    if (det == T(0)) throw std::domain_error("ParityLinear: singular element");
    return {a / det, T(-b) / det};
  }
};

using ParityLinearD = ParityLinear<double>;
using ParityLinearQ = ParityLinear<Rational>;

/// sqrt(a + bP) = c + dP with c = (sqrt(a+b) + sqrt(a-b))/2, d = (sqrt(a+b) - sqrt(a-b))/2.
ParityLinearD sqrt(const ParityLinearD& v);
/// Exact square root when a + b and a - b are squares of rationals.
std::optional<ParityLinearQ> sqrtExact(const ParityLinearQ& v);

/// eta = e^{-lambda} (cosh kappa - sinh kappa P).
ParityLinearD freeParticleMetric(double lambda, double kappa);

/// Sum over n of A_n e^{n kappa P} with A_n in the operator algebra and kappa formal.
/// Uses f(P) x^a p^b = x^a p^b f((-1)^{a+b} P).
class ParityExpOperator {
 public:
  using Terms = std::map<int, OperatorExpr>;
  ParityExpOperator() = default;
  ParityExpOperator(OperatorExpr a, int n = 0);  // NOLINT(google-explicit-constructor)
  const Terms& terms() const { return terms_; }
  friend ParityExpOperator operator*(const ParityExpOperator& l, const ParityExpOperator& r);
  friend ParityExpOperator operator-(const ParityExpOperator& l, const ParityExpOperator& r);
  friend bool operator==(const ParityExpOperator& l, const ParityExpOperator& r) { return l.terms_ == r.terms_; }
  std::string str() const;

 private:
  void add(int n, const OperatorExpr& a);
  Terms terms_;
};

struct FreeParticleObservables {
  ParityExpOperator X, P;  // x e^{-kappa P}, p e^{-kappa P}
  bool ccr = false;        // [X, P] = i
  bool squares = false;    // X^2 = x^2, XP = xp, P^2 = p^2
};

FreeParticleObservables freeParticleObservables();

/// Trapezoid quadrature of the printed inner product
/// e^{-lambda/2} [cosh kappa <phi|psi> - sinh kappa <phi|psi(-x)>] on a grid symmetric about 0.
std::complex<double> freeParticleInnerProduct(const std::vector<double>& grid,
                                              const std::vector<std::complex<double>>& phi,
                                              const std::vector<std::complex<double>>& psi, double lambda,
                                              double kappa);

struct LocalizedState {
  double position[2];  // y, -y
  double weight[2];    // e^{lambda/2} cosh(kappa/2), e^{lambda/2} sinh(kappa/2)
  ParityLinearD overlap;  // eta^{-1/2} eta eta^{-1/2}, which should be the identity
};

LocalizedState localizedState(double y, double lambda, double kappa);

}  // namespace qhm
