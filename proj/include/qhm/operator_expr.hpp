#pragma once

#include <map>
#include <string>
#include <vector>

#include "qhm/param_poly.hpp"

namespace qhm {

/// x^xPow p^pPow, optionally followed by the parity operator P.
struct Monomial {
  int xPow = 0;
  int pPow = 0;
  bool parity = false;

  /// pPow - xPow: the exponent picked up under x -> x/l, p -> l p.
  int scalingDegree() const { return pPow - xPow; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Canonical term order: unpartnered terms first, then descending xPow, then descending pPow.
struct CanonicalOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.parity != b.parity) return !a.parity;
    if (a.xPow != b.xPow) return a.xPow > b.xPow;
    return a.pPow > b.pPow;
  }
};

/// Element of the algebra generated by x, p^{+-1} and P over ParamPoly, kept
/// in normal order (x's left of p's, P rightmost). Two expressions are equal
/// iff their term maps are identical.
class OperatorExpr {
 public:
  using Terms = std::map<Monomial, ParamPoly, CanonicalOrder>;

  OperatorExpr() = default;
  OperatorExpr(ParamPoly scalar);  // NOLINT(google-explicit-constructor)
  OperatorExpr(long scalar) : OperatorExpr(ParamPoly(scalar)) {}  // NOLINT
  OperatorExpr(GaussianRational scalar) : OperatorExpr(ParamPoly(std::move(scalar))) {}  // NOLINT
  static OperatorExpr monomial(Monomial m, ParamPoly coeff = ParamPoly(1));
  static OperatorExpr x(int power = 1) { return monomial({power, 0, false}); }
  static OperatorExpr p(int power = 1) { return monomial({0, power, false}); }
  static OperatorExpr parity() { return monomial({0, 0, true}); }

  const Terms& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  ParamPoly coefficient(const Monomial& m) const;
  void addTerm(const Monomial& m, const ParamPoly& c);

  /// Largest xPow present (-1 for zero).
  int maxXPow() const;
  /// Keeps only the coefficient of one parameter monomial, as a constant.
  OperatorExpr parameterCoefficient(const Exponents& e) const;
  OperatorExpr substitute(const std::map<int, ParamPoly>& values) const;

  OperatorExpr& operator+=(const OperatorExpr& o);
  OperatorExpr& operator-=(const OperatorExpr& o);
  OperatorExpr& operator*=(const ParamPoly& c);
  friend OperatorExpr operator+(OperatorExpr a, const OperatorExpr& b) { return a += b; }
  friend OperatorExpr operator-(OperatorExpr a, const OperatorExpr& b) { return a -= b; }
  friend OperatorExpr operator*(OperatorExpr a, const ParamPoly& c) { return a *= c; }
  friend OperatorExpr operator*(const ParamPoly& c, OperatorExpr a) { return a *= c; }
  friend OperatorExpr operator*(const GaussianRational& c, OperatorExpr a) { return a *= ParamPoly(c); }
  friend OperatorExpr operator*(OperatorExpr a, const GaussianRational& c) { return a *= ParamPoly(c); }
  friend OperatorExpr operator*(const OperatorExpr& a, const OperatorExpr& b);
  OperatorExpr operator-() const;
  friend bool operator==(const OperatorExpr& a, const OperatorExpr& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

OperatorExpr multiply(const OperatorExpr& a, const OperatorExpr& b);
OperatorExpr adjoint(const OperatorExpr& a);
/// k-fold nested commutator [[..[a,b],b],..,b]; k >= 1.
OperatorExpr commutator(const OperatorExpr& a, const OperatorExpr& b, int k = 1);
OperatorExpr anticommutator(const OperatorExpr& a, const OperatorExpr& b);
OperatorExpr power(const OperatorExpr& a, int n);

bool isHermitian(const OperatorExpr& a);
bool isAntiHermitian(const OperatorExpr& a);

/// One item of the manifestly Hermitian form. `anticommutator` terms stand for
/// coeff * {x^xPow, p^pPow} (P); the others are a bare coeff * x^xPow p^pPow (P)
/// with xPow == 0 or pPow == 0.
struct SymmetricTerm {
  int xPow = 0;
  int pPow = 0;
  bool parity = false;
  bool anticommutator = false;
  ParamPoly coeff;
};

struct SymmetricForm {
  std::vector<SymmetricTerm> terms;
  /// Part that cannot be written with Hermitian coefficients; zero iff the input is Hermitian.
  OperatorExpr residual;
  bool hermitian() const { return residual.isZero(); }

  /// Coefficient of a given item (zero if absent).
  ParamPoly coefficient(int xPow, int pPow, bool parity) const;
  /// Re-expands the terms (plus residual) through the algebra.
  OperatorExpr expand() const;
};

SymmetricForm symmetricForm(const OperatorExpr& a);

struct ScalingReport {
  std::vector<int> degrees;  // distinct degrees, ascending
  bool homogeneous() const { return degrees.size() <= 1; }
  bool homogeneousOfDegree(int d) const { return degrees.empty() || (degrees.size() == 1 && degrees[0] == d); }
};

ScalingReport scalingDegree(const OperatorExpr& a);

/// coeff * {x^a, p^b} (P).
OperatorExpr anti(int xPow, int pPow, bool parity = false, const ParamPoly& coeff = ParamPoly(1));

}  // namespace qhm
