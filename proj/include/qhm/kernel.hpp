#pragma once

#include <map>
#include <string>
#include <utility>

#include "qhm/operator_expr.hpp"

namespace qhm {

/// Polynomial in x, y over ParamPoly.
class BiPoly {
 public:
  using Terms = std::map<std::pair<int, int>, ParamPoly>;  // (i, j) -> coeff of x^i y^j

  BiPoly() = default;
  BiPoly(ParamPoly c);                                  // NOLINT(google-explicit-constructor)
  BiPoly(long c) : BiPoly(ParamPoly(c)) {}              // NOLINT
  BiPoly(GaussianRational c) : BiPoly(ParamPoly(std::move(c))) {}  // NOLINT
  static BiPoly monomial(int i, int j, ParamPoly c = ParamPoly(1));
  static BiPoly x() { return monomial(1, 0); }
  static BiPoly y() { return monomial(0, 1); }

  const Terms& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  void addTerm(int i, int j, const ParamPoly& c);
  ParamPoly coefficient(int i, int j) const;

  BiPoly dx() const;
  BiPoly dy() const;
  BiPoly swapped() const;  // f(y, x)
  BiPoly conj() const;
  /// f(x, -y).
  BiPoly reflectY() const;

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  BiPoly operator-() const;
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }

  std::string str() const;

 private:
  Terms terms_;
};

BiPoly pow(const BiPoly& base, int n);

enum class BasisKind { SignMinus, SignPlus, DeltaMinus, DeltaPlus };

/// sign(x-y), sign(x+y), delta^(k)(x-y), delta^(k)(x+y).
struct Basis {
  BasisKind kind = BasisKind::SignMinus;
  int k = 0;  // derivative order, delta kinds only

  static Basis signMinus() { return {BasisKind::SignMinus, 0}; }
  static Basis signPlus() { return {BasisKind::SignPlus, 0}; }
  static Basis deltaMinus(int k = 0) { return {BasisKind::DeltaMinus, k}; }
  static Basis deltaPlus(int k = 0) { return {BasisKind::DeltaPlus, k}; }
  bool isDelta() const { return kind == BasisKind::DeltaMinus || kind == BasisKind::DeltaPlus; }
  friend auto operator<=>(const Basis&, const Basis&) = default;
  std::string str() const;
};

/// Sum of poly(x, y) * basis. Canonical: delta terms carry polynomials in x only.
class Kernel {
 public:
  using Terms = std::map<Basis, BiPoly>;

  Kernel() = default;
  Kernel(BiPoly poly, Basis basis);

  const Terms& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  BiPoly poly(Basis b) const;

  /// Distributional partial derivatives.
  Kernel dx() const;
  Kernel dy() const;
  /// conj(K(y, x)).
  Kernel adjoint() const;
  Kernel parameterCoefficient(const Exponents& e) const;

  Kernel& operator+=(const Kernel& o);
  Kernel& operator-=(const Kernel& o);
  Kernel& operator*=(const ParamPoly& c);
  friend Kernel operator+(Kernel a, const Kernel& b) { return a += b; }
  friend Kernel operator-(Kernel a, const Kernel& b) { return a -= b; }
  friend Kernel operator*(Kernel a, const ParamPoly& c) { return a *= c; }
  friend Kernel operator*(const ParamPoly& c, Kernel a) { return a *= c; }
  friend bool operator==(const Kernel& a, const Kernel& b) { return a.terms_ == b.terms_; }

  std::string str() const;

 private:
  void add(const BiPoly& poly, Basis basis);
  Terms terms_;
};

/// <x|A|y>: p^-n -> i^n/(2(n-1)!) (x-y)^{n-1} sign(x-y), p^b -> (-i)^b delta^(b)(x-y), P: y -> -y.
Kernel toKernel(const OperatorExpr& a);

/// (-d_x^2 + d_y^2) K.
Kernel applyWaveOperator(const Kernel& k);

struct KernelCheck {
  bool ok = false;
  Kernel residual;
};

/// K(x,y) == conj(K(y,x)); residual is K - K^dagger.
KernelCheck kernelHermitianCheck(const Kernel& k);
/// Residual is a - b.
KernelCheck compareKernels(const Kernel& a, const Kernel& b);

}  // namespace qhm
