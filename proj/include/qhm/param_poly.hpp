#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "qhm/gaussian_rational.hpp"

namespace qhm {

/// Formal real parameters of the metric: l1,k1,...,l7,k7 and the auxiliary `a`.
class Symbol {
 public:
  static constexpr int kMaxOrder = 7;
  static constexpr int kCount = 2 * kMaxOrder + 1;

  static Symbol lambda(int j);
  static Symbol kappa(int j);
  static Symbol alpha() { return Symbol(2 * kMaxOrder); }
  static Symbol fromIndex(int index);
  static std::optional<Symbol> fromName(const std::string& name);

  int index() const { return index_; }
  std::string name() const;

  friend bool operator==(Symbol a, Symbol b) { return a.index_ == b.index_; }

 private:
  explicit Symbol(int index) : index_(index) {}
  int index_;
};

using Exponents = std::array<std::uint8_t, Symbol::kCount>;

int totalDegree(const Exponents& e);

/// Graded lexicographic order: lower total degree first, then by exponent of
/// l1, k1, l2, ... with larger exponents first.
struct GradedLex {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Polynomial in the formal parameters with GaussianRational coefficients.
/// Zero coefficients are never stored.
class ParamPoly {
 public:
  using Terms = std::map<Exponents, GaussianRational, GradedLex>;

  ParamPoly() = default;
  ParamPoly(GaussianRational c);  // NOLINT(google-explicit-constructor)
  ParamPoly(long c) : ParamPoly(GaussianRational(c)) {}  // NOLINT
  static ParamPoly symbol(Symbol s);

  const Terms& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  bool isConstant() const;
  /// Constant coefficient (zero if absent).
  GaussianRational constant() const;
  /// All coefficients have zero imaginary part.
  bool isReal() const;
  bool isImaginary() const;
  int degree() const;

  /// Coefficient of a single parameter monomial (zero if absent).
  GaussianRational coefficient(const Exponents& e) const;
  void addTerm(const Exponents& e, const GaussianRational& c);

  /// Complex conjugate; parameters are real.
  ParamPoly conj() const;

  /// Substitutes rational values; symbols without a value stay formal.
  ParamPoly substitute(const std::map<int, ParamPoly>& values) const;

  ParamPoly& operator+=(const ParamPoly& o);
  ParamPoly& operator-=(const ParamPoly& o);
  ParamPoly& operator*=(const GaussianRational& c);
  friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
  friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
  friend ParamPoly operator*(ParamPoly a, const GaussianRational& c) { return a *= c; }
  friend ParamPoly operator*(const GaussianRational& c, ParamPoly a) { return a *= c; }
  ParamPoly operator-() const;
  friend bool operator==(const ParamPoly& a, const ParamPoly& b) { return a.terms_ == b.terms_; }

  std::string str() const;

 private:
  Terms terms_;
};

Exponents exponentsOf(std::initializer_list<std::pair<Symbol, int>> powers);
ParamPoly pow(const ParamPoly& base, int n);

}  // namespace qhm
