#include "qhm/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace qhm {

SeriesExpr SeriesExpr::constant(const OperatorExpr& a, int order) {
  SeriesExpr s(order);
  s[0] = a;
  return s;
}

int SeriesExpr::valuation() const {
  for (int j = 0; j <= order(); ++j)
    if (!(*this)[j].isZero()) return j;
  return order() + 1;
}

SeriesExpr& SeriesExpr::operator+=(const SeriesExpr& o) {
  int n = std::min(order(), o.order());
  coeffs_.resize(static_cast<std::size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) (*this)[j] += o[j];
  return *this;
}

SeriesExpr& SeriesExpr::operator-=(const SeriesExpr& o) {
  int n = std::min(order(), o.order());
  coeffs_.resize(static_cast<std::size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) (*this)[j] -= o[j];
  return *this;
}

SeriesExpr& SeriesExpr::operator*=(const GaussianRational& c) {
  for (auto& a : coeffs_) a *= ParamPoly(c);
  return *this;
}

SeriesExpr operator*(const SeriesExpr& a, const SeriesExpr& b) {
  int n = std::min(a.order(), b.order());
  SeriesExpr out(n);
  for (int i = 0; i <= n; ++i) {
    if (a[i].isZero()) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (b[j].isZero()) continue;
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

SeriesExpr commutator(const SeriesExpr& a, const SeriesExpr& b, int k) {
  if (k < 1) throw std::invalid_argument("commutator depth must be >= 1");
  SeriesExpr current = a;
  for (int n = 0; n < k; ++n) current = current * b - b * current;
  return current;
}

SeriesExpr conjugateByExponential(const SeriesExpr& a, const SeriesExpr& q, const GaussianRational& s) {
  if (!q[0].isZero()) throw std::invalid_argument("exponent series must start at order 1");
  int n = std::min(a.order(), q.order());
  SeriesExpr result = a;
  SeriesExpr nested = a;
  GaussianRational factor(1);
  for (int k = 1; k <= n; ++k) {
    nested = nested * q - q * nested;
    if (nested.valuation() > n) break;
    factor = factor * s / GaussianRational(k);
    result += nested * factor;
  }
  return result;
}

}  // namespace qhm
