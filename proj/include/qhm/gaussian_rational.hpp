#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>

namespace qhm {

using Rational = mpq_class;

/// Exact complex rational re + im*i. Both parts are kept in lowest terms.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static GaussianRational i() { return {Rational(0), Rational(1)}; }
  static GaussianRational fraction(long num, long den) { return Rational(num, den); }
  /// i^k for any integer k.
  static GaussianRational iPower(int k);

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool isZero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool isReal() const { return sgn(im_) == 0; }
  bool isImaginary() const { return sgn(re_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  GaussianRational operator-() const { return {-re_, -im_}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// `a/b`, `a/b+c/d*i` or `c/d*i` (integers print without a denominator).
  std::string str() const;

 private:
  Rational re_{0};
  Rational im_{0};
};

std::string rationalString(const Rational& q);
/// Parses `n` or `n/d` (optionally signed). Throws std::invalid_argument.
Rational parseRational(const std::string& text);

Rational factorial(int n);
Rational binomial(int n, int k);
/// b (b-1) ... (b-k+1); valid for negative b.
Rational fallingFactorial(int b, int k);

}  // namespace qhm
