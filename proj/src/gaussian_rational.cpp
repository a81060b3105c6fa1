#include "qhm/gaussian_rational.hpp"

#include <stdexcept>

namespace qhm {

GaussianRational GaussianRational::iPower(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {Rational(1), Rational(0)};
    case 1: return {Rational(0), Rational(1)};
    case 2: return {Rational(-1), Rational(0)};
    default: return {Rational(0), Rational(-1)};
  }
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (isReal() && o.isReal()) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.isZero()) throw std::domain_error("GaussianRational: division by zero");
  Rational norm = o.re_ * o.re_ + o.im_ * o.im_;
  Rational re = (re_ * o.re_ + im_ * o.im_) / norm;
  Rational im = (im_ * o.re_ - re_ * o.im_) / norm;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::string rationalString(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string GaussianRational::str() const {
  if (isReal()) return rationalString(re_);
  std::string imag = rationalString(abs(im_)) + "*i";
  if (sgn(re_) == 0) return (sgn(im_) < 0 ? "-" : "") + imag;
  return rationalString(re_) + (sgn(im_) < 0 ? "-" : "+") + imag;
}

Rational parseRational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  std::size_t slash = text.find('/');
  auto digits = [&](std::size_t from, std::size_t to) {
    if (from >= to) return false;
    for (std::size_t k = from; k < to; ++k)
      if (text[k] < '0' || text[k] > '9') return false;
    return true;
  };
  std::size_t numEnd = slash == std::string::npos ? text.size() : slash;
  if (!digits(start, numEnd) || (slash != std::string::npos && !digits(slash + 1, text.size())))
    throw std::invalid_argument("not a rational: '" + text + "'");
  Rational q;
  mpz_class num(text.substr(start, numEnd - start));
  mpz_class den = slash == std::string::npos ? mpz_class(1) : mpz_class(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  q = Rational(num, den);
  q.canonicalize();
  if (text[0] == '-') q = -q;
  return q;
}

Rational factorial(int n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(f);
}

Rational binomial(int n, int k) {
  if (k < 0 || k > n) return Rational(0);
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(c);
}

Rational fallingFactorial(int b, int k) {
  mpz_class r(1);
  for (int m = 0; m < k; ++m) r *= (b - m);
  return Rational(r);
}

}  // namespace qhm
