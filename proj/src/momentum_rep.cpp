#include "qhm/momentum_rep.hpp"

#include <map>

#include <utility>

namespace qhm {

UPoly::UPoly(std::vector<GaussianRational> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::monomial(int power, GaussianRational c) {
  std::vector<GaussianRational> v(static_cast<std::size_t>(power) + 1);
  v.back() = std::move(c);
  return UPoly(std::move(v));
}

void UPoly::trim() {
  while (!c_.empty() && c_.back().isZero()) c_.pop_back();
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<GaussianRational> v(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) v[k - 1] = c_[k] * GaussianRational(static_cast<long>(k));
  return UPoly(std::move(v));
}

UPoly UPoly::reflected() const {
  UPoly r = *this;
  for (std::size_t k = 1; k < r.c_.size(); k += 2) r.c_[k] = -r.c_[k];
  return r;
}

GaussianRational UPoly::operator()(const GaussianRational& p) const {
  GaussianRational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * p + *it;
  return acc;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<GaussianRational> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t k = 0; k < a.c_.size(); ++k) v[k] += a.c_[k];
  for (std::size_t k = 0; k < b.c_.size(); ++k) v[k] += b.c_[k];
  return UPoly(std::move(v));
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + b.scaled(GaussianRational(-1)); }

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.isZero() || b.isZero()) return {};
  std::vector<GaussianRational> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].isZero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return UPoly(std::move(v));
}

UPoly UPoly::scaled(const GaussianRational& s) const {
  UPoly r = *this;
  for (auto& c : r.c_) c *= s;
  r.trim();
  return r;
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& d) const {
  if (d.isZero()) throw std::domain_error("polynomial division by zero");
  UPoly rem = *this;
  std::vector<GaussianRational> q(c_.size() >= d.c_.size() ? c_.size() - d.c_.size() + 1 : 0);
  while (!rem.isZero() && rem.degree() >= d.degree()) {
    int shift = rem.degree() - d.degree();
    GaussianRational f = rem.lead() / d.lead();
    q[static_cast<std::size_t>(shift)] = f;
    rem = rem - UPoly::monomial(shift, f) * d;
  }
  return {UPoly(std::move(q)), rem};
}

UPoly UPoly::monic() const {
  if (isZero()) return *this;
  return scaled(GaussianRational(1) / lead());
}

UPoly gcd(UPoly a, UPoly b) {
  // Monic remainders keep coefficient growth in check.
  a = a.monic();
  b = b.monic();
  while (!b.isZero()) {
    UPoly r = a.divmod(b).second.monic();
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

RationalFunction::RationalFunction(UPoly num, UPoly den) {
  if (den.isZero()) throw std::domain_error("zero denominator");
  if (num.isZero()) {
    den_ = UPoly::monomial(0);
    return;
  }
  UPoly g = gcd(num, den);
  num = num.divmod(g).first;
  den = den.divmod(g).first;
  GaussianRational norm = GaussianRational(1) / den.lead();
  num_ = num.scaled(norm);
  den_ = den.scaled(norm);
}

RationalFunction RationalFunction::laurent(int k, GaussianRational c) {
  if (k >= 0) return {UPoly::monomial(k, std::move(c)), UPoly::monomial(0)};
  return {UPoly::monomial(0, std::move(c)), UPoly::monomial(-k)};
}

RationalFunction RationalFunction::derivative() const {
  if (den_.degree() == 0) return {num_.derivative(), den_};
  // With g = gcd(d, d'), d = g e and d' = g f: (n/d)' = (n' e - n f) / (d e).
  UPoly dd = den_.derivative();
  UPoly g = gcd(den_, dd);
  UPoly e = den_.divmod(g).first, f = dd.divmod(g).first;
  return {num_.derivative() * e - num_ * f, den_ * e};
}

RationalFunction RationalFunction::reflected() const { return {num_.reflected(), den_.reflected()}; }

GaussianRational RationalFunction::evaluate(const GaussianRational& p) const {
  GaussianRational d = den_(p);
  if (d.isZero()) throw PoleError("pole at p = " + p.str());
  return num_(p) / d;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.isZero()) return b;
  if (b.isZero()) return a;
  if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
  UPoly g = gcd(a.den_, b.den_);
  UPoly ea = a.den_.divmod(g).first, eb = b.den_.divmod(g).first;
  return {a.num_ * eb + b.num_ * ea, a.den_ * eb};
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_.degree() == 0 && a.num_.degree() == 0) {
    RationalFunction out = b;
    out.num_ = b.num_.scaled(a.num_.lead() / a.den_.lead());
    if (out.num_.isZero()) out.den_ = UPoly::monomial(0);
    return out;
  }
  return {a.num_ * b.num_, a.den_ * b.den_};
}

RationalFunction momentumRepApply(const OperatorExpr& a, const RationalFunction& f) {
  RationalFunction out;
  // (i d/dp)^k (p^b f(+-p)), built incrementally per (parity, b).
  std::map<std::pair<bool, int>, std::vector<RationalFunction>> cache;
  for (const auto& [m, c] : a.terms()) {
    if (!c.isConstant()) throw std::invalid_argument("momentumRepApply needs numeric parameters");
    auto& chain = cache[{m.parity, m.pPow}];
    if (chain.empty()) chain.push_back(RationalFunction::laurent(m.pPow) * (m.parity ? f.reflected() : f));
    while (static_cast<int>(chain.size()) <= m.xPow)
      chain.push_back(RationalFunction::laurent(0, GaussianRational::i()) * chain.back().derivative());
    out = out + RationalFunction::laurent(0, c.constant()) * chain[static_cast<std::size_t>(m.xPow)];
  }
  return out;
}

}  // namespace qhm
