#include "qhm/param_poly.hpp"

#include <numeric>
#include <stdexcept>

namespace qhm {

Symbol Symbol::lambda(int j) {
  if (j < 1 || j > kMaxOrder) throw std::out_of_range("lambda index out of range");
  return Symbol(2 * (j - 1));
}

Symbol Symbol::kappa(int j) {
  if (j < 1 || j > kMaxOrder) throw std::out_of_range("kappa index out of range");
  return Symbol(2 * (j - 1) + 1);
}

Symbol Symbol::fromIndex(int index) {
  if (index < 0 || index >= kCount) throw std::out_of_range("symbol index out of range");
  return Symbol(index);
}

std::optional<Symbol> Symbol::fromName(const std::string& name) {
  if (name == "a") return alpha();
  if (name.size() < 2 || (name[0] != 'l' && name[0] != 'k')) return std::nullopt;
  int j = 0;
  for (std::size_t k = 1; k < name.size(); ++k) {
    if (name[k] < '0' || name[k] > '9') return std::nullopt;
    j = 10 * j + (name[k] - '0');
    if (j > kMaxOrder) return std::nullopt;
  }
  if (j < 1) return std::nullopt;
  return name[0] == 'l' ? lambda(j) : kappa(j);
}

std::string Symbol::name() const {
  if (index_ == 2 * kMaxOrder) return "a";
  return (index_ % 2 == 0 ? "l" : "k") + std::to_string(index_ / 2 + 1);
}

int totalDegree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

bool GradedLex::operator()(const Exponents& a, const Exponents& b) const {
  int da = totalDegree(a);
  int db = totalDegree(b);
  if (da != db) return da < db;
  return a > b;
}

ParamPoly::ParamPoly(GaussianRational c) {
  if (!c.isZero()) terms_.emplace(Exponents{}, std::move(c));
}

ParamPoly ParamPoly::symbol(Symbol s) {
  ParamPoly p;
  Exponents e{};
  e[s.index()] = 1;
  p.terms_.emplace(e, GaussianRational(1));
  return p;
}

bool ParamPoly::isConstant() const {
  return terms_.empty() || (terms_.size() == 1 && totalDegree(terms_.begin()->first) == 0);
}

GaussianRational ParamPoly::constant() const { return coefficient(Exponents{}); }

bool ParamPoly::isReal() const {
  for (const auto& [e, c] : terms_)
    if (!c.isReal()) return false;
  return true;
}

bool ParamPoly::isImaginary() const {
  for (const auto& [e, c] : terms_)
    if (!c.isImaginary()) return false;
  return true;
}

int ParamPoly::degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, totalDegree(e));
  return d;
}

GaussianRational ParamPoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? GaussianRational() : it->second;
}

void ParamPoly::addTerm(const Exponents& e, const GaussianRational& c) {
  if (c.isZero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.isZero()) terms_.erase(it);
  }
}

ParamPoly ParamPoly::conj() const {
  ParamPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, c.conj());
  return r;
}

ParamPoly ParamPoly::substitute(const std::map<int, ParamPoly>& values) const {
  ParamPoly result;
  for (const auto& [e, c] : terms_) {
    ParamPoly term(c);
    Exponents rest = e;
    for (const auto& [index, value] : values) {
      if (rest[index] == 0) continue;
      term = term * pow(value, rest[index]);
      rest[index] = 0;
    }
    ParamPoly mono;
    mono.terms_.emplace(rest, GaussianRational(1));
    result += term * mono;
  }
  return result;
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
  for (const auto& [e, c] : o.terms_) addTerm(e, c);
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) {
  for (const auto& [e, c] : o.terms_) addTerm(e, -c);
  return *this;
}

ParamPoly& ParamPoly::operator*=(const GaussianRational& c) {
  if (c.isZero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
  ParamPoly r;
  if (a.terms_.empty() || b.terms_.empty()) return r;
  if (a.isConstant()) return b * a.terms_.begin()->second;
  if (b.isConstant()) return a * b.terms_.begin()->second;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e{};
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = static_cast<std::uint8_t>(ea[k] + eb[k]);
      r.addTerm(e, ca * cb);
    }
  }
  return r;
}

ParamPoly ParamPoly::operator-() const {
  ParamPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

std::string ParamPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) out += " + ";
    first = false;
    std::string coeff = c.str();
    if (!c.isReal() && !c.isImaginary()) coeff = "(" + coeff + ")";
    out += coeff;
    for (int s = 0; s < Symbol::kCount; ++s) {
      if (e[s] == 0) continue;
      out += "*" + Symbol::fromIndex(s).name();
      if (e[s] > 1) out += "^" + std::to_string(e[s]);
    }
  }
  return out;
}

Exponents exponentsOf(std::initializer_list<std::pair<Symbol, int>> powers) {
  Exponents e{};
  for (const auto& [s, n] : powers) e[s.index()] = static_cast<std::uint8_t>(e[s.index()] + n);
  return e;
}

ParamPoly pow(const ParamPoly& base, int n) {
  ParamPoly r(1);
  for (int k = 0; k < n; ++k) r = r * base;
  return r;
}

}  // namespace qhm
