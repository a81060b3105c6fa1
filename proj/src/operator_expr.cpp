#include "qhm/operator_expr.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace qhm {

OperatorExpr::OperatorExpr(ParamPoly scalar) {
  if (!scalar.isZero()) terms_.emplace(Monomial{}, std::move(scalar));
}

OperatorExpr OperatorExpr::monomial(Monomial m, ParamPoly coeff) {
  if (m.xPow < 0) throw std::invalid_argument("negative x power");
  OperatorExpr e;
  if (!coeff.isZero()) e.terms_.emplace(m, std::move(coeff));
  return e;
}

ParamPoly OperatorExpr::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? ParamPoly() : it->second;
}

void OperatorExpr::addTerm(const Monomial& m, const ParamPoly& c) {
  if (c.isZero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.isZero()) terms_.erase(it);
  }
}

int OperatorExpr::maxXPow() const {
  int best = -1;
  for (const auto& [m, c] : terms_) best = std::max(best, m.xPow);
  return best;
}

OperatorExpr OperatorExpr::parameterCoefficient(const Exponents& e) const {
  OperatorExpr r;
  for (const auto& [m, c] : terms_) r.addTerm(m, ParamPoly(c.coefficient(e)));
  return r;
}

OperatorExpr OperatorExpr::substitute(const std::map<int, ParamPoly>& values) const {
  OperatorExpr r;
  for (const auto& [m, c] : terms_) r.addTerm(m, c.substitute(values));
  return r;
}

OperatorExpr& OperatorExpr::operator+=(const OperatorExpr& o) {
  for (const auto& [m, c] : o.terms_) addTerm(m, c);
  return *this;
}

OperatorExpr& OperatorExpr::operator-=(const OperatorExpr& o) {
  for (const auto& [m, c] : o.terms_) addTerm(m, -c);
  return *this;
}

OperatorExpr& OperatorExpr::operator*=(const ParamPoly& c) {
  if (c.isZero()) {
    terms_.clear();
    return *this;
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second = it->second * c;
    it = it->second.isZero() ? terms_.erase(it) : std::next(it);
  }
  return *this;
}

OperatorExpr OperatorExpr::operator-() const {
  OperatorExpr r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

namespace {

// (x^a p^b P^s)(x^c p^d P^t): move P^s right past x^c p^d, then reorder
// p^b x^c = sum_k C(c,k) (-i)^k b(b-1)..(b-k+1) x^{c-k} p^{b-k}.
void multiplyMonomials(const Monomial& l, const Monomial& r, const ParamPoly& coeff,
                       OperatorExpr& out) {
  GaussianRational sign(1);
  if (l.parity && ((r.xPow + r.pPow) % 2 != 0)) sign = GaussianRational(-1);
  bool parity = l.parity != r.parity;
  for (int k = 0; k <= r.xPow; ++k) {
    Rational f = binomial(r.xPow, k) * fallingFactorial(l.pPow, k);
    if (sgn(f) == 0) break;  // falling factorial vanishes for every larger k too
    GaussianRational scalar = sign * GaussianRational::iPower(-k) * GaussianRational(f);
    out.addTerm({l.xPow + r.xPow - k, l.pPow + r.pPow - k, parity}, coeff * scalar);
  }
}

}  // namespace

OperatorExpr operator*(const OperatorExpr& a, const OperatorExpr& b) {
  OperatorExpr out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) multiplyMonomials(ma, mb, ca * cb, out);
  }
  return out;
}

OperatorExpr multiply(const OperatorExpr& a, const OperatorExpr& b) { return a * b; }

OperatorExpr adjoint(const OperatorExpr& a) {
  OperatorExpr out;
  for (const auto& [m, c] : a.terms()) {
    // (c x^a p^b P)^+ = conj(c) P p^b x^a
    OperatorExpr reversed = OperatorExpr::p(m.pPow) * OperatorExpr::x(m.xPow);
    if (m.parity) reversed = OperatorExpr::parity() * reversed;
    out += reversed * c.conj();
  }
  return out;
}

OperatorExpr commutator(const OperatorExpr& a, const OperatorExpr& b, int k) {
  if (k < 1) throw std::invalid_argument("commutator depth must be >= 1");
  OperatorExpr current = a;
  for (int n = 0; n < k; ++n) {
    current = current * b - b * current;
    if (current.isZero()) break;
  }
  return current;
}

OperatorExpr anticommutator(const OperatorExpr& a, const OperatorExpr& b) { return a * b + b * a; }

OperatorExpr power(const OperatorExpr& a, int n) {
  OperatorExpr r(1);
  for (int k = 0; k < n; ++k) r = r * a;
  return r;
}

bool isHermitian(const OperatorExpr& a) { return adjoint(a) == a; }
bool isAntiHermitian(const OperatorExpr& a) { return adjoint(a) == -a; }

OperatorExpr anti(int xPow, int pPow, bool parity, const ParamPoly& coeff) {
  OperatorExpr s = anticommutator(OperatorExpr::x(xPow), OperatorExpr::p(pPow));
  if (parity) s = s * OperatorExpr::parity();
  return s * coeff;
}

namespace {

// Basis element b of the symmetric form satisfies b^+ = sigma * b with
// sigma = (-1)^{xPow + pPow} when P is present and +1 otherwise.
bool adjointFlipsSign(int xPow, int pPow, bool parity) {
  return parity && ((xPow + pPow) % 2 != 0);
}

ParamPoly hermitianPart(const ParamPoly& c, bool flips) {
  ParamPoly mirrored = flips ? -c.conj() : c.conj();
  ParamPoly h = c + mirrored;
  return h * GaussianRational::fraction(1, 2);
}

}  // namespace

ParamPoly SymmetricForm::coefficient(int xPow, int pPow, bool parity) const {
  for (const auto& t : terms)
    if (t.xPow == xPow && t.pPow == pPow && t.parity == parity) return t.coeff;
  return {};
}

OperatorExpr SymmetricForm::expand() const {
  OperatorExpr out = residual;
  for (const auto& t : terms) {
    if (t.anticommutator)
      out += anti(t.xPow, t.pPow, t.parity, t.coeff);
    else
      out += OperatorExpr::monomial({t.xPow, t.pPow, t.parity}, t.coeff);
  }
  return out;
}

SymmetricForm symmetricForm(const OperatorExpr& a) {
  SymmetricForm form;
  OperatorExpr rest = a;
  while (!rest.isZero()) {
    // Leading term: highest xPow; ties resolved by canonical order.
    const Monomial* lead = nullptr;
    for (const auto& [m, c] : rest.terms())
      if (lead == nullptr || m.xPow > lead->xPow) lead = &m;
    Monomial m = *lead;
    ParamPoly c = rest.coefficient(m);
    SymmetricTerm term{m.xPow, m.pPow, m.parity, false, {}};
    OperatorExpr basis;
    if (m.xPow == 0 || m.pPow == 0) {
      term.coeff = c;
      basis = OperatorExpr::monomial(m);
    } else {
      term.anticommutator = true;
      term.coeff = c * GaussianRational::fraction(1, 2);
      basis = anti(m.xPow, m.pPow, m.parity);
    }
    rest -= basis * term.coeff;
    ParamPoly h = hermitianPart(term.coeff, adjointFlipsSign(m.xPow, m.pPow, m.parity));
    ParamPoly ah = term.coeff - h;
    if (!ah.isZero()) form.residual += basis * ah;
    term.coeff = h;
    if (!h.isZero()) form.terms.push_back(std::move(term));
  }
  return form;
}

ScalingReport scalingDegree(const OperatorExpr& a) {
  std::set<int> degrees;
  for (const auto& [m, c] : a.terms()) degrees.insert(m.scalingDegree());
  return {std::vector<int>(degrees.begin(), degrees.end())};
}

}  // namespace qhm
