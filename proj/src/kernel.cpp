#include "qhm/kernel.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace qhm {

BiPoly::BiPoly(ParamPoly c) {
  if (!c.isZero()) terms_.emplace(std::pair{0, 0}, std::move(c));
}

BiPoly BiPoly::monomial(int i, int j, ParamPoly c) {
  BiPoly out;
  out.addTerm(i, j, c);
  return out;
}

void BiPoly::addTerm(int i, int j, const ParamPoly& c) {
  if (c.isZero()) return;
  auto [it, inserted] = terms_.try_emplace({i, j}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.isZero()) terms_.erase(it);
  }
}

ParamPoly BiPoly::coefficient(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? ParamPoly() : it->second;
}

BiPoly BiPoly::dx() const {
  BiPoly out;
  for (const auto& [e, c] : terms_)
    if (e.first > 0) out.addTerm(e.first - 1, e.second, c * GaussianRational(e.first));
  return out;
}

BiPoly BiPoly::dy() const {
  BiPoly out;
  for (const auto& [e, c] : terms_)
    if (e.second > 0) out.addTerm(e.first, e.second - 1, c * GaussianRational(e.second));
  return out;
}

BiPoly BiPoly::swapped() const {
  BiPoly out;
  for (const auto& [e, c] : terms_) out.addTerm(e.second, e.first, c);
  return out;
}

BiPoly BiPoly::conj() const {
  BiPoly out;
  for (const auto& [e, c] : terms_) out.addTerm(e.first, e.second, c.conj());
  return out;
}

BiPoly BiPoly::reflectY() const {
  BiPoly out;
  for (const auto& [e, c] : terms_) out.addTerm(e.first, e.second, e.second % 2 == 0 ? c : -c);
  return out;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (const auto& [e, c] : o.terms_) addTerm(e.first, e.second, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  for (const auto& [e, c] : o.terms_) addTerm(e.first, e.second, -c);
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.addTerm(ea.first + eb.first, ea.second + eb.second, ca * cb);
  return out;
}

BiPoly BiPoly::operator-() const {
  BiPoly out;
  for (const auto& [e, c] : terms_) out.addTerm(e.first, e.second, -c);
  return out;
}

BiPoly pow(const BiPoly& base, int n) {
  BiPoly out(1);
  for (int i = 0; i < n; ++i) out = out * base;
  return out;
}

std::string BiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Descending total degree, then descending x power.
  std::vector<std::pair<std::pair<int, int>, const ParamPoly*>> items;
  for (const auto& [e, c] : terms_) items.push_back({e, &c});
  std::stable_sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
    int da = a.first.first + a.first.second, db = b.first.first + b.first.second;
    if (da != db) return da > db;
    return a.first.first > b.first.first;
  });
  for (const auto& [e, c] : items) {
    if (!first) os << " + ";
    first = false;
    os << '[' << c->str() << "]*x^" << e.first << "*y^" << e.second;
  }
  return os.str();
}

std::string Basis::str() const {
  switch (kind) {
    case BasisKind::SignMinus: return "sign(x-y)";
    case BasisKind::SignPlus: return "sign(x+y)";
    case BasisKind::DeltaMinus: return "delta^" + std::to_string(k) + "(x-y)";
    case BasisKind::DeltaPlus: return "delta^" + std::to_string(k) + "(x+y)";
  }
  return {};
}

Kernel::Kernel(BiPoly poly, Basis basis) { add(poly, basis); }

BiPoly Kernel::poly(Basis b) const {
  auto it = terms_.find(b);
  return it == terms_.end() ? BiPoly() : it->second;
}

void Kernel::add(const BiPoly& poly, Basis basis) {
  auto put = [this](Basis b, const BiPoly& f) {
    if (f.isZero()) return;
    auto [it, inserted] = terms_.try_emplace(b, f);
    if (!inserted) {
      it->second += f;
      if (it->second.isZero()) terms_.erase(it);
    }
  };
  if (!basis.isDelta()) {
    put(basis, poly);
    return;
  }
  // Rewrite y through the support variable u (y = x - u or y = u - x) and
  // reduce u^m delta^(k)(u) = (-1)^m k!/(k-m)! delta^(k-m)(u).
  bool minus = basis.kind == BasisKind::DeltaMinus;
  std::map<int, BiPoly> byPowerOfU;
  for (const auto& [e, c] : poly.terms()) {
    auto [i, j] = e;
    for (int m = 0; m <= j; ++m) {
      GaussianRational w(binomial(j, m));
      // minus: (x - u)^j -> C(j,m) x^{j-m} (-u)^m; plus: (u - x)^j -> C(j,m) u^m (-x)^{j-m}
      bool negative = minus ? (m % 2 == 1) : ((j - m) % 2 == 1);
      if (negative) w = -w;
      byPowerOfU[m].addTerm(i + j - m, 0, c * w);
    }
  }
  for (const auto& [m, g] : byPowerOfU) {
    if (m > basis.k || g.isZero()) continue;
    Rational factor = factorial(basis.k) / factorial(basis.k - m);
    if (m % 2 == 1) factor = -factor;
    put({basis.kind, basis.k - m}, g * BiPoly(GaussianRational(factor)));
  }
}

Kernel Kernel::dx() const {
  Kernel out;
  for (const auto& [b, f] : terms_) {
    out.add(f.dx(), b);
    switch (b.kind) {
      case BasisKind::SignMinus: out.add(f * BiPoly(2), Basis::deltaMinus()); break;
      case BasisKind::SignPlus: out.add(f * BiPoly(2), Basis::deltaPlus()); break;
      case BasisKind::DeltaMinus:
      case BasisKind::DeltaPlus: out.add(f, {b.kind, b.k + 1}); break;
    }
  }
  return out;
}

Kernel Kernel::dy() const {
  Kernel out;
  for (const auto& [b, f] : terms_) {
    out.add(f.dy(), b);
    switch (b.kind) {
      case BasisKind::SignMinus: out.add(f * BiPoly(-2), Basis::deltaMinus()); break;
      case BasisKind::SignPlus: out.add(f * BiPoly(2), Basis::deltaPlus()); break;
      case BasisKind::DeltaMinus: out.add(-f, {b.kind, b.k + 1}); break;
      case BasisKind::DeltaPlus: out.add(f, {b.kind, b.k + 1}); break;
    }
  }
  return out;
}

Kernel Kernel::adjoint() const {
  Kernel out;
  for (const auto& [b, f] : terms_) {
    BiPoly g = f.swapped().conj();
    // sign(y-x) = -sign(x-y), delta^(k)(y-x) = (-1)^k delta^(k)(x-y)
    bool flip = (b.kind == BasisKind::SignMinus) || (b.kind == BasisKind::DeltaMinus && b.k % 2 == 1);
    out.add(flip ? -g : g, b);
  }
  return out;
}

Kernel Kernel::parameterCoefficient(const Exponents& e) const {
  Kernel out;
  for (const auto& [b, f] : terms_) {
    BiPoly g;
    for (const auto& [ij, c] : f.terms()) g.addTerm(ij.first, ij.second, ParamPoly(c.coefficient(e)));
    out.add(g, b);
  }
  return out;
}

Kernel& Kernel::operator+=(const Kernel& o) {
  for (const auto& [b, f] : o.terms_) add(f, b);
  return *this;
}

Kernel& Kernel::operator-=(const Kernel& o) {
  for (const auto& [b, f] : o.terms_) add(-f, b);
  return *this;
}

Kernel& Kernel::operator*=(const ParamPoly& c) {
  Kernel out;
  for (const auto& [b, f] : terms_) out.add(f * BiPoly(c), b);
  *this = std::move(out);
  return *this;
}

std::string Kernel::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [b, f] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << '(' << f.str() << ") * " << b.str();
  }
  return os.str();
}

Kernel toKernel(const OperatorExpr& a) {
  Kernel out;
  for (const auto& [m, c] : a.terms()) {
    BiPoly poly;
    Basis basis;
    if (m.pPow < 0) {
      int n = -m.pPow;
      GaussianRational w = GaussianRational::iPower(n) / GaussianRational(Rational(2) * factorial(n - 1));
      poly = pow(BiPoly::x() - BiPoly::y(), n - 1) * BiPoly(w);
      basis = Basis::signMinus();
    } else {
      poly = BiPoly(GaussianRational::iPower(-m.pPow));
      basis = Basis::deltaMinus(m.pPow);
    }
    if (m.parity) {
      poly = poly.reflectY();
      basis.kind = basis.kind == BasisKind::SignMinus ? BasisKind::SignPlus : BasisKind::DeltaPlus;
    }
    poly = BiPoly::monomial(m.xPow, 0, c) * poly;
    out += Kernel(poly, basis);
  }
  return out;
}

Kernel applyWaveOperator(const Kernel& k) {
  Kernel out = k.dy().dy();
  out -= k.dx().dx();
  return out;
}

KernelCheck kernelHermitianCheck(const Kernel& k) {
  KernelCheck r;
  r.residual = k - k.adjoint();
  r.ok = r.residual.isZero();
  return r;
}

KernelCheck compareKernels(const Kernel& a, const Kernel& b) {
  KernelCheck r;
  r.residual = a - b;
  r.ok = r.residual.isZero();
  return r;
}

}  // namespace qhm
