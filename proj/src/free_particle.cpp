#include "qhm/free_particle.hpp"

#include <sstream>

#include "qhm/serialize.hpp"

namespace qhm {

ParityLinearD sqrt(const ParityLinearD& v) {
  if (!v.positive()) throw std::domain_error("sqrt needs a positive element");
  double sp = std::sqrt(v.a + v.b), sm = std::sqrt(v.a - v.b);
  return {(sp + sm) / 2, (sp - sm) / 2};
}

namespace {

std::optional<Rational> rationalSqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  mpz_class n = q.get_num(), d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  Rational r(rn, rd);
  r.canonicalize();
  return r;
}

}  // namespace

std::optional<ParityLinearQ> sqrtExact(const ParityLinearQ& v) {
  if (!v.positive()) return std::nullopt;
  auto sp = rationalSqrt(v.a + v.b), sm = rationalSqrt(v.a - v.b);
  if (!sp || !sm) return std::nullopt;
  Rational c = (*sp + *sm) / 2, d = (*sp - *sm) / 2;
  return ParityLinearQ{c, d};
}

ParityLinearD freeParticleMetric(double lambda, double kappa) {
  double s = std::exp(-lambda);
  return {s * std::cosh(kappa), -s * std::sinh(kappa)};
}

ParityExpOperator::ParityExpOperator(OperatorExpr a, int n) { add(n, a); }

void ParityExpOperator::add(int n, const OperatorExpr& a) {
  if (a.isZero()) return;
  auto [it, inserted] = terms_.try_emplace(n, a);
  if (!inserted) {
    it->second += a;
    if (it->second.isZero()) terms_.erase(it);
  }
}

ParityExpOperator operator*(const ParityExpOperator& l, const ParityExpOperator& r) {
  ParityExpOperator out;
  for (const auto& [n, a] : l.terms_)
    for (const auto& [m, b] : r.terms_)
      for (const auto& [mono, c] : b.terms()) {
        int flip = (mono.xPow + mono.pPow) % 2 == 0 ? 1 : -1;
        out.add(n * flip + m, a * OperatorExpr::monomial(mono, c));
      }
  return out;
}

ParityExpOperator operator-(const ParityExpOperator& l, const ParityExpOperator& r) {
  ParityExpOperator out = l;
  for (const auto& [n, a] : r.terms_) out.add(n, -a);
  return out;
}

std::string ParityExpOperator::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [n, a] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << '(' << toText(a) << ")*exp(" << n << "*kappa*P)";
  }
  return os.str();
}

FreeParticleObservables freeParticleObservables() {
  FreeParticleObservables o;
  o.X = ParityExpOperator(OperatorExpr::x(), -1);
  o.P = ParityExpOperator(OperatorExpr::p(), -1);
  ParityExpOperator ccr = o.X * o.P - o.P * o.X;
  o.ccr = ccr == ParityExpOperator(OperatorExpr(GaussianRational::i()), 0);
  o.squares = o.X * o.X == ParityExpOperator(OperatorExpr::x(2)) &&
              o.X * o.P == ParityExpOperator(OperatorExpr::x() * OperatorExpr::p()) &&
              o.P * o.P == ParityExpOperator(OperatorExpr::p(2));
  return o;
}

std::complex<double> freeParticleInnerProduct(const std::vector<double>& grid,
                                              const std::vector<std::complex<double>>& phi,
                                              const std::vector<std::complex<double>>& psi, double lambda,
                                              double kappa) {
  std::size_t n = grid.size();
  if (n < 2 || phi.size() != n || psi.size() != n) throw std::invalid_argument("inner product: size mismatch");
  for (std::size_t i = 0; i < n; ++i) {
    double tol = 1e-12 * std::max(1.0, std::abs(grid[i]));
    if (std::abs(grid[i] + grid[n - 1 - i]) > tol) throw std::invalid_argument("inner product: grid is not symmetric");
  }
  std::complex<double> direct = 0, reflected = 0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    double h = (grid[i + 1] - grid[i]) / 2;
    direct += h * (std::conj(phi[i]) * psi[i] + std::conj(phi[i + 1]) * psi[i + 1]);
    reflected += h * (std::conj(phi[i]) * psi[n - 1 - i] + std::conj(phi[i + 1]) * psi[n - 2 - i]);
  }
  double pre = std::exp(-lambda / 2);
  return pre * (std::cosh(kappa) * direct - std::sinh(kappa) * reflected);
}

LocalizedState localizedState(double y, double lambda, double kappa) {
  LocalizedState s;
  double pre = std::exp(lambda / 2);
  s.position[0] = y;
  s.position[1] = -y;
  s.weight[0] = pre * std::cosh(kappa / 2);
  s.weight[1] = pre * std::sinh(kappa / 2);
  ParityLinearD invSqrt{s.weight[0], s.weight[1]};
  s.overlap = invSqrt * freeParticleMetric(lambda, kappa) * invSqrt;
  return s;
}

}  // namespace qhm
