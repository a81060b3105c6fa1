#include "qhm/perturbation.hpp"

#include <functional>

namespace qhm {

Model Model::monomialPotential(int n) {
  Model m;
  m.h0 = OperatorExpr::p(2) * GaussianRational::fraction(1, 2);
  m.h1 = OperatorExpr::x(n) * GaussianRational::i();
  m.epsilonWeight = n + 2;
  return m;
}

MetricParams MetricParams::formal(int order) {
  MetricParams p;
  p.order = order;
  for (int j = 1; j <= order; ++j) {
    p.lambda.push_back(ParamPoly::symbol(Symbol::lambda(j)));
    p.kappa.push_back(ParamPoly::symbol(Symbol::kappa(j)));
  }
  return p;
}

void MetricParams::validate() const {
  if (order < 1) throw std::invalid_argument("order must be >= 1");
  if (lambda.size() < static_cast<std::size_t>(order) || kappa.size() < static_cast<std::size_t>(order))
    throw std::invalid_argument("missing metric parameters");
  for (int j = 0; j < order; ++j) {
    if (!lambda[static_cast<std::size_t>(j)].isReal() || !kappa[static_cast<std::size_t>(j)].isReal())
      throw std::invalid_argument("metric parameters must be real (order " + std::to_string(j + 1) + ")");
  }
}

Rational qCoefficient(int k) {
  if (k < 1) throw std::invalid_argument("q_k needs k >= 1");
  Rational total(0);
  for (int m = 1; m <= k; ++m) {
    Rational inner(0);
    for (int n = 1; n <= m; ++n) {
      mpz_class nk;
      mpz_ui_pow_ui(nk.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
      Rational term = Rational(nk) * binomial(m, n);
      inner += (n % 2 == 0) ? term : Rational(-term);
    }
    mpz_class twoPow;
    mpz_ui_pow_ui(twoPow.get_mpz_t(), 2, static_cast<unsigned long>(m - 1));
    total += inner / Rational(twoPow);
  }
  total /= factorial(k);
  total.canonicalize();
  return total;
}

std::vector<std::vector<int>> compositions(int j, int k) {
  if (k < 1 || k > j) throw std::invalid_argument("compositions need 1 <= k <= j");
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  std::function<void(int)> rec = [&](int remaining) {
    int slots = k - static_cast<int>(current.size());
    if (slots == 0) {
      if (remaining == 0) out.push_back(current);
      return;
    }
    for (int s = 1; s <= remaining - (slots - 1); ++s) {
      current.push_back(s);
      rec(remaining - s);
      current.pop_back();
    }
  };
  rec(j);
  return out;
}

OperatorExpr buildR(int j, std::span<const OperatorExpr> priorQ, const Model& model) {
  if (j < 1) throw std::invalid_argument("order must be >= 1");
  if (priorQ.size() < static_cast<std::size_t>(j - 1)) throw EngineError(j, "missing lower-order Q");
  OperatorExpr r;
  if (j == 1) {
    r = model.h1 * ParamPoly(-2);
  } else {
    std::vector<Rational> q(static_cast<std::size_t>(j) + 1);
    for (int k = 2; k <= j; ++k) q[static_cast<std::size_t>(k)] = qCoefficient(k);
    // Walk all compositions s_1 + ... + s_k = j sharing nested-commutator prefixes.
    std::function<void(const OperatorExpr&, int, int)> walk = [&](const OperatorExpr& nested, int depth,
                                                                  int sum) {
      if (sum == j) {
        if (depth >= 2 && sgn(q[static_cast<std::size_t>(depth)]) != 0)
          r += nested * ParamPoly(GaussianRational(q[static_cast<std::size_t>(depth)]));
        return;
      }
      for (int s = 1; sum + s <= j; ++s) {
        // s = j - sum with depth 0 would be the k = 1 term, which is [h0, Q_j] itself.
        if (depth == 0 && s == j) continue;
        walk(commutator(nested, priorQ[static_cast<std::size_t>(s - 1)]), depth + 1, sum + s);
      }
    };
    walk(model.h0, 0, 0);
  }
  if (!isAntiHermitian(r)) throw EngineError(j, "R is not anti-Hermitian");
  if (!scalingDegree(r).homogeneousOfDegree(2 - model.epsilonWeight * j))
    throw EngineError(j, "R is not scaling-homogeneous of degree " + std::to_string(2 - model.epsilonWeight * j));
  return r;
}

namespace {

// [p^2/2, x^a p^b (P)] = -i a x^{a-1} p^{b+1} (P) - a(a-1)/2 x^{a-2} p^b (P)
OperatorExpr commutatorWithKinetic(const OperatorExpr& q) {
  OperatorExpr out;
  for (const auto& [m, c] : q.terms()) {
    if (m.xPow >= 1)
      out.addTerm({m.xPow - 1, m.pPow + 1, m.parity}, c * (-GaussianRational(m.xPow) * GaussianRational::i()));
    if (m.xPow >= 2)
      out.addTerm({m.xPow - 2, m.pPow, m.parity},
                  c * GaussianRational(Rational(-m.xPow * (m.xPow - 1), 2)));
  }
  return out;
}

}  // namespace

OperatorExpr solveCommutatorEquation(const OperatorExpr& r) {
  if (r.isZero()) return {};
  if (!isAntiHermitian(r)) throw std::invalid_argument("solveCommutatorEquation: R must be anti-Hermitian");
  OperatorExpr solution;
  OperatorExpr target = r;
  // Kill the highest-x term c x^a p^b with (i c/(a+1)) x^{a+1} p^{b-1}; the
  // remaining induced term has x-degree a-1.
  while (!target.isZero()) {
    const Monomial* lead = nullptr;
    for (const auto& [m, c] : target.terms())
      if (lead == nullptr || m.xPow > lead->xPow) lead = &m;
    Monomial m = *lead;
    ParamPoly c = target.coefficient(m);
    OperatorExpr step = OperatorExpr::monomial({m.xPow + 1, m.pPow - 1, m.parity},
                                               c * (GaussianRational::i() / GaussianRational(m.xPow + 1)));
    solution += step;
    target -= commutatorWithKinetic(step);
  }
  solution = (solution + adjoint(solution)) * ParamPoly(GaussianRational::fraction(1, 2));
  OperatorExpr h0 = OperatorExpr::p(2) * GaussianRational::fraction(1, 2);
  if (!(commutator(h0, solution) == r))
    throw std::logic_error("solveCommutatorEquation: nonzero residual after elimination");
  return solution;
}

OperatorExpr homogeneousPart(int j, const MetricParams& params, const Model& model) {
  params.validate();
  if (j < 1 || j > params.order) throw EngineError(j, "order outside parameter range");
  Monomial m{0, -model.epsilonWeight * j, false};
  OperatorExpr h = OperatorExpr::monomial(m, params.lambda[static_cast<std::size_t>(j - 1)]);
  m.parity = true;
  h.addTerm(m, params.kappa[static_cast<std::size_t>(j - 1)] * GaussianRational::iPower(model.epsilonWeight * j));
  return h;
}

OperatorExpr canonicalQ(int j, const OperatorExpr& particular, const MetricParams& params, const Model& model) {
  params.validate();
  if (j < 1 || j > params.order) throw EngineError(j, "order outside parameter range");
  int degree = -model.epsilonWeight * j;
  OperatorExpr flat;
  for (const auto& [m, c] : particular.terms()) {
    if (m.xPow != 0) continue;
    if (m.pPow != degree)
      throw EngineError(j, "x-degree-0 term p^" + std::to_string(m.pPow) + " does not match p^" + std::to_string(degree));
    flat.addTerm(m, c);
  }
  // Only the Hermitian part of the x-degree-0 terms is absorbable into the real
  // lambda_j, kappa_j; an anti-Hermitian remainder (first seen at j = 4) stays.
  OperatorExpr absorbed = (flat + adjoint(flat)) * ParamPoly(GaussianRational::fraction(1, 2));
  OperatorExpr q = particular - absorbed + homogeneousPart(j, params, model);
  if (!isHermitian(q)) throw EngineError(j, "Q is not Hermitian");
  if (!scalingDegree(q).homogeneousOfDegree(degree))
    throw EngineError(j, "Q is not scaling-homogeneous of degree " + std::to_string(degree));
  return q;
}

QSeries deriveMetricSeries(const MetricParams& params, const Model& model) {
  params.validate();
  QSeries out;
  out.series = SeriesExpr(params.order);
  std::vector<OperatorExpr> qs;
  for (int j = 1; j <= params.order; ++j) {
    OrderRecord rec;
    rec.j = j;
    try {
      rec.r = buildR(j, qs, model);
      OperatorExpr particular = solveCommutatorEquation(rec.r);
      rec.q = canonicalQ(j, particular, params, model);
    } catch (const EngineError&) {
      throw;
    } catch (const std::exception& e) {
      throw EngineError(j, e.what());
    }
    rec.homogeneous = homogeneousPart(j, params, model);
    rec.particular = rec.q - rec.homogeneous;
    qs.push_back(rec.q);
    out.series[j] = rec.q;
    out.orders.push_back(std::move(rec));
  }
  return out;
}

OperatorExpr bbjForm(const ParamPoly& alpha, int alphaPower) {
  using E = OperatorExpr;
  E inv = E::p(-1);
  E sum = E::x(4) * inv + E(4) * (E::x(3) * inv * E::x(1)) + E(6) * (E::x(2) * inv * E::x(2)) +
          E(4) * (E::x(1) * inv * E::x(3)) + inv * E::x(4);
  return sum * ParamPoly(GaussianRational::fraction(1, 32)) + E::monomial({0, alphaPower, false}, alpha);
}

BbjReport bbjCompare(const OperatorExpr& q1, const ParamPoly& alpha, int alphaPower) {
  BbjReport rep;
  OperatorExpr bbj = bbjForm(alpha, alphaPower);
  rep.lambdaTilde = symmetricForm(bbj).coefficient(0, -5, false);
  std::map<int, ParamPoly> kappaZero{{Symbol::kappa(1).index(), ParamPoly()}};
  std::map<int, ParamPoly> lambdaZero{{Symbol::lambda(1).index(), ParamPoly()}};
  OperatorExpr base = q1.substitute(kappaZero);
  ParamPoly shift = symmetricForm(base.substitute(lambdaZero)).coefficient(0, -5, false);
  rep.lambda1 = rep.lambdaTilde - shift;
  OperatorExpr matched = base.substitute({{Symbol::lambda(1).index(), rep.lambda1}});
  rep.difference = bbj - matched;
  rep.equal = rep.difference.isZero();
  return rep;
}

}  // namespace qhm
