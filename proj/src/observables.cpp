#include "qhm/observables.hpp"

namespace qhm {

SeriesExpr conjugateBySqrtMetric(const OperatorExpr& a, const QSeries& q, int direction) {
  if (direction != 1 && direction != -1) throw std::invalid_argument("direction must be +1 or -1");
  GaussianRational s = GaussianRational::fraction(-direction, 2);
  return conjugateByExponential(SeriesExpr::constant(a, q.order()), q.series, s);
}

SeriesExpr equivalentHermitian(const QSeries& q, const Model& model) {
  int n = q.order();
  SeriesExpr qExt(n + 1);
  for (int j = 1; j <= n; ++j) qExt[j] = q.q(j);
  SeriesExpr h(n + 1);
  h[0] = model.h0;
  h[1] = model.h1;
  h = conjugateByExponential(h, qExt, GaussianRational::fraction(1, 2));
  std::vector<OperatorExpr> known;
  for (int j = 1; j <= n; ++j) known.push_back(q.q(j));
  h[n + 1] += buildR(n + 1, known, model) * ParamPoly(GaussianRational::fraction(1, 2));
  for (int j = 0; j <= n + 1; ++j) {
    if (!isHermitian(h[j])) throw EngineError(j, "h is not Hermitian");
    if (!scalingDegree(h[j]).homogeneousOfDegree(2 - model.epsilonWeight * j))
      throw EngineError(j, "h is not scaling-homogeneous");
  }
  return h;
}

}  // namespace qhm
