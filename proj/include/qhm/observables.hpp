#pragma once

#include "qhm/perturbation.hpp"
#include "qhm/series.hpp"

namespace qhm {

/// direction = +1: e^{Q/2} A e^{-Q/2} (physical observables X, P);
/// direction = -1: e^{-Q/2} A e^{Q/2}. Truncated at the order of `q`.
SeriesExpr conjugateBySqrtMetric(const OperatorExpr& a, const QSeries& q, int direction = +1);

/// h = e^{-Q/2} H e^{Q/2} through order N+1, where N = q.order(). The Q_{N+1}
/// dependence of order N+1 is (1/2)[h0, Q_{N+1}] = R_{N+1}/2, so it is fixed by Q_1..Q_N.
/// Throws EngineError naming the first order that is not Hermitian.
SeriesExpr equivalentHermitian(const QSeries& q, const Model& model = Model::cubic());

}  // namespace qhm
