#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "qhm/operator_expr.hpp"
#include "qhm/series.hpp"

namespace qhm {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Canonical text form, e.g. `[1/2]*x^4*p^-1 + [3/4*i*k1 + 2*l1^2]*x^0*p^-5*P`.
// Terms follow CanonicalOrder; the coefficient polynomial follows GradedLex.
std::string toText(const Monomial& m);
std::string toText(const OperatorExpr& a);
/// `[c]*{x^a,p^b}` and `[c]*p^b` items, then `residual <expr>` if non-Hermitian.
std::string toText(const SymmetricForm& f);
/// One `eps^j: <expr>` line per order.
std::string toText(const SeriesExpr& s);

ParamPoly parseParamPoly(std::string_view text);
OperatorExpr parseOperatorExpr(std::string_view text);

}  // namespace qhm
