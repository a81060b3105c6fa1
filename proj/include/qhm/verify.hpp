#pragma once

#include <map>
#include <string>
#include <vector>

#include "qhm/kernel.hpp"
#include "qhm/operator_expr.hpp"
#include "qhm/perturbation.hpp"

namespace qhm {

/// Pass; Finding = disagreement with a printed value; Fail = broken internal invariant.
enum class CheckStatus { Pass, Finding, Fail };

struct CheckRecord {
  std::string label;
  std::string computed;
  std::string expected;
  CheckStatus status = CheckStatus::Pass;
  std::string residual;
};

struct VerificationReport {
  std::vector<CheckRecord> records;

  std::size_t count(CheckStatus s) const;
  bool internalOk() const { return count(CheckStatus::Fail) == 0; }
  const CheckRecord* find(const std::string& label) const;
  /// One line per check, then a summary line.
  std::string str() const;
};

/// Transcribed cell of the coefficient tables (a: operator, b: kernel, c: symmetric form).
struct TableCell {
  int mu, nu, l;
  Rational value;
};

std::vector<TableCell> printedTableA();
std::vector<TableCell> printedTableB();
std::vector<TableCell> printedTableC();

/// Printed position kernels of S_{mu,nu} and, from table b values, of T_{mu,nu}.
Kernel printedSKernel(int mu, int nu);
Kernel printedTKernel(int mu, int nu, const std::map<int, Rational>& b);

/// lambda_1^mu kappa_1^nu coefficients of R_3 and of the particular part of Q_3.
OperatorExpr sComponent(const QSeries& q, int mu, int nu);
OperatorExpr tComponent(const QSeries& q, int mu, int nu);

/// Recomputed table entries of T_{mu,nu}, keyed by l. Throws std::domain_error
/// if T does not have the printed shape.
std::map<int, GaussianRational> recomputeA(const OperatorExpr& t, int mu, int nu);
std::map<int, GaussianRational> recomputeB(const Kernel& k, int mu, int nu);
std::map<int, GaussianRational> recomputeC(const OperatorExpr& t, int mu, int nu);

/// Runs every check; independent groups run on `workers` threads (0: hardware concurrency).
VerificationReport verifyTables(unsigned workers = 0);

}  // namespace qhm
