#include "qhm/verify.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <optional>
#include <sstream>
#include <thread>

#include "qhm/classical.hpp"
#include "qhm/free_particle.hpp"
#include "qhm/observables.hpp"
#include "qhm/serialize.hpp"

namespace qhm {

std::size_t VerificationReport::count(CheckStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(records.begin(), records.end(), [s](const CheckRecord& r) { return r.status == s; }));
}

const CheckRecord* VerificationReport::find(const std::string& label) const {
  for (const auto& r : records)
    if (r.label == label) return &r;
  return nullptr;
}

std::string VerificationReport::str() const {
  std::ostringstream os;
  for (const auto& r : records) {
    const char* tag = r.status == CheckStatus::Pass ? "PASS" : r.status == CheckStatus::Finding ? "FINDING" : "FAIL";
    os << tag << ' ' << r.label << " | computed: " << r.computed << " | expected: " << r.expected;
    if (r.status != CheckStatus::Pass && !r.residual.empty()) os << " | residual: " << r.residual;
    os << '\n';
  }
  os << "summary: pass " << count(CheckStatus::Pass) << ", finding " << count(CheckStatus::Finding) << ", fail "
     << count(CheckStatus::Fail) << '\n';
  return os.str();
}

namespace {

Rational q(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

void addRow(std::vector<TableCell>& out, int mu, int nu, int l0, std::initializer_list<Rational> values) {
  int l = l0;
  for (const auto& v : values) out.push_back({mu, nu, l++, v});
}

}  // namespace

std::vector<TableCell> printedTableA() {
  std::vector<TableCell> t;
  addRow(t, 0, 0, 1, {q(2745171, 32), q(2745171, 32), q(677457, 16), q(439857, 32), q(52029, 16), q(9375, 16),
                      q(651, 8), q(273, 32), q(5, 8), q(1, 40)});
  addRow(t, 0, 1, 1, {q(70317, 5), q(23592, 5), q(20207, 20), q(794, 5), q(777, 40), q(217, 120), q(7, 60), q(1, 240)});
  addRow(t, 1, 0, 1, {q(1110915, 8), q(363315, 8), q(36355, 4), q(9305, 8), q(90), q(10, 3)});
  addRow(t, 1, 1, 1, {q(351, 2), q(71, 2), q(11, 3), q(1, 6)});
  addRow(t, 0, 2, 1, {q(388), q(48), q(11, 3), q(1, 6)});
  addRow(t, 2, 0, 1, {q(325, 2), q(25, 2)});
  return t;
}

std::vector<TableCell> printedTableB() {
  std::vector<TableCell> t;
  addRow(t, 0, 0, 1, {q(79, 11468800), q(79, 2867200), q(533, 8601600), q(947, 8601600), q(53, 983040)});
  addRow(t, 0, 1, 1, {q(601, 532224000), q(4757, 1596672000), q(5443, 798336000), q(937, 266112000)});
  addRow(t, 1, 0, 1, {q(211, 18923520), q(-533, 63866880), q(9127, 510935040)});
  addRow(t, 1, 1, 1, {q(1, 70963200), q(1, 383201280)});
  addRow(t, 0, 2, 1, {q(-13, 479001600), q(15, 958003200)});
  addRow(t, 2, 0, 1, {q(-1, 76640256)});
  return t;
}

std::vector<TableCell> printedTableC() {
  std::vector<TableCell> t;
  addRow(t, 0, 0, 0, {Rational(mpz_class("141274966833"), mpz_class(32)), q(3830434839L, 64), q(23858793, 64),
                      q(43479, 32), q(267, 64), q(1, 80)});
  addRow(t, 0, 1, 0, {q(24081603, 20), q(328947, 40), q(16327, 80), q(35, 48), q(1, 480)});
  addRow(t, 1, 0, 0, {q(54563145, 16), q(1430535, 16), q(8695, 16), q(5, 3), q(0), q(0)});
  addRow(t, 1, 1, 0, {q(1547, 4), q(61, 4), q(1, 12), q(0), q(0)});
  addRow(t, 0, 2, 0, {q(-357), q(9), q(1, 12), q(0), q(0), q(0)});
  addRow(t, 2, 0, 0, {q(-2275, 4), q(-25, 4), q(0), q(0), q(0), q(0)});
  return t;
}

namespace {

BiPoly bx() { return BiPoly::x(); }
BiPoly by() { return BiPoly::y(); }
BiPoly num(long n, long d = 1) { return BiPoly(GaussianRational(q(n, d))); }
BiPoly imag(long n, long d = 1) { return BiPoly(GaussianRational(Rational(0), q(n, d))); }
BiPoly mono(int i, int j) { return BiPoly::monomial(i, j); }
// x^i y^j - x^j y^i and x^i y^j + x^j y^i
BiPoly odd(int i, int j) { return mono(i, j) - mono(j, i); }
BiPoly even(int i, int j) { return mono(i, j) + mono(j, i); }

struct TShape {
  Basis basis;
  bool imaginary;  // overall factor i
  int power;       // of (x -+ y)
  int degree;      // N of the symmetric bracket
};

TShape tShape(int mu, int nu) {
  if (mu == 0 && nu == 0) return {Basis::signMinus(), true, 4, 10};
  if (mu == 0 && nu == 1) return {Basis::signPlus(), false, 6, 8};
  if (mu == 1 && nu == 0) return {Basis::signMinus(), true, 8, 6};
  if (mu == 1 && nu == 1) return {Basis::signPlus(), false, 10, 4};
  if (mu == 0 && nu == 2) return {Basis::signMinus(), true, 10, 4};
  if (mu == 2 && nu == 0) return {Basis::signMinus(), true, 12, 2};
  throw std::invalid_argument("no T component (" + std::to_string(mu) + "," + std::to_string(nu) + ")");
}

}  // namespace

Kernel printedSKernel(int mu, int nu) {
  BiPoly x = bx(), y = by();
  if (mu == 0 && nu == 0)
    return Kernel(imag(-1, 26880) * (num(15) * odd(11, 1) + num(7) * odd(9, 3) - num(48) * odd(8, 4)),
                  Basis::signMinus());
  if (mu == 0 && nu == 1)
    return Kernel(num(1, 319334400) * pow(x + y, 5) *
                      (num(3115) * odd(7, 0) - num(3818) * odd(6, 1) + num(3120) * odd(5, 2) - num(12123) * odd(4, 3)),
                  Basis::signPlus());
  if (mu == 1 && nu == 0)
    return Kernel(imag(-1, 6386688) * pow(x - y, 7) * (num(623) * even(5, 0) + num(1970) * even(4, 1) +
                                                       num(3743) * even(3, 2)),
                  Basis::signMinus());
  if (mu == 1 && nu == 1)
    return Kernel(num(1, 47900160) * pow(x + y, 9) * (num(7) * odd(3, 0) - num(15) * odd(2, 1)), Basis::signPlus());
  if (mu == 0 && nu == 2)
    return Kernel(imag(1, 95800320) * pow(x - y, 9) * (num(29) * even(3, 0) + num(15) * even(2, 1)),
                  Basis::signMinus());
  if (mu == 2 && nu == 0) return Kernel(imag(1, 6386688) * pow(x - y, 11) * (x + y), Basis::signMinus());
  throw std::invalid_argument("no S component");
}

Kernel printedTKernel(int mu, int nu, const std::map<int, Rational>& b) {
  TShape s = tShape(mu, nu);
  BiPoly lin = s.basis.kind == BasisKind::SignMinus ? bx() - by() : bx() + by();
  BiPoly bracket;
  for (const auto& [l, v] : b) {
    BiPoly part = (mu == 2 && nu == 0) ? mono(l, s.degree - l) : even(l, s.degree - l);
    bracket += part * BiPoly(GaussianRational(v));
  }
  BiPoly pre = s.imaginary ? imag(1) : num(1);
  return Kernel(pre * pow(lin, s.power) * bracket, s.basis);
}

OperatorExpr sComponent(const QSeries& qs, int mu, int nu) {
  return qs.orders.at(2).r.parameterCoefficient(exponentsOf({{Symbol::lambda(1), mu}, {Symbol::kappa(1), nu}}));
}

OperatorExpr tComponent(const QSeries& qs, int mu, int nu) {
  return qs.orders.at(2).particular.parameterCoefficient(
      exponentsOf({{Symbol::lambda(1), mu}, {Symbol::kappa(1), nu}}));
}

std::map<int, GaussianRational> recomputeA(const OperatorExpr& t, int mu, int nu) {
  std::map<int, GaussianRational> out;
  for (const auto& [m, c] : t.terms()) {
    if (m.pPow != m.xPow - 15 || m.parity != (nu == 1) || m.xPow < 1 || !c.isConstant())
      throw std::domain_error("T term " + toText(m) + " outside the printed shape");
    GaussianRational f;
    if (nu == 1)
      f = GaussianRational::iPower(-(m.xPow + 1));
    else if (nu == 0 && mu <= 1)
      f = -GaussianRational::iPower(-m.xPow);
    else
      f = GaussianRational::iPower(-m.xPow);
    out[m.xPow] = c.constant() / f;
  }
  return out;
}

namespace {

// Exact quotient of a homogeneous polynomial by (x - s y)^n, if it divides.
std::optional<BiPoly> divideLinearPower(const BiPoly& f, int s, int n) {
  if (f.isZero()) return BiPoly();
  int degree = f.terms().begin()->first.first + f.terms().begin()->first.second;
  for (const auto& [e, c] : f.terms())
    if (e.first + e.second != degree) return std::nullopt;
  // a[i] = coefficient of x^i y^(degree-i)
  std::vector<ParamPoly> a(static_cast<std::size_t>(degree) + 1);
  for (const auto& [e, c] : f.terms()) a[static_cast<std::size_t>(e.first)] = c;
  ParamPoly root(s);
  for (int k = 0; k < n; ++k) {
    int d = static_cast<int>(a.size()) - 1;
    if (d < 1) return std::nullopt;
    std::vector<ParamPoly> qv(static_cast<std::size_t>(d));
    ParamPoly carry;
    for (int i = d; i >= 1; --i) {
      carry = a[static_cast<std::size_t>(i)] + carry * root;
      qv[static_cast<std::size_t>(i - 1)] = carry;
    }
    if (!(a[0] + carry * root).isZero()) return std::nullopt;
    a = std::move(qv);
  }
  BiPoly out;
  int d = static_cast<int>(a.size()) - 1;
  for (int i = 0; i <= d; ++i) out.addTerm(i, d - i, a[static_cast<std::size_t>(i)]);
  return out;
}

}  // namespace

std::map<int, GaussianRational> recomputeB(const Kernel& k, int mu, int nu) {
  TShape s = tShape(mu, nu);
  if (k.terms().size() != 1 || k.terms().begin()->first != s.basis)
    throw std::domain_error("T kernel is not a single " + s.basis.str() + " term");
  auto g = divideLinearPower(k.poly(s.basis), s.basis.kind == BasisKind::SignMinus ? 1 : -1, s.power);
  if (!g) throw std::domain_error("T kernel is not divisible by the printed linear factor");
  std::map<int, GaussianRational> out;
  GaussianRational pre = s.imaginary ? GaussianRational::i() : GaussianRational(1);
  for (int l = 1; 2 * l <= s.degree; ++l) {
    GaussianRational c = g->coefficient(l, s.degree - l).constant() / pre;
    if (2 * l == s.degree && !(mu == 2 && nu == 0)) c = c / GaussianRational(2);
    out[l] = c;
  }
  return out;
}

std::map<int, GaussianRational> recomputeC(const OperatorExpr& t, int, int nu) {
  SymmetricForm f = symmetricForm(t);
  if (!f.hermitian()) throw std::domain_error("T is not Hermitian");
  std::map<int, GaussianRational> out;
  GaussianRational unit = nu == 1 ? GaussianRational::i() : GaussianRational(1);
  for (const auto& term : f.terms) {
    if (term.parity != (nu == 1) || term.xPow % 2 != 0 || term.pPow != term.xPow - 15 || !term.coeff.isConstant())
      throw std::domain_error("T symmetric term outside the printed shape");
    GaussianRational c = term.coeff.constant() * unit;
    if (!term.anticommutator) c = c / GaussianRational(2);  // {1, p^-15} = 2 p^-15
    out[term.xPow / 2] = c;
  }
  return out;
}

namespace {

using Records = std::vector<CheckRecord>;

struct Context {
  QSeries q;   // formal, through order 4
  QSeries q2;  // formal, through order 2 (for h through eps^3)
  OperatorExpr r5;
  Model model = Model::cubic();
};

const OperatorExpr& Qj(const Context& c, int j) { return c.q.q(j); }

ParamPoly sym(Symbol s) { return ParamPoly::symbol(s); }
ParamPoly lt1() { return sym(Symbol::lambda(1)) + ParamPoly(3); }

void checkOp(Records& out, const std::string& label, const OperatorExpr& computed, const OperatorExpr& expected,
             bool printed) {
  CheckRecord r;
  r.label = label;
  r.computed = toText(computed);
  r.expected = toText(expected);
  bool ok = computed == expected;
  r.status = ok ? CheckStatus::Pass : (printed ? CheckStatus::Finding : CheckStatus::Fail);
  if (!ok) r.residual = toText(computed - expected);
  out.push_back(std::move(r));
}

void checkKernel(Records& out, const std::string& label, const Kernel& computed, const Kernel& expected, bool printed) {
  CheckRecord r;
  r.label = label;
  r.computed = computed.str();
  r.expected = expected.str();
  KernelCheck k = compareKernels(computed, expected);
  r.status = k.ok ? CheckStatus::Pass : (printed ? CheckStatus::Finding : CheckStatus::Fail);
  if (!k.ok) r.residual = k.residual.str();
  out.push_back(std::move(r));
}

void checkValue(Records& out, const std::string& label, const std::string& computed, const std::string& expected,
                bool ok, bool printed) {
  out.push_back({label, computed, expected, ok ? CheckStatus::Pass : (printed ? CheckStatus::Finding : CheckStatus::Fail),
                 ok ? "" : "differs"});
}

void checkFlag(Records& out, const std::string& label, bool ok, const std::string& detail = "") {
  out.push_back({label, ok ? "true" : "false", "true", ok ? CheckStatus::Pass : CheckStatus::Fail, detail});
}

std::string pad2(int mu, int nu) { return std::to_string(mu) + std::to_string(nu); }

const int kComponents[6][2] = {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {0, 2}, {2, 0}};

// ---------------------------------------------------------------------------

Records groupStructure(const Context& c) {
  Records out;
  OperatorExpr h0 = c.model.h0;
  for (int j = 1; j <= c.q.order(); ++j) {
    const auto& rec = c.q.orders[static_cast<std::size_t>(j - 1)];
    std::string p = "invariant.order" + std::to_string(j) + ".";
    checkFlag(out, p + "Q_hermitian", isHermitian(rec.q));
    checkFlag(out, p + "R_antihermitian", isAntiHermitian(rec.r));
    checkFlag(out, p + "Q_degree", scalingDegree(rec.q).homogeneousOfDegree(-5 * j));
    checkFlag(out, p + "R_degree", scalingDegree(rec.r).homogeneousOfDegree(2 - 5 * j));
    checkOp(out, p + "round_trip", commutator(h0, rec.q), rec.r, false);
  }
  checkFlag(out, "invariant.order5.R_antihermitian", isAntiHermitian(c.r5));
  checkFlag(out, "invariant.order5.R_degree", scalingDegree(c.r5).homogeneousOfDegree(2 - 25));
  return out;
}

Records groupLowOrders(const Context& c) {
  Records out;
  const Rational printedQ[5] = {q(-1), q(0), q(1, 12), q(0), q(-1, 120)};
  for (int k = 1; k <= 5; ++k)
    checkValue(out, "q_coefficient." + std::to_string(k), rationalString(qCoefficient(k)),
               rationalString(printedQ[k - 1]), qCoefficient(k) == printedQ[k - 1], true);

  using E = OperatorExpr;
  checkOp(out, "R1", c.q.orders[0].r, E::x(3) * GaussianRational(Rational(0), Rational(-2)), true);
  checkOp(out, "R2", c.q.orders[1].r, E(), true);

  const OperatorExpr& q1p = c.q.orders[0].particular;
  E printedQ1 = (E::x(4) * E::p(-1) + GaussianRational(Rational(0), Rational(2)) * (E::x(3) * E::p(-2)) -
                 E(3) * (E::x(2) * E::p(-3)) - GaussianRational(Rational(0), Rational(3)) * (E::x(1) * E::p(-4))) *
                GaussianRational::fraction(1, 2);
  checkOp(out, "Q1.particular.normal_order", q1p, printedQ1, true);
  E printedSym = anti(4, -1, false, GaussianRational::fraction(1, 4)) +
                 anti(2, -3, false, GaussianRational::fraction(3, 4)) + E::p(-5) * ParamPoly(3);
  checkOp(out, "Q1.particular.symmetric", q1p, printedSym, true);
  SymmetricForm sf = symmetricForm(q1p);
  checkValue(out, "Q1.particular.symmetric.p^-5", sf.coefficient(0, -5, false).str(), "3",
             sf.coefficient(0, -5, false) == ParamPoly(3), true);
  E general = anti(4, -1, false, GaussianRational::fraction(1, 4)) +
              anti(2, -3, false, GaussianRational::fraction(3, 4)) + E::monomial({0, -5, false}, lt1()) +
              E::monomial({0, -5, true}, sym(Symbol::kappa(1)) * GaussianRational::i());
  checkOp(out, "Q1.general", Qj(c, 1), general, true);

  Kernel k1 = toKernel(q1p);
  BiPoly xy = BiPoly::x() * BiPoly::y() * (pow(BiPoly::x(), 2) + pow(BiPoly::y(), 2));
  checkKernel(out, "Q1.kernel", k1, Kernel(xy * BiPoly(GaussianRational(Rational(0), q(1, 8))), Basis::signMinus()),
              true);
  checkFlag(out, "Q1.kernel.hermitian", kernelHermitianCheck(k1).ok);
  checkKernel(out, "Q1.kernel.wave_equation", applyWaveOperator(k1),
              Kernel(BiPoly::monomial(3, 0, GaussianRational(Rational(0), Rational(-4))), Basis::deltaMinus()), true);
  checkKernel(out, "Q1.kernel.wave_equals_2R1", applyWaveOperator(k1), toKernel(c.q.orders[0].r) * ParamPoly(2),
              false);
  checkKernel(out, "p^-5.kernel", toKernel(E::p(-5)),
              Kernel(pow(BiPoly::x() - BiPoly::y(), 4) * BiPoly(GaussianRational(Rational(0), q(1, 48))),
                     Basis::signMinus()),
              true);

  // Identities used for the BBJ form.
  E inv = E::p(-1);
  E lhs1 = E::x(3) * inv * E::x(1) + E::x(1) * inv * E::x(3);
  checkOp(out, "identity.x3_pinv_x.as_printed", lhs1, anti(4, -1) + anti(2, -2, false, 3) + E::p(-5) * ParamPoly(12),
          true);
  checkOp(out, "identity.x3_pinv_x.homogeneous_reading", lhs1,
          anti(4, -1) + anti(2, -3, false, 3) + E::p(-5) * ParamPoly(12), true);
  checkOp(out, "identity.x2_pinv_x2", E::x(2) * inv * E::x(2),
          anti(4, -1, false, GaussianRational::fraction(1, 2)) + anti(2, -3, false, 2) + E::p(-5) * ParamPoly(12),
          true);

  ParamPoly alpha = sym(Symbol::alpha());
  BbjReport bbj = bbjCompare(Qj(c, 1), alpha);
  checkValue(out, "bbj.lambda_tilde_minus_alpha", (bbj.lambdaTilde - alpha).str(), "15/4",
             bbj.lambdaTilde - alpha == ParamPoly(GaussianRational::fraction(15, 4)), true);
  checkValue(out, "bbj.equal_to_general_Q1", bbj.equal ? "equal" : toText(bbj.difference), "equal", bbj.equal, true);
  BbjReport bbj0 = bbjCompare(Qj(c, 1), ParamPoly());
  checkValue(out, "bbj.alpha0.lambda_tilde", bbj0.lambdaTilde.str(), "15/4",
             bbj0.equal && bbj0.lambdaTilde == ParamPoly(GaussianRational::fraction(15, 4)), true);
  checkOp(out, "bbj.symmetric_form", bbjForm(alpha),
          anti(4, -1, false, GaussianRational::fraction(1, 4)) + anti(2, -3, false, GaussianRational::fraction(3, 4)) +
              E::monomial({0, -5, false}, alpha + ParamPoly(GaussianRational::fraction(15, 4))),
          true);
  E printedBbj = bbjForm(alpha, -1);
  ScalingReport sr = scalingDegree(printedBbj);
  checkValue(out, "bbj.as_printed_alpha_over_p.homogeneous", sr.homogeneous() ? "homogeneous" : "inhomogeneous",
             "homogeneous", sr.homogeneous(), true);

  checkOp(out, "Q2.explicit", Qj(c, 2),
          E::monomial({0, -10, false}, sym(Symbol::lambda(2))) + E::monomial({0, -10, true}, -sym(Symbol::kappa(2))),
          true);

  // Higher-order operator equations in the two printed forms.
  E h0 = c.model.h0, h1 = c.model.h1;
  const E &q1 = Qj(c, 1), &q2 = Qj(c, 2), &q3 = Qj(c, 3);
  GaussianRational g12 = GaussianRational::fraction(1, 12), gm16 = GaussianRational::fraction(-1, 6);
  checkOp(out, "equation.order3.nested_h0_form", c.q.orders[2].r, commutator(h0, q1, 3) * g12, true);
  checkOp(out, "equation.order3.h1_form", c.q.orders[2].r, commutator(h1, q1, 2) * gm16, true);
  E r4first = (commutator(commutator(h0, q1, 2), q2) + commutator(commutator(commutator(h0, q1), q2), q1) +
               commutator(commutator(h0, q2), q1, 2)) *
              g12;
  checkOp(out, "equation.order4.nested_h0_form", c.q.orders[3].r, r4first, true);
  checkOp(out, "equation.order4.h1_form", c.q.orders[3].r,
          (commutator(commutator(h1, q1), q2) + commutator(commutator(h1, q2), q1)) * gm16, true);
  E r5printed = commutator(h0, q1, 5) * GaussianRational::fraction(-1, 120) +
                (commutator(commutator(h0, q1), q2, 2) + commutator(commutator(h0, q2), q1, 2) +
                 commutator(commutator(h0, q2, 2), q1) + commutator(commutator(h0, q1, 2), q3) +
                 commutator(commutator(commutator(h0, q1), q3), q1) + commutator(commutator(h0, q3), q1, 2)) *
                    g12;
  checkOp(out, "equation.order5.nested_h0_form.value", c.r5, r5printed, true);
  // Index tuples of the printed k = 3 terms against the compositions of 5 into 3 parts.
  std::vector<std::vector<int>> printedTuples = {{1, 2, 2}, {2, 1, 1}, {2, 2, 1}, {1, 1, 3}, {1, 3, 1}, {3, 1, 1}};
  std::sort(printedTuples.begin(), printedTuples.end());
  auto comps = compositions(5, 3);
  std::vector<std::vector<int>> relevant;
  for (const auto& t : comps)
    if (std::find(t.begin(), t.end(), 2) != t.end() || std::find(t.begin(), t.end(), 3) != t.end())
      relevant.push_back(t);
  auto tupleText = [](const std::vector<std::vector<int>>& ts) {
    std::string s;
    for (const auto& t : ts) {
      s += "(";
      for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
      s += ")";
    }
    return s;
  };
  checkValue(out, "equation.order5.nested_h0_form.compositions", tupleText(printedTuples), tupleText(relevant),
             printedTuples == relevant, true);
  E r5second = commutator(h1, q1, 4) * GaussianRational::fraction(1, 360) +
               (commutator(h1, q2, 2) + commutator(commutator(h1, q1), q3) + commutator(commutator(h1, q3), q1)) * gm16;
  checkOp(out, "equation.order5.h1_form", c.r5, r5second, true);
  return out;
}

Records groupKernels(const Context& c) {
  Records out;
  for (const auto& [mu, nu] : kComponents) {
    std::string id = pad2(mu, nu);
    Kernel s = toKernel(sComponent(c.q, mu, nu));
    Kernel t = toKernel(tComponent(c.q, mu, nu));
    checkKernel(out, "S" + id + ".kernel", s, printedSKernel(mu, nu), true);
    checkFlag(out, "S" + id + ".kernel.antihermitian", kernelHermitianCheck(s * ParamPoly(GaussianRational::i())).ok);
    checkKernel(out, "T" + id + ".wave_equals_2S", applyWaveOperator(t), s * ParamPoly(2), false);
    checkFlag(out, "T" + id + ".kernel.hermitian", kernelHermitianCheck(t).ok);
    std::map<int, Rational> printedB;
    for (const auto& cell : printedTableB())
      if (cell.mu == mu && cell.nu == nu) printedB[cell.l] = cell.value;
    checkKernel(out, "T" + id + ".kernel", t, printedTKernel(mu, nu, printedB), true);
  }
  return out;
}

template <class Recompute>
void checkTable(Records& out, const std::string& name, const std::vector<TableCell>& cells,
                Recompute recompute, int maxL) {
  for (const auto& [mu, nu] : kComponents) {
    std::string id = name + "." + pad2(mu, nu);
    std::map<int, GaussianRational> got;
    try {
      got = recompute(mu, nu);
    } catch (const std::exception& e) {
      out.push_back({id + ".shape", e.what(), "printed shape", CheckStatus::Finding, e.what()});
      continue;
    }
    std::map<int, Rational> printed;
    for (const auto& cell : cells)
      if (cell.mu == mu && cell.nu == nu) printed[cell.l] = cell.value;
    for (int l = 0; l <= maxL; ++l) {
      auto g = got.find(l);
      auto p = printed.find(l);
      if (g == got.end() && p == printed.end()) continue;
      GaussianRational gv = g == got.end() ? GaussianRational() : g->second;
      std::string expected = p == printed.end() ? "absent" : rationalString(p->second);
      bool ok = p != printed.end() ? gv == GaussianRational(p->second) : gv.isZero();
      checkValue(out, id + "." + std::to_string(l), gv.str(), expected, ok, true);
    }
  }
}

Records groupTables(const Context& c) {
  Records out;
  checkTable(out, "table_a", printedTableA(),
             [&](int mu, int nu) { return recomputeA(tComponent(c.q, mu, nu), mu, nu); }, 10);
  checkTable(out, "table_b", printedTableB(),
             [&](int mu, int nu) { return recomputeB(toKernel(tComponent(c.q, mu, nu)), mu, nu); }, 5);
  checkTable(out, "table_c", printedTableC(),
             [&](int mu, int nu) { return recomputeC(tComponent(c.q, mu, nu), mu, nu); }, 5);
  return out;
}

Records groupQ3(const Context& c) {
  Records out;
  SymmetricForm f = symmetricForm(Qj(c, 3));
  checkFlag(out, "Q3.symmetric.hermitian", f.hermitian());
  checkValue(out, "Q3.symmetric.x^10_p^-5", f.coefficient(10, -5, false).str(), "1/80",
             f.coefficient(10, -5, false) == ParamPoly(GaussianRational::fraction(1, 80)), true);
  // Printed combinations, evaluated with recomputed c values.
  std::map<std::pair<int, int>, std::map<int, GaussianRational>> cv;
  for (const auto& [mu, nu] : kComponents) cv[{mu, nu}] = recomputeC(tComponent(c.q, mu, nu), mu, nu);
  auto C = [&](int mu, int nu, int l) -> ParamPoly {
    auto& m = cv[{mu, nu}];
    auto it = m.find(l);
    return it == m.end() ? ParamPoly() : ParamPoly(it->second);
  };
  ParamPoly l1 = sym(Symbol::lambda(1)), k1 = sym(Symbol::kappa(1));
  ParamPoly l3 = sym(Symbol::lambda(3)), k3 = sym(Symbol::kappa(3));
  std::vector<std::pair<std::string, ParamPoly>> d0 = {
      {"d01", C(0, 0, 1) + l1 * C(1, 0, 1) + l1 * l1 * C(2, 0, 1) + k1 * k1 * C(0, 2, 1)},
      {"d02", C(0, 0, 2) + l1 * C(1, 0, 2) + k1 * C(0, 1, 2)},
      {"d03", C(0, 0, 3) + l1 * C(1, 0, 3)},
      {"d04", C(0, 0, 4)},
      {"d05", C(0, 0, 5)}};
  for (int l = 1; l <= 5; ++l) {
    ParamPoly got = f.coefficient(2 * l, 2 * l - 15, false);
    checkValue(out, "Q3." + d0[static_cast<std::size_t>(l - 1)].first, got.str(),
               d0[static_cast<std::size_t>(l - 1)].second.str(), got == d0[static_cast<std::size_t>(l - 1)].second,
               true);
  }
  std::vector<std::pair<std::string, ParamPoly>> d1 = {{"d11", k1 * (C(0, 1, 1) + l1 * C(1, 1, 1))},
                                                       {"d12", k1 * (C(0, 1, 2) + l1 * C(1, 1, 2))},
                                                       {"d13", k1 * C(0, 1, 3)},
                                                       {"d14", k1 * C(0, 1, 4)}};
  for (int l = 1; l <= 4; ++l) {
    ParamPoly got = f.coefficient(2 * l, 2 * l - 15, true) * GaussianRational::i();
    const auto& [name, want] = d1[static_cast<std::size_t>(l - 1)];
    checkValue(out, "Q3." + name, got.str(), want.str(), got == want, true);
  }
  ParamPoly lt3 = f.coefficient(0, -15, false);
  ParamPoly lt3want =
      l3 + ParamPoly(2) * (C(0, 0, 0) + l1 * C(1, 0, 0) + l1 * l1 * C(2, 0, 0) + k1 * k1 * C(0, 2, 0));
  checkValue(out, "Q3.lambda3_tilde", lt3.str(), lt3want.str(), lt3 == lt3want, true);
  ParamPoly kt3 = f.coefficient(0, -15, true) * GaussianRational::i();
  ParamPoly kt3want = k3 + ParamPoly(2) * k1 * (C(0, 1, 0) + l1 * C(1, 1, 0));
  checkValue(out, "Q3.kappa3_tilde", kt3.str(), kt3want.str(), kt3 == kt3want, true);
  // Decomposition of Q3 into the six components plus the homogeneous part.
  OperatorExpr rebuilt;
  for (const auto& [mu, nu] : kComponents)
    rebuilt += tComponent(c.q, mu, nu) * (pow(l1, mu) * pow(k1, nu));
  rebuilt += OperatorExpr::monomial({0, -15, false}, l3) +
             OperatorExpr::monomial({0, -15, true}, k3 * GaussianRational(Rational(0), Rational(-1)));
  checkOp(out, "Q3.component_decomposition", Qj(c, 3), rebuilt, true);
  OperatorExpr srebuilt;
  for (const auto& [mu, nu] : kComponents) srebuilt += sComponent(c.q, mu, nu) * (pow(l1, mu) * pow(k1, nu));
  checkOp(out, "R3.component_decomposition", c.q.orders[2].r, srebuilt, true);
  return out;
}

Records groupObservables(const Context& c) {
  Records out;
  using E = OperatorExpr;
  ParamPoly k1 = sym(Symbol::kappa(1)), l2 = sym(Symbol::lambda(2)), k2 = sym(Symbol::kappa(2));
  GaussianRational I = GaussianRational::i();
  const E &q1 = Qj(c, 1), &q2 = Qj(c, 2);
  E bx = anti(4, -2) + anti(2, -4, false, 9) + E::monomial({0, -6, false}, ParamPoly(20) * lt1()) +
         anti(1, -5, true, ParamPoly(-4) * k1);
  E bp = anti(3, -1, false, 2) + anti(1, -3, false, 3) + E::monomial({0, -4, true}, ParamPoly(-4) * k1);
  E b3 = anti(6, -2) + anti(4, -4, false, 22) + anti(2, -6, false, ParamPoly(510) + ParamPoly(10) * lt1()) +
         E::monomial({0, -8, false}, ParamPoly(8820) + ParamPoly(140) * lt1()) +
         anti(3, -5, true, k1 * GaussianRational::fraction(-4, 3));
  E b32 = anti(2, -11) + E::p(-13) * ParamPoly(44);
  checkOp(out, "commutator.x_Q1", commutator(E::x(), q1), bx * (I * GaussianRational::fraction(-1, 4)), true);
  checkOp(out, "commutator.p_Q1", commutator(E::p(), q1), bp * (I * GaussianRational::fraction(-1, 2)), true);
  checkOp(out, "commutator.x3_Q1", commutator(E::x(3), q1), b3 * (I * GaussianRational::fraction(-3, 4)), true);
  checkOp(out, "commutator.x3_Q2", commutator(E::x(3), q2),
          b32 * (l2 * (I * GaussianRational(-15))) - anti(3, -10, true, k2), true);
  checkOp(out, "identity.x3_f", commutator(E::x(3), E::p(-1)),
          anti(2, -2, false, GaussianRational(Rational(0), q(-3, 2))) +
              E::p(-4) * ParamPoly(GaussianRational(Rational(0), q(-3)) ), true);

  SeriesExpr X = conjugateBySqrtMetric(E::x(), c.q2), P = conjugateBySqrtMetric(E::p(), c.q2);
  checkOp(out, "observable.X.order0", X[0], E::x(), true);
  checkOp(out, "observable.X.order1", X[1], bx * (I * GaussianRational::fraction(1, 8)), true);
  checkOp(out, "observable.P.order0", P[0], E::p(), true);
  checkOp(out, "observable.P.order1", P[1], bp * (I * GaussianRational::fraction(1, 4)), true);
  checkOp(out, "observable.X.leading_commutator", X[1], commutator(E::x(), q1) * GaussianRational::fraction(-1, 2),
          false);

  SeriesExpr h = equivalentHermitian(c.q2);
  checkOp(out, "hermitian_h.order0", h[0], E::p(2) * GaussianRational::fraction(1, 2), true);
  checkOp(out, "hermitian_h.order1", h[1], E(), true);
  checkOp(out, "hermitian_h.order2", h[2], b3 * GaussianRational::fraction(3, 16), true);
  checkOp(out, "hermitian_h.order3", h[3],
          (b32 * (l2 * GaussianRational(15)) - anti(3, -10, true, k2 * I)) * GaussianRational::fraction(1, 4), true);
  checkOp(out, "hermitian_h.order2.short_form", h[2], commutator(E::x(3), q1) * (I * GaussianRational::fraction(1, 4)),
          true);
  checkOp(out, "hermitian_h.order3.short_form", h[3], commutator(E::x(3), q2) * (I * GaussianRational::fraction(1, 4)),
          true);
  for (int j = 0; j <= h.order(); ++j) checkFlag(out, "hermitian_h.order" + std::to_string(j) + ".hermitian", isHermitian(h[j]));

  ClassicalHamiltonian hc = classicalLimit(h);
  ClassicalHamiltonian want;
  want.terms = {{0, 2, -1, q(1, 2), 0}, {6, -2, 1, q(3, 8), 2}};
  checkValue(out, "classical.H", hc.str(), want.str(), hc.terms == want.terms, true);
  MetricParams concrete = MetricParams::formal(2);
  concrete.lambda = {ParamPoly(GaussianRational::fraction(-7, 3)), ParamPoly(5)};
  concrete.kappa = {ParamPoly(GaussianRational::fraction(1, 2)), ParamPoly(-2)};
  ClassicalHamiltonian hc2 = classicalLimit(equivalentHermitian(deriveMetricSeries(concrete)));
  checkValue(out, "classical.H.parameter_free", hc2.str(), hc.str(), hc2.terms == hc.terms, false);
  return out;
}

Records groupFreeParticle(const Context&) {
  Records out;
  FreeParticleObservables o = freeParticleObservables();
  checkValue(out, "free.X", o.X.str(), "([1/1]*x^1*p^0)*exp(-1*kappa*P)", true, true);
  checkFlag(out, "free.ccr", o.ccr);
  checkFlag(out, "free.squares", o.squares);
  for (int k = -2; k <= 2; ++k) {
    ParityLinearD eta = freeParticleMetric(0.0, k);
    checkFlag(out, "free.metric_positive.kappa" + std::to_string(k), eta.positive());
  }
  ParityLinearQ v{q(5, 4), q(1)};
  auto root = sqrtExact(v);
  checkFlag(out, "free.sqrt_exact", root && (*root) * (*root) == v);
  return out;
}

}  // namespace

VerificationReport verifyTables(unsigned workers) {
  Context c;
  c.q = deriveMetricSeries(MetricParams::formal(4));
  c.q2 = deriveMetricSeries(MetricParams::formal(2));
  std::vector<OperatorExpr> qs;
  for (int j = 1; j <= 4; ++j) qs.push_back(c.q.q(j));
  c.r5 = buildR(5, qs);

  std::vector<std::function<Records(const Context&)>> groups = {groupStructure, groupLowOrders, groupKernels,
                                                                 groupTables,    groupQ3,        groupObservables,
                                                                 groupFreeParticle};
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  std::vector<Records> results(groups.size());
  for (std::size_t start = 0; start < groups.size(); start += workers) {
    std::vector<std::future<Records>> batch;
    for (std::size_t g = start; g < std::min(groups.size(), start + workers); ++g)
      batch.push_back(std::async(std::launch::async, groups[g], std::cref(c)));
    for (std::size_t i = 0; i < batch.size(); ++i) results[start + i] = batch[i].get();
  }
  VerificationReport rep;
  for (auto& r : results)
    for (auto& rec : r) rep.records.push_back(std::move(rec));
  return rep;
}

}  // namespace qhm
