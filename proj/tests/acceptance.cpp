// One line per acceptance criterion. Exit status is nonzero only when a
// criterion fails on an internal invariant; disagreement with a printed
// value alone is reported but does not fail the run.
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "qhm/classical.hpp"
#include "qhm/observables.hpp"
#include "qhm/verify.hpp"

using namespace qhm;

namespace {

enum class Verdict { Pass, Finding, Fail };

struct Outcome {
  Verdict verdict;
  bool internalOk;
  std::string detail;
};

struct Tally {
  int checked = 0, pass = 0, finding = 0, fail = 0;
  std::vector<std::string> differing;
  void add(const CheckRecord& r) {
    ++checked;
    if (r.status == CheckStatus::Pass) ++pass;
    if (r.status == CheckStatus::Finding) {
      ++finding;
      differing.push_back(r.computed.size() > 40 ? r.label : r.label + " = " + r.computed);
    }
    if (r.status == CheckStatus::Fail) ++fail;
  }
  std::string summary() const {
    std::string s = std::to_string(pass) + "/" + std::to_string(checked) + " checks agree";
    if (!differing.empty()) {
      s += "; differing:";
      for (std::size_t i = 0; i < differing.size() && i < 6; ++i) s += " " + differing[i] + ";";
      if (differing.size() > 6) s += " +" + std::to_string(differing.size() - 6) + " more";
    }
    return s;
  }
};

bool startsWith(const std::string& s, const std::string& p) { return s.rfind(p, 0) == 0; }

Tally tally(const VerificationReport& rep, const std::vector<std::string>& prefixes) {
  Tally t;
  for (const auto& r : rep.records)
    for (const auto& p : prefixes)
      if (startsWith(r.label, p)) {
        t.add(r);
        break;
      }
  return t;
}

// Every matched record must pass.
Outcome exact(const VerificationReport& rep, const std::vector<std::string>& prefixes) {
  Tally t = tally(rep, prefixes);
  if (t.checked == 0) return {Verdict::Fail, false, "no checks found"};
  bool ok = t.finding == 0 && t.fail == 0;
  return {ok ? Verdict::Pass : Verdict::Fail, t.fail == 0, t.summary()};
}

}  // namespace

int main() {
  VerificationReport rep = verifyTables(0);
  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria;

  criteria.emplace_back("q-coefficients q1..q5", [&] { return exact(rep, {"q_coefficient."}); });

  criteria.emplace_back("Q1 general form and BBJ comparison", [&] {
    Outcome o = exact(rep, {"Q1.general", "bbj.lambda_tilde_minus_alpha", "bbj.equal_to_general_Q1",
                            "bbj.alpha0.lambda_tilde", "bbj.symmetric_form"});
    o.detail += " (constant term read as alpha/p^5; the alpha/p reading is inhomogeneous)";
    return o;
  });

  criteria.emplace_back("Q2 = p^-10 (lambda2 - kappa2 P)", [&] { return exact(rep, {"Q2.explicit"}); });

  criteria.emplace_back("Q3 symmetric-form coefficients and d-combinations", [&] {
    Tally cells = tally(rep, {"table_c.", "Q3.d", "Q3.lambda3_tilde", "Q3.kappa3_tilde"});
    Tally inv = tally(rep, {"invariant.order3.", "Q3.symmetric.hermitian", "Q3.component_decomposition",
                            "R3.component_decomposition"});
    bool internal = inv.checked > 0 && inv.pass == inv.checked;
    Verdict v = !internal ? Verdict::Fail : (cells.finding ? Verdict::Finding : Verdict::Pass);
    return Outcome{v, internal,
                   "invariants " + std::to_string(inv.pass) + "/" + std::to_string(inv.checked) + "; printed cells " +
                       cells.summary()};
  });

  criteria.emplace_back("S and T components: kernels, coefficient tables, wave round trip", [&] {
    Tally printed = tally(rep, {"table_a.", "table_b.", "S00.kernel", "S01.kernel", "S10.kernel", "S11.kernel",
                              "S02.kernel", "S20.kernel", "T00.kernel", "T01.kernel", "T10.kernel", "T11.kernel",
                              "T02.kernel", "T20.kernel"});
    Tally wave = tally(rep, {"T00.wave", "T01.wave", "T10.wave", "T11.wave", "T02.wave", "T20.wave", "S00.kernel.anti",
                             "S01.kernel.anti", "S10.kernel.anti", "S11.kernel.anti", "S02.kernel.anti",
                             "S20.kernel.anti"});
    bool internal = wave.checked == 12 && wave.pass == wave.checked && printed.fail == 0;
    bool all = internal && printed.pass == printed.checked;
    return Outcome{all ? Verdict::Pass : Verdict::Fail, internal,
                   "wave round trip and Hermiticity " + std::to_string(wave.pass) + "/" + std::to_string(wave.checked) +
                       "; printed " + printed.summary()};
  });

  criteria.emplace_back("wave operator on the Q1 kernel = -4i x^3 delta(x-y)",
                        [&] { return exact(rep, {"Q1.kernel.wave_equation", "Q1.kernel.wave_equals_2R1"}); });

  criteria.emplace_back("commutators with Q1, Q2 and the series X, P, h", [&] {
    return exact(rep, {"commutator.", "observable.", "hermitian_h."});
  });

  criteria.emplace_back("classical limit", [&] { return exact(rep, {"classical."}); });

  criteria.emplace_back("structural invariants j = 1..3", [&] {
    return exact(rep, {"invariant.order1.", "invariant.order2.", "invariant.order3."});
  });

  criteria.emplace_back("free particle", [&] { return exact(rep, {"free."}); });

  criteria.emplace_back("classical orbit at eps = 0.1, m = 1", [&] {
    ClassicalHamiltonian hc = classicalLimit(equivalentHermitian(deriveMetricSeries(MetricParams::formal(2))));
    FlowConfig c;
    FlowResult a = hamiltonFlow(hc, c);
    c.dt /= 2;
    FlowResult b = hamiltonFlow(hc, c);
    double ratio = a.maxDrift / b.maxDrift;
    bool ok = a.periodFound && a.maxDrift < 1e-8 && a.closure < 1e-6 && ratio > 8 && ratio < 32;
    char buf[256];
    std::snprintf(buf, sizeof buf, "period %.9f, drift %.3e, closure %.3e, drift ratio under dt/2 %.2f", a.period,
                  a.maxDrift, a.closure, ratio);
    return Outcome{ok ? Verdict::Pass : Verdict::Fail, ok, buf};
  });

  criteria.emplace_back("deterministic verification report", [&] {
    std::string again = verifyTables(1).str();
    bool ok = again == rep.str();
    return Outcome{ok ? Verdict::Pass : Verdict::Fail, ok,
                   ok ? std::to_string(again.size()) + " bytes identical across runs and worker counts" : "reports differ"};
  });

  bool internal = true;
  int n = 0;
  for (auto& [name, run] : criteria) {
    ++n;
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {Verdict::Fail, false, std::string("exception: ") + e.what()};
    }
    internal = internal && o.internalOk;
    const char* tag = o.verdict == Verdict::Pass ? "PASS" : o.verdict == Verdict::Finding ? "FINDING" : "FAIL";
    std::printf("criterion %2d %-7s %s | %s\n", n, tag, name.c_str(), o.detail.c_str());
  }
  std::printf("internal invariants %s\n", internal ? "hold" : "violated");
  return internal ? 0 : 1;
}
