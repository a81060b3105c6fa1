#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "qhm/perturbation.hpp"
#include "qhm/serialize.hpp"

using namespace qhm;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(QHM_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

fs::path scratch(const std::string& name) {
  fs::path p = fs::temp_directory_path() / ("qhmetric_cli_" + name);
  fs::remove_all(p);
  return p;
}

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

}  // namespace

TEST_CASE("usage errors exit with 2") {
  CHECK(run("derive --order 0").code == 2);
  CHECK(run("derive --order 1 --l1 0.25").code == 2);
  CHECK(run("derive --bogus").code == 2);
  CHECK(run("").code == 2);
  CHECK(run("derive --config /nonexistent.cfg").code == 2);
  CHECK(run("orbit --dt -1").code == 2);
}

TEST_CASE("derive at order 1 with zero parameters") {
  Run r = run("derive --order 1 --l1 0 --k1 0");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "Q1 symmetric = [1/4]*{x^4,p^-1} + [3/4]*{x^2,p^-3} + [3]*p^-5\n"));
  CHECK(contains(r.out, "Hc = 1/2*m^-1*x^0*p^2 + 3/8*m^1*eps^2*x^6*p^-2\n"));
}

TEST_CASE("derive writes re-parsable expression files") {
  fs::path dir = scratch("derive");
  REQUIRE(run("derive --order 3 --params formal --out " + dir.string()).code == 0);
  QSeries q = deriveMetricSeries(MetricParams::formal(3));
  for (int j = 1; j <= 3; ++j) {
    std::string text = slurp(dir / ("Q" + std::to_string(j) + ".txt"));
    REQUIRE(!text.empty());
    CHECK(parseOperatorExpr(text.substr(0, text.size() - 1)) == q.q(j));
    std::string r = slurp(dir / ("R" + std::to_string(j) + ".txt"));
    CHECK(parseOperatorExpr(r.substr(0, r.size() - 1)) == q.orders[j - 1].r);
  }
  std::string sym = slurp(dir / "Q3.sym.txt");
  CHECK(contains(sym, "[1/80]*{x^10,p^-5}"));
  CHECK(contains(sym, "-2275/2*l1^2"));
  CHECK(fs::exists(dir / "X.txt"));
  CHECK(fs::exists(dir / "h.txt"));
  CHECK(contains(slurp(dir / "derive.log"), "order 3:"));
  fs::path again = scratch("derive2");
  REQUIRE(run("derive --order 3 --params formal --out " + again.string()).code == 0);
  for (const auto& e : fs::directory_iterator(dir)) CHECK(slurp(e.path()) == slurp(again / e.path().filename()));
}

TEST_CASE("config file with flag override") {
  fs::path cfg = scratch("cfg.txt");
  std::ofstream(cfg) << "# run settings\norder = 2\nl1 = 1/2\n";
  Run fromFile = run("derive --config " + cfg.string());
  CHECK(fromFile.code == 0);
  CHECK(contains(fromFile.out, "Q2 = "));
  Run overridden = run("derive --config " + cfg.string() + " --order 1");
  CHECK(overridden.code == 0);
  CHECK(!contains(overridden.out, "Q2 = "));
  CHECK(contains(overridden.out, "[7/2]*p^-5"));
}

TEST_CASE("verify-tables is deterministic and separates findings from failures") {
  fs::path a = scratch("v1.txt"), b = scratch("v2.txt");
  CHECK(run("verify-tables --out " + a.string()).code == 0);
  CHECK(run("verify-tables --workers 1 --out " + b.string()).code == 0);
  std::string ra = slurp(a);
  CHECK(ra == slurp(b));
  CHECK(contains(ra, "PASS table_c.00.5 | computed: 1/80 | expected: 1/80\n"));
  CHECK(contains(ra, "PASS table_a.00.10 | computed: 1/40 | expected: 1/40\n"));
  CHECK(contains(ra, "PASS table_b.20.1 | computed: -1/76640256 | expected: -1/76640256\n"));
  CHECK(contains(ra, "FINDING table_b.01.1"));
  CHECK(contains(ra, "fail 0\n"));
}

TEST_CASE("orbit") {
  fs::path csv = scratch("orbit.csv");
  Run r = run("orbit --out " + csv.string());
  CHECK(r.code == 0);
  CHECK(contains(r.out, "closed yes"));
  double drift = std::stod(r.out.substr(r.out.find("drift_max ") + 10));
  CHECK(drift < 1e-8);
  std::string rows = slurp(csv);
  CHECK(rows.rfind("t,x,p,H\n", 0) == 0);
  Run halfRun = run("orbit --dt 0.005 --out " + csv.string());
  double half = std::stod(halfRun.out.substr(halfRun.out.find("drift_max ") + 10));
  CHECK(drift / half > 8);
  CHECK(drift / half < 32);
  Run free = run("orbit --epsilon 0 --steps 4");
  CHECK(free.code == 0);
  CHECK(contains(free.out, "0.020000000000,0.020000000000,1.000000000000,0.500000000000\n"));
  CHECK(run("orbit --mode physical --out " + csv.string()).code == 1);
}

TEST_CASE("free-particle report") {
  Run r = run("free-particle --kappa 1");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "ccr pass\n"));
  CHECK(contains(r.out, "positivity pass\n"));
  CHECK(contains(r.out, "localized weight 1.127625965206 0.521095305494\n"));
  Run plain = run("free-particle --kappa 0");
  CHECK(contains(plain.out, "eta 1.000000000000 + 0.000000000000*P\n"));
  CHECK(contains(plain.out, "localized weight 1.000000000000 0.000000000000\n"));
}

TEST_CASE("observables and classical") {
  Run o = run("observables --order 1");
  CHECK(o.code == 0);
  CHECK(contains(o.out, "X[0] = [1]*x^1*p^0\n"));
  Run c = run("classical --params formal");
  CHECK(c.out == "1/2*m^-1*x^0*p^2 + 3/8*m^1*eps^2*x^6*p^-2\n");
}
