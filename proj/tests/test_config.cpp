#include <doctest.h>

#include "qhm/config.hpp"

using namespace qhm;

TEST_CASE("config text") {
  ConfigMap m = parseConfigText("# run\norder = 3\n l1 = -3/4  # comment\nk2=2\n\nepsilon = 0.2\nmode = physical\n");
  RunConfig c = RunConfig::fromMap(m);
  CHECK(c.order == 3);
  CHECK(c.flow.eps == 0.2);
  CHECK(c.flow.mode == FlowMode::Physical);
  MetricParams p = c.metricParams();
  CHECK(p.lambda[0] == ParamPoly(GaussianRational(Rational(-3, 4))));
  CHECK(p.kappa[1] == ParamPoly(2));
  CHECK(p.lambda[1] == ParamPoly::symbol(Symbol::lambda(2)));
  m["params"] = "formal";
  CHECK(RunConfig::fromMap(m).metricParams().lambda[0] == ParamPoly::symbol(Symbol::lambda(1)));
}

TEST_CASE("config errors") {
  CHECK_THROWS_AS(parseConfigText("order 3"), ConfigError);
  CHECK_THROWS_AS(RunConfig::fromMap({{"order", "0"}}), ConfigError);
  CHECK_THROWS_AS(RunConfig::fromMap({{"order", "two"}}), ConfigError);
  CHECK_THROWS_AS(RunConfig::fromMap({{"l1", "0.5"}}), ConfigError);
  CHECK_THROWS_AS(RunConfig::fromMap({{"colour", "red"}}), ConfigError);
  CHECK_THROWS_AS(RunConfig::fromMap({{"dt", "-1"}}), ConfigError);
  CHECK_THROWS_AS(RunConfig::fromMap({{"mode", "fast"}}), ConfigError);
  CHECK_THROWS_AS(readConfigFile("/nonexistent/run.cfg"), ConfigError);
  CHECK(parseExactRational("+6/4") == Rational(3, 2));
  CHECK_THROWS_AS(parseExactRational("1/0"), ConfigError);
}
