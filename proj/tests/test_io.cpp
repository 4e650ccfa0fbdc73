#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "tempora/causal.hpp"
#include "tempora/errors.hpp"
#include "tempora/histories.hpp"
#include "tempora/json_io.hpp"
#include "tempora/pdm.hpp"
#include "tempora/procmat.hpp"
#include "tempora/random.hpp"
#include "tempora/report.hpp"
#include "tempora/verify.hpp"

using namespace tempora;

TEST_CASE("matrix schema") {
  const CMatrix m{{cplx(1, 2), 0.5}, {cplx(0, -1), 3}};
  const json j = m;
  CHECK(j["rows"] == 2);
  CHECK(j["cols"] == 2);
  CHECK(j["entries"][0] == json::array({1.0, 2.0}));
  CHECK(j["entries"][2] == json::array({0.0, -1.0}));
  CHECK(j.get<CMatrix>() == m);
  CHECK_THROWS_AS(json::parse(R"({"rows":2,"cols":2,"entries":[[1,0]]})").get<CMatrix>(), ValidationError);
}

TEST_CASE("domain round trips") {
  Rng rng(91);
  const Channel ch = random_channel(rng, 2, 3);
  const Channel ch2 = json(ch).get<Channel>();
  REQUIRE(ch2.kraus.size() == 3);
  for (std::size_t k = 0; k < 3; ++k) CHECK(ch2.kraus[k] == ch.kraus[k]);

  const Instrument in = random_pm_instrument(rng, 2, 1);
  const Instrument in2 = json(in).get<Instrument>();
  CHECK(in2.labels() == in.labels());
  CHECK(in2.effect(1) == in.effect(1));

  const CorrelationTable t = indefinite_order_demo(DemoRoute::PM).table;
  CHECK(json(t).get<CorrelationTable>() == t);

  const Pdm r = pdm_bipartite_channel(random_state(rng, 2), ch);
  const Pdm r2 = json(r).get<Pdm>();
  CHECK(r2.events == 2);
  CHECK(r2.matrix == r.matrix);

  const ProcessMatrix w = channel_process(random_state(rng, 2), random_unitary(rng, 2));
  const ProcessMatrix w2 = json(w).get<ProcessMatrix>();
  CHECK(w2.spec == w.spec);
  CHECK(w2.matrix == w.matrix);

  const auto inst = random_history_instance(rng, 2, 1);
  const HistoryFamily f = pauli_history_family(inst.rho, inst.unitaries, inst.paulis);
  const HistoryFamily f2 = json(f).get<HistoryFamily>();
  CHECK(decoherence_matrix(f2) == decoherence_matrix(f));

  const Strategy s = random_correlation_strategy(rng);
  const Strategy s2 = json(s).get<Strategy>();
  const CMatrix tau = random_state(rng, s.first[0].dim_in());
  CHECK(qcsg_temporal_correlation(s2, tau) == qcsg_temporal_correlation(s, tau));

  const GameSpec g = GameSpec::chsh();
  const GameSpec g2 = json(g).get<GameSpec>();
  CHECK(g2.l == g.l);
  CHECK(g2.pi == g.pi);
}

TEST_CASE("serialize") {
  CHECK(serialize(json::object(), Format::JSON) == "{}");

  const json one = make_table({"tau", "amplitude"}, {{1.0, 1.0819767068693265}});
  const std::string csv = serialize(one, Format::CSV);
  CHECK(csv == "tau,amplitude\n1,1.0819767068693265\n");
  std::istringstream lines(csv);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) ++count;
  CHECK(count == 2);

  const json flat = {{"gyni", 0.5334708691207961}, {"causal", false}, {"route", "pm"}};
  CHECK(serialize(flat, Format::CSV) == "causal,gyni,route\nfalse,0.5334708691207961,pm\n");

  json nested = flat;
  nested["inner"] = {{"x", 1}};
  CHECK_THROWS_AS(serialize(nested, Format::CSV), ValidationError);

  for (const json& fixture : {flat, one, nested, json::object()})
    CHECK(json::parse(serialize(fixture, Format::JSON)) == fixture);

  CHECK(format_number(0.1) == "0.1");
  CHECK(format_number(1e-300) == "1e-300");
  CHECK(parse_format("csv") == Format::CSV);
  CHECK_THROWS_AS(parse_format("xml"), ValidationError);
}

TEST_CASE("check results") {
  const json j = to_json(CheckResult{"x", true, 1e-12, 1e-10, 5, ""});
  CHECK(j["passed"] == true);
  CHECK(j["cases"] == 5);
}
