#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gram/scenario.hpp"

using namespace gram;

TEST_CASE("defaults survive an empty scenario") {
  Scenario s = parse_scenario("{}", "test");
  CHECK(s.seed == 1);
  CHECK(s.duration_ms == 40000);
  CHECK(s.plane == Plane::Gram);
  CHECK(s.caching == CachingPolicy::OnPath);
  CHECK(s.topology.node_count == 50);
  CHECK(s.zipf_alpha == 0.7);
  CHECK(s.interval_length == 65536);
}

TEST_CASE("fields parse from every section") {
  const char* text = R"({
    "seed": 9,
    "plane": "ndn",
    "caching": "edge",
    "topology": {"nodes": 20, "radius_m": 30},
    "routing": {"mode": "adversarial", "adversarial_max_distance": 6},
    "aid": {"interval_length": 128, "interval_start": {"0": 100}},
    "workload": {"zipf_alpha": 1.0, "rate_per_router": 500, "consumer_routers": 4,
                 "producer_routers": 2, "catalog_size": 1000},
    "consumer": {"max_tries": 2},
    "ndn": {"pit_lifetime_ms": 500},
    "multicast": {"enabled": true, "mode": "push", "receivers": 3}
  })";
  Scenario s = parse_scenario(text, "test");
  CHECK(s.seed == 9);
  CHECK(s.plane == Plane::Ndn);
  CHECK(s.caching == CachingPolicy::Edge);
  CHECK(s.topology.node_count == 20);
  CHECK(s.routing == RoutingMode::Adversarial);
  CHECK(s.adversarial_max_distance == 6);
  CHECK(s.interval_length == 128);
  CHECK(s.interval_start.at(0) == 100);
  CHECK(s.zipf_alpha == 1.0);
  CHECK(s.max_tries == 2);
  CHECK(s.pit_lifetime_ms == 500);
  CHECK(s.multicast.enabled);
  CHECK(s.multicast.mode == "push");
}

TEST_CASE("unknown keys are rejected with the offending name") {
  CHECK_THROWS_WITH_AS(parse_scenario(R"({"sede": 1})", "f"),
                       doctest::Contains("unknown key 'sede'"), ScenarioError);
  CHECK_THROWS_WITH_AS(parse_scenario(R"({"workload": {"zip_alpha": 1}})", "f"),
                       doctest::Contains("zip_alpha"), ScenarioError);
}

TEST_CASE("malformed json reports the origin") {
  CHECK_THROWS_WITH_AS(parse_scenario("{", "bad.json"),
                       doctest::Contains("bad.json"), ScenarioError);
  CHECK_THROWS_AS(parse_scenario("[1,2]", "f"), ScenarioError);
}

TEST_CASE("validation catches out-of-range settings") {
  CHECK_THROWS_AS(parse_scenario(R"({"duration_ms": 0})", "f"), ScenarioError);
  CHECK_THROWS_AS(parse_scenario(R"({"warmup_ms": 40000})", "f"), ScenarioError);
  CHECK_THROWS_AS(parse_scenario(R"({"topology": {"nodes": 1}})", "f"), ScenarioError);
  CHECK_THROWS_AS(parse_scenario(R"({"workload": {"rate_per_router": 0}})", "f"),
                  ScenarioError);
  CHECK_THROWS_AS(parse_scenario(R"({"workload": {"consumer_routers": 99}})", "f"),
                  ScenarioError);
  CHECK_THROWS_AS(parse_scenario(R"({"workload": {"duplicate_request_prob": 1.5}})", "f"),
                  ScenarioError);
  CHECK_THROWS_AS(parse_scenario(R"({"aid": {"interval_length": 10}})", "f"),
                  ScenarioError);
  CHECK_THROWS_AS(
      parse_scenario(R"({"multicast": {"enabled": true, "mode": "flood"}})", "f"),
      ScenarioError);
  CHECK_THROWS_AS(parse_scenario(R"({"plane": "ccn"})", "f"), ScenarioError);
  CHECK_THROWS_AS(parse_scenario(R"({"routing": {"mode": "weird"}})", "f"),
                  ScenarioError);
}

TEST_CASE("missing file reports a scenario error") {
  CHECK_THROWS_AS(load_scenario("/nonexistent/path.json"), ScenarioError);
}
