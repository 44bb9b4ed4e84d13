#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <memory>
#include <set>

#include "gram/experiment.hpp"
#include "helpers.hpp"

using namespace gram;
using namespace gram::testing;

namespace {

// Line 0 -- 1 with a producer of /p0 at router 1, on the chosen plane.
struct Pair {
  std::unique_ptr<Engine> engine;
  Catalog catalog{100000, 1};

  explicit Pair(Plane plane, double rate_bps = 1e9) {
    auto topo = make_topology(2, {{0, 1}}, 15, rate_bps);
    engine = std::make_unique<Engine>(std::move(topo));

    Fib fib0 = single_entry_fib("/p0", {{1, 1}});
    ProducerLookup lookup = [cat = catalog](const ContentName& n) -> std::optional<Payload> {
      if (!cat.produced_by(n, 0))
        return std::nullopt;
      return Payload{n.to_string(), cat.payload_size()};
    };

    if (plane == Plane::Gram) {
      auto cfg0 = shared_interval_config(0, {1}, 3, 1024);
      engine->add_router(std::make_unique<GramRouter>(
          std::move(cfg0), std::move(fib0), std::vector<NamePrefix>{}, nullptr));
      auto cfg1 = shared_interval_config(1, {0}, 9, 1024);
      engine->add_router(std::make_unique<GramRouter>(
          std::move(cfg1), Fib{}, std::vector<NamePrefix>{NamePrefix::parse("/p0")},
          std::move(lookup)));
    } else {
      NdnRouter::Config cfg0;
      cfg0.id = 0;
      engine->add_router(std::make_unique<NdnRouter>(
          std::move(cfg0), std::move(fib0), std::vector<NamePrefix>{}, nullptr));
      NdnRouter::Config cfg1;
      cfg1.id = 1;
      engine->add_router(std::make_unique<NdnRouter>(
          std::move(cfg1), Fib{}, std::vector<NamePrefix>{NamePrefix::parse("/p0")},
          std::move(lookup)));
    }
  }
};

}  // namespace

TEST_CASE("network setup splits roles disjointly") {
  Scenario s;
  s.topology.node_count = 30;
  s.topology.radius_m = 30;
  s.consumer_routers = 8;
  s.producer_routers = 4;
  NetworkSetup setup = build_network_setup(s);

  CHECK(setup.producer_router_list.size() == 4);
  CHECK(setup.consumer_routers.size() == 8);
  std::set<RouterId> all(setup.producer_router_list.begin(),
                         setup.producer_router_list.end());
  all.insert(setup.consumer_routers.begin(), setup.consumer_routers.end());
  CHECK(all.size() == 12);  // no overlap
  CHECK(setup.producers.size() == 4);
  CHECK(setup.catalog.size() == s.catalog_size);
}

TEST_CASE("reported delay equals the traced request-to-data interval") {
  Pair net(Plane::Gram);
  ConsumerDriver::Params p;
  p.plane = Plane::Gram;
  p.measure_from_ms = 0;
  Catalog catalog(100, 1);
  RequestSampler sampler(catalog, 0.7, 0, 0, 1);
  ConsumerDriver driver(*net.engine, {0}, sampler, p, 1);
  net.engine->set_consumer_sink([&](ConsumerId c, const Message& m, double now) {
    driver.on_consumer_message(c, m, now);
  });

  double issued_at = 100, delivered_at = -1;
  net.engine->set_trace_sink([&](const TraceRecord& rec) {
    if (rec.to_consumer && std::holds_alternative<DataPacket>(rec.msg))
      delivered_at = rec.time;
  });

  driver.issue_request(0, ContentName::parse("/p0/7"), issued_at);
  net.engine->run_until(5000);

  CHECK(driver.delivered() == 1);
  CHECK(driver.delay_samples() == 1);
  REQUIRE(delivered_at > issued_at);
  CHECK(driver.mean_delay_ms() == delivered_at - issued_at);
}

TEST_CASE("unanswered requests retransmit and then fail") {
  Pair net(Plane::Gram);
  ConsumerDriver::Params p;
  p.plane = Plane::Gram;
  p.rtt_initial_ms = 50;
  p.max_tries = 3;
  Catalog catalog(100, 1);
  RequestSampler sampler(catalog, 0.7, 0, 0, 1);
  ConsumerDriver driver(*net.engine, {0}, sampler, p, 1);
  // consumer sink left unset: responses vanish, as on a dead last hop

  driver.issue_request(0, ContentName::parse("/p0/7"), 0);
  net.engine->run_until(10000);

  CHECK(driver.failed() == 1);
  CHECK(driver.delivered() == 0);
  // all three tries reached the edge router
  CHECK(net.engine->router(0).counters().interest_receptions == 3);
}

TEST_CASE("failure replies resolve a request immediately") {
  Pair net(Plane::Gram);
  ConsumerDriver::Params p;
  p.plane = Plane::Gram;
  Catalog catalog(100, 1);
  RequestSampler sampler(catalog, 0.7, 0, 0, 1);
  ConsumerDriver driver(*net.engine, {0}, sampler, p, 1);
  net.engine->set_consumer_sink([&](ConsumerId c, const Message& m, double now) {
    driver.on_consumer_message(c, m, now);
  });

  driver.issue_request(0, ContentName::parse("/unrouted/1"), 0);
  net.engine->run_until(100);
  CHECK(driver.failed() == 1);
}

TEST_CASE("pit occupancy follows the arrival rate times the response time") {
  // M/D/inf at the edge router: Poisson arrivals, deterministic response
  // time R, so the long-run mean entry count is rate * R.
  Pair net(Plane::Ndn);
  ConsumerDriver::Params p;
  p.plane = Plane::Ndn;
  p.rate_per_router = 200;
  p.duration_ms = 30000;
  p.measure_from_ms = 0;
  p.duplicate_prob = 0;
  Catalog catalog(1000000, 1);
  RequestSampler sampler(catalog, 0.0, 0, 0, 1);  // near-uniform, few repeats
  ConsumerDriver driver(*net.engine, {0}, sampler, p, 1);
  net.engine->set_consumer_sink([&](ConsumerId c, const Message& m, double now) {
    driver.on_consumer_message(c, m, now);
  });

  double pit_sum = 0;
  std::uint64_t samples = 0;
  std::function<void()> sample_fn = [&]() {
    pit_sum += static_cast<double>(net.engine->router(0).table_sizes().pit);
    ++samples;
    if (net.engine->now() + 1 <= p.duration_ms)
      net.engine->schedule(1, sample_fn);
  };
  net.engine->schedule_at(2000, sample_fn);

  driver.start();
  net.engine->run_until(p.duration_ms);

  double mean_pit = pit_sum / static_cast<double>(samples);
  // R ~ one round trip over two 15 ms links; serialization at 1 Gbps is
  // negligible. Expected occupancy 0.2/ms * 30 ms = 6.
  double expected = (p.rate_per_router / 1000.0) * 30.0;
  CHECK(mean_pit > 0.5 * expected);
  CHECK(mean_pit < 1.5 * expected);
}
