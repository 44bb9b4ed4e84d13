#ifndef GRAM_EXPERIMENT_HPP
#define GRAM_EXPERIMENT_HPP

#include <map>
#include <memory>
#include <unordered_map>
#include <vector>

#include "gram/engine.hpp"
#include "gram/gram_router.hpp"
#include "gram/metrics.hpp"
#include "gram/ndn_router.hpp"
#include "gram/scenario.hpp"
#include "gram/topology.hpp"
#include "gram/workload.hpp"

namespace gram {

// Everything derived from a scenario before the engine starts: the sampled
// topology, the static routes, and the producer/consumer placement.
struct NetworkSetup {
  Topology topo;
  StaticRoutes routes;
  std::map<NamePrefix, RouterId> producers;
  std::vector<RouterId> producer_router_list;
  std::vector<RouterId> consumer_routers;
  Catalog catalog{1, 1};
  ContentName multicast_group;
  RouterId multicast_source = 0;
};

NetworkSetup build_network_setup(const Scenario& s);

// Instantiates one forwarding-plane router per topology node.
std::unique_ptr<Engine> build_engine(const Scenario& s, const NetworkSetup& setup);

// Aggregate consumer process per consumer router: Poisson request arrivals,
// Zipf object choice, duplicate local requests, and consumer-side
// retransmission with an RTT-tracking timeout.
class ConsumerDriver {
public:
  struct Params {
    Plane plane = Plane::Gram;
    double rate_per_router = 50;
    double duration_ms = 40000;
    double measure_from_ms = 10000;
    double duplicate_prob = 0.01;
    double rtt_initial_ms = 1000;
    double rtt_timeout_factor = 2;
    int max_tries = 3;
  };

  ConsumerDriver(Engine& engine, std::vector<RouterId> consumer_routers,
                 const RequestSampler& sampler, Params params, std::uint64_t seed);

  void start();

  // Single manual request (tests). Returns the consumer id used.
  ConsumerId issue_request(RouterId router, const ContentName& name, double at_ms);

  void on_consumer_message(ConsumerId c, const Message& msg, double now);

  std::uint64_t delivered() const { return delivered_; }
  std::uint64_t failed() const { return failed_; }
  std::uint64_t requests_issued() const { return requests_issued_; }
  std::uint64_t delay_samples() const { return delay_samples_; }
  double mean_delay_ms() const {
    return delay_samples_ ? delay_sum_ / static_cast<double>(delay_samples_) : 0;
  }

private:
  struct Pending {
    RouterId router = 0;
    ContentName name;
    double t0 = 0;
    int tries = 1;
    bool done = false;
    bool measured = false;
  };

  void schedule_next_arrival(RouterId router);
  void start_request(RouterId router, const ContentName& name, bool allow_duplicate);
  void send_interest(ConsumerId c, Pending& p);
  void arm_retransmit(ConsumerId c);

  // Smoothed RTT plus mean deviation, one estimator per consumer router.
  struct RttState {
    double srtt;
    double var;
  };
  RttState& rtt_estimate(RouterId router);

  Engine& engine_;
  std::vector<RouterId> consumer_routers_;
  const RequestSampler& sampler_;
  Params params_;
  Rng workload_rng_;
  Rng nonce_rng_;
  std::uint32_t serial_ = 0;
  std::unordered_map<ConsumerId, Pending> pending_;
  std::unordered_map<RouterId, RttState> rtt_;
  std::uint64_t requests_issued_ = 0;
  std::uint64_t delivered_ = 0;
  std::uint64_t failed_ = 0;
  std::uint64_t delay_samples_ = 0;
  double delay_sum_ = 0;
};

// Multicast receivers joining one group and pulling (or being pushed)
// a run of sequenced objects.
class MulticastDriver {
public:
  struct Params {
    bool pull = true;
    std::uint64_t objects = 100;
    double push_rate_per_s = 50;
    double join_at_ms = 1;
    double first_pull_at_ms = 500;
  };

  MulticastDriver(Engine& engine, ContentName group, RouterId source,
                  std::vector<RouterId> receiver_routers, Params params);

  void start();
  void on_consumer_message(ConsumerId c, const Message& msg, double now);

  // mc values received per receiver index.
  const std::vector<std::uint64_t>& received_count() const { return received_; }
  std::uint64_t replies_seen() const { return replies_seen_; }
  ConsumerId receiver_id(std::size_t idx) const;

private:
  void schedule_push(std::uint64_t mc);

  Engine& engine_;
  ContentName group_;
  RouterId source_;
  std::vector<RouterId> receiver_routers_;
  Params params_;
  std::vector<std::uint64_t> received_;
  std::vector<std::uint64_t> highest_mc_;
  std::uint64_t replies_seen_ = 0;
};

struct RunOutput {
  RunMetrics metrics;
  std::vector<SampleRow> table_series;
};

// Builds the network, runs the scenario to completion, and reduces metrics.
class Experiment {
public:
  explicit Experiment(Scenario s);

  RunOutput run();

  Engine& engine() { return *engine_; }
  const NetworkSetup& setup() const { return setup_; }
  const Scenario& scenario() const { return scenario_; }
  ConsumerDriver& consumers() { return *consumers_; }
  MulticastDriver* multicast() { return multicast_.get(); }

private:
  Scenario scenario_;
  NetworkSetup setup_;
  std::unique_ptr<Engine> engine_;
  std::unique_ptr<RequestSampler> sampler_;
  std::unique_ptr<ConsumerDriver> consumers_;
  std::unique_ptr<MulticastDriver> multicast_;
};

RunOutput run_scenario(const Scenario& s);

}  // namespace gram

#endif  // GRAM_EXPERIMENT_HPP
