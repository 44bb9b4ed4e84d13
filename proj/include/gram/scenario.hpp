#ifndef GRAM_SCENARIO_HPP
#define GRAM_SCENARIO_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

#include "gram/aid.hpp"
#include "gram/content_store.hpp"
#include "gram/topology.hpp"

namespace gram {

class ScenarioError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

enum class Plane { Gram, Ndn };

Plane plane_from_string(const std::string& s);
std::string to_string(Plane p);

enum class RoutingMode { Normal, Adversarial };

struct MulticastConfig {
  bool enabled = false;
  std::string mode = "pull";  // "pull" | "push"
  std::uint32_t receivers = 5;
  std::uint64_t objects = 100;
  double push_rate_per_s = 50;
};

// Full experiment configuration for one run.
struct Scenario {
  std::uint64_t seed = 1;
  double duration_ms = 40000;
  double warmup_ms = 10000;
  double sample_interval_ms = 100;
  Plane plane = Plane::Gram;
  CachingPolicy caching = CachingPolicy::OnPath;
  TopologyParams topology;
  RoutingMode routing = RoutingMode::Normal;
  std::uint32_t adversarial_max_distance = 8;

  Aid interval_length = 65536;
  std::map<RouterId, Aid> interval_start;  // default: every router at 0

  std::uint64_t catalog_size = 100000;
  double zipf_alpha = 0.7;
  double rate_per_router = 50;  // Interests/s per consumer router
  std::uint32_t consumer_routers = 10;
  std::uint32_t producer_routers = 5;
  double temporal_locality = 0;  // 0 = off
  double duplicate_request_prob = 0.01;
  std::uint32_t payload_size = 1024;
  std::size_t cache_capacity = 100;

  double rtt_initial_ms = 1000;
  double rtt_timeout_factor = 2;
  int max_tries = 3;
  double pit_lifetime_ms = 2000;
  double tick_interval_ms = 100;

  MulticastConfig multicast;
};

// Parses a JSON scenario file. Unknown keys are rejected; all keys are
// optional and default as above. Throws ScenarioError with file/position
// context on malformed input.
Scenario load_scenario(const std::string& path);
Scenario parse_scenario(const std::string& text, const std::string& origin = "<string>");

// Cross-field checks (positive rates, enough routers, interval length able
// to hold one flow per possible origin). Throws ScenarioError.
void validate(const Scenario& s);

}  // namespace gram

#endif  // GRAM_SCENARIO_HPP
