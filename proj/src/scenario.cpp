#include "gram/scenario.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace gram {

using nlohmann::json;

Plane plane_from_string(const std::string& s) {
  if (s == "gram")
    return Plane::Gram;
  if (s == "ndn")
    return Plane::Ndn;
  throw ScenarioError("unknown plane: " + s + " (expected gram|ndn)");
}

std::string to_string(Plane p) {
  return p == Plane::Gram ? "gram" : "ndn";
}

namespace {

[[noreturn]] void fail(const std::string& origin, const std::string& what) {
  throw ScenarioError(origin + ": " + what);
}

void check_known_keys(const json& obj, const std::set<std::string>& known,
                      const std::string& origin, const std::string& section) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (known.count(it.key()) == 0)
      fail(origin, "unknown key '" + it.key() + "' in " + section);
  }
}

}  // namespace

Scenario parse_scenario(const std::string& text, const std::string& origin) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(origin, e.what());
  }
  if (!root.is_object())
    fail(origin, "scenario must be a JSON object");

  Scenario s;
  try {
    check_known_keys(root,
                     {"seed", "duration_ms", "warmup_ms", "sample_interval_ms", "plane",
                      "caching", "topology", "routing", "aid", "workload", "consumer",
                      "ndn", "multicast", "tick_interval_ms"},
                     origin, "scenario");

    s.seed = root.value("seed", s.seed);
    s.duration_ms = root.value("duration_ms", s.duration_ms);
    s.warmup_ms = root.value("warmup_ms", s.warmup_ms);
    s.sample_interval_ms = root.value("sample_interval_ms", s.sample_interval_ms);
    s.tick_interval_ms = root.value("tick_interval_ms", s.tick_interval_ms);
    if (root.contains("plane"))
      s.plane = plane_from_string(root["plane"].get<std::string>());
    if (root.contains("caching"))
      s.caching = caching_policy_from_string(root["caching"].get<std::string>());

    if (root.contains("topology")) {
      const json& t = root["topology"];
      check_known_keys(t, {"nodes", "area_m", "radius_m", "delay_ms", "rate_bps"},
                       origin, "topology");
      s.topology.node_count = t.value("nodes", s.topology.node_count);
      s.topology.area_m = t.value("area_m", s.topology.area_m);
      s.topology.radius_m = t.value("radius_m", s.topology.radius_m);
      s.topology.delay_ms = t.value("delay_ms", s.topology.delay_ms);
      s.topology.rate_bps = t.value("rate_bps", s.topology.rate_bps);
    }

    if (root.contains("routing")) {
      const json& r = root["routing"];
      check_known_keys(r, {"mode", "adversarial_max_distance"}, origin, "routing");
      std::string mode = r.value("mode", std::string("normal"));
      if (mode == "normal")
        s.routing = RoutingMode::Normal;
      else if (mode == "adversarial")
        s.routing = RoutingMode::Adversarial;
      else
        fail(origin, "routing.mode must be normal|adversarial, got " + mode);
      s.adversarial_max_distance =
          r.value("adversarial_max_distance", s.adversarial_max_distance);
    }

    if (root.contains("aid")) {
      const json& a = root["aid"];
      check_known_keys(a, {"interval_length", "interval_start"}, origin, "aid");
      s.interval_length = a.value("interval_length", s.interval_length);
      if (a.contains("interval_start")) {
        for (auto it = a["interval_start"].begin(); it != a["interval_start"].end(); ++it)
          s.interval_start[static_cast<RouterId>(std::stoul(it.key()))] =
              it.value().get<Aid>();
      }
    }

    if (root.contains("workload")) {
      const json& w = root["workload"];
      check_known_keys(w,
                       {"catalog_size", "zipf_alpha", "rate_per_router",
                        "consumer_routers", "producer_routers", "temporal_locality",
                        "duplicate_request_prob", "payload_size", "cache_capacity"},
                       origin, "workload");
      s.catalog_size = w.value("catalog_size", s.catalog_size);
      s.zipf_alpha = w.value("zipf_alpha", s.zipf_alpha);
      s.rate_per_router = w.value("rate_per_router", s.rate_per_router);
      s.consumer_routers = w.value("consumer_routers", s.consumer_routers);
      s.producer_routers = w.value("producer_routers", s.producer_routers);
      s.temporal_locality = w.value("temporal_locality", s.temporal_locality);
      s.duplicate_request_prob =
          w.value("duplicate_request_prob", s.duplicate_request_prob);
      s.payload_size = w.value("payload_size", s.payload_size);
      s.cache_capacity = w.value("cache_capacity", s.cache_capacity);
    }

    if (root.contains("consumer")) {
      const json& c = root["consumer"];
      check_known_keys(c, {"rtt_initial_ms", "rtt_timeout_factor", "max_tries"},
                       origin, "consumer");
      s.rtt_initial_ms = c.value("rtt_initial_ms", s.rtt_initial_ms);
      s.rtt_timeout_factor = c.value("rtt_timeout_factor", s.rtt_timeout_factor);
      s.max_tries = c.value("max_tries", s.max_tries);
    }

    if (root.contains("ndn")) {
      const json& n = root["ndn"];
      check_known_keys(n, {"pit_lifetime_ms"}, origin, "ndn");
      s.pit_lifetime_ms = n.value("pit_lifetime_ms", s.pit_lifetime_ms);
    }

    if (root.contains("multicast")) {
      const json& m = root["multicast"];
      check_known_keys(m, {"enabled", "mode", "receivers", "objects", "push_rate_per_s"},
                       origin, "multicast");
      s.multicast.enabled = m.value("enabled", s.multicast.enabled);
      s.multicast.mode = m.value("mode", s.multicast.mode);
      s.multicast.receivers = m.value("receivers", s.multicast.receivers);
      s.multicast.objects = m.value("objects", s.multicast.objects);
      s.multicast.push_rate_per_s = m.value("push_rate_per_s", s.multicast.push_rate_per_s);
    }
  } catch (const json::exception& e) {
    fail(origin, e.what());
  }

  validate(s);
  return s;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw ScenarioError(path + ": cannot open scenario file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str(), path);
}

void validate(const Scenario& s) {
  if (s.duration_ms <= 0)
    throw ScenarioError("duration_ms must be positive");
  if (s.warmup_ms < 0 || s.warmup_ms >= s.duration_ms)
    throw ScenarioError("warmup_ms must lie in [0, duration_ms)");
  if (s.sample_interval_ms <= 0)
    throw ScenarioError("sample_interval_ms must be positive");
  if (s.topology.node_count < 2)
    throw ScenarioError("topology.nodes must be at least 2");
  if (s.rate_per_router <= 0)
    throw ScenarioError("workload.rate_per_router must be positive");
  if (s.zipf_alpha < 0)
    throw ScenarioError("workload.zipf_alpha must be non-negative");
  if (s.catalog_size == 0)
    throw ScenarioError("workload.catalog_size must be positive");
  if (s.consumer_routers == 0 || s.consumer_routers > s.topology.node_count)
    throw ScenarioError("workload.consumer_routers out of range");
  if (s.producer_routers == 0 || s.producer_routers > s.topology.node_count)
    throw ScenarioError("workload.producer_routers out of range");
  if (s.duplicate_request_prob < 0 || s.duplicate_request_prob > 1)
    throw ScenarioError("workload.duplicate_request_prob must be in [0,1]");
  if (s.interval_length < s.topology.node_count)
    throw ScenarioError("aid.interval_length must be at least the router count "
                        "(one anonymous source per possible origin)");
  if (s.multicast.enabled && s.multicast.mode != "pull" && s.multicast.mode != "push")
    throw ScenarioError("multicast.mode must be pull|push");
  if (s.multicast.enabled && s.multicast.receivers == 0)
    throw ScenarioError("multicast.receivers must be positive");
  if (s.max_tries < 1)
    throw ScenarioError("consumer.max_tries must be at least 1");
}

}  // namespace gram
