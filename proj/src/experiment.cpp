#include "gram/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gram {

NetworkSetup build_network_setup(const Scenario& s) {
  NetworkSetup setup;
  Rng placement = derive_stream(s.seed, "placement");
  setup.topo = generate_topology(s.topology, placement);

  // Producer and consumer routers are disjoint random picks; everything
  // else relays only.
  std::vector<RouterId> ids(setup.topo.node_count());
  for (RouterId i = 0; i < ids.size(); ++i)
    ids[i] = i;
  Rng roles = derive_stream(s.seed, "roles");
  std::shuffle(ids.begin(), ids.end(), roles);
  if (s.producer_routers + s.consumer_routers > ids.size())
    throw ScenarioError("producer_routers + consumer_routers exceeds node count");
  setup.producer_router_list.assign(ids.begin(), ids.begin() + s.producer_routers);
  setup.consumer_routers.assign(ids.begin() + s.producer_routers,
                                ids.begin() + s.producer_routers + s.consumer_routers);

  setup.catalog = Catalog(s.catalog_size, s.producer_routers, s.payload_size);
  for (std::uint32_t pid = 0; pid < s.producer_routers; ++pid)
    setup.producers[setup.catalog.producer_prefix(pid)] = setup.producer_router_list[pid];

  if (s.multicast.enabled) {
    setup.multicast_group = ContentName({"mcast", "g0"});
    setup.multicast_source = setup.producer_router_list[0];
    setup.producers[NamePrefix({"mcast", "g0"})] = setup.multicast_source;
  }

  setup.routes = compute_routes(setup.topo, setup.producers);

  if (s.routing == RoutingMode::Adversarial) {
    Rng adv = derive_stream(s.seed, "adversarial");
    std::uniform_int_distribution<Distance> dist(0, s.adversarial_max_distance);
    for (auto& [prefix, per_router] : setup.routes.per_prefix)
      for (auto& [router, per_neighbor] : per_router)
        for (auto& [nbr, d] : per_neighbor)
          d = dist(adv);
  }
  return setup;
}

std::unique_ptr<Engine> build_engine(const Scenario& s, const NetworkSetup& setup) {
  auto engine = std::make_unique<Engine>(setup.topo);
  Rng eps_rng = derive_stream(s.seed, "epsilon");
  std::uniform_int_distribution<Aid> eps_dist(0, s.interval_length - 1);

  auto interval_of = [&](RouterId r) {
    Aid start = 0;
    if (auto it = s.interval_start.find(r); it != s.interval_start.end())
      start = it->second;
    return LocalInterval{start, s.interval_length};
  };

  for (RouterId r = 0; r < setup.topo.node_count(); ++r) {
    std::vector<NamePrefix> produced;
    std::optional<std::uint32_t> pid;
    for (std::uint32_t p = 0; p < setup.producer_router_list.size(); ++p) {
      if (setup.producer_router_list[p] == r) {
        pid = p;
        produced.push_back(setup.catalog.producer_prefix(p));
      }
    }
    if (s.multicast.enabled && r == setup.multicast_source)
      produced.push_back(NamePrefix({"mcast", "g0"}));

    ProducerLookup lookup;
    if (pid) {
      Catalog catalog = setup.catalog;
      std::uint32_t p = *pid;
      lookup = [catalog, p](const ContentName& name) -> std::optional<Payload> {
        if (!catalog.produced_by(name, p))
          return std::nullopt;
        return Payload{name.to_string(), catalog.payload_size()};
      };
    }

    Fib fib = build_fib(setup.routes, r);
    // Draw epsilon unconditionally so router construction order does not
    // perturb the stream.
    Aid epsilon = eps_dist(eps_rng);

    if (s.plane == Plane::Gram) {
      GramRouter::Config cfg;
      cfg.id = r;
      cfg.neighbors = setup.topo.adjacency[r];
      cfg.epsilon = epsilon;
      ListTable list(interval_of(r));
      for (RouterId k : setup.topo.adjacency[r])
        list.set_neighbor(k, interval_of(k));
      cfg.list = std::move(list);
      cfg.cache_capacity = s.cache_capacity;
      cfg.caching = s.caching;
      engine->add_router(std::make_unique<GramRouter>(std::move(cfg), std::move(fib),
                                                      std::move(produced),
                                                      std::move(lookup)));
    } else {
      NdnRouter::Config cfg;
      cfg.id = r;
      cfg.cache_capacity = s.cache_capacity;
      cfg.caching = s.caching;
      cfg.pit_lifetime_ms = s.pit_lifetime_ms;
      engine->add_router(std::make_unique<NdnRouter>(std::move(cfg), std::move(fib),
                                                     std::move(produced),
                                                     std::move(lookup)));
    }
  }
  return engine;
}

// ---- ConsumerDriver ----

ConsumerDriver::ConsumerDriver(Engine& engine, std::vector<RouterId> consumer_routers,
                               const RequestSampler& sampler, Params params,
                               std::uint64_t seed)
    : engine_(engine),
      consumer_routers_(std::move(consumer_routers)),
      sampler_(sampler),
      params_(params),
      workload_rng_(derive_stream(seed, "workload")),
      nonce_rng_(derive_stream(seed, "nonce")) {}

void ConsumerDriver::start() {
  for (RouterId r : consumer_routers_)
    schedule_next_arrival(r);
}

void ConsumerDriver::schedule_next_arrival(RouterId router) {
  std::exponential_distribution<double> gap(params_.rate_per_router / 1000.0);
  double dt = gap(workload_rng_);
  engine_.schedule(dt, [this, router]() {
    if (engine_.now() > params_.duration_ms)
      return;
    ContentName name = sampler_.draw(workload_rng_, engine_.now());
    start_request(router, name, true);
    schedule_next_arrival(router);
  });
}

void ConsumerDriver::start_request(RouterId router, const ContentName& name,
                                   bool allow_duplicate) {
  ConsumerId c = make_consumer_id(router, serial_++);
  Pending p;
  p.router = router;
  p.name = name;
  p.t0 = engine_.now();
  p.measured = engine_.now() >= params_.measure_from_ms;
  auto [it, _] = pending_.emplace(c, std::move(p));
  ++requests_issued_;
  send_interest(c, it->second);
  arm_retransmit(c);

  if (allow_duplicate && params_.duplicate_prob > 0) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    if (u(workload_rng_) < params_.duplicate_prob) {
      std::uniform_real_distribution<double> jitter(0.1, 5.0);
      double dt = jitter(workload_rng_);
      engine_.schedule(dt, [this, router, name]() {
        start_request(router, name, false);
      });
    }
  }
}

ConsumerId ConsumerDriver::issue_request(RouterId router, const ContentName& name,
                                         double at_ms) {
  ConsumerId c = make_consumer_id(router, serial_++);
  engine_.schedule_at(at_ms, [this, c, router, name]() {
    Pending p;
    p.router = router;
    p.name = name;
    p.t0 = engine_.now();
    p.measured = engine_.now() >= params_.measure_from_ms;
    auto [it, _] = pending_.emplace(c, std::move(p));
    ++requests_issued_;
    send_interest(c, it->second);
    arm_retransmit(c);
  });
  return c;
}

void ConsumerDriver::send_interest(ConsumerId c, Pending& p) {
  if (params_.plane == Plane::Gram) {
    engine_.inject(p.router, c,
                   Interest{p.name, Addr::to_consumer(c), std::nullopt, c});
  } else {
    Nonce nonce = nonce_rng_();
    engine_.inject(p.router, c, NdnInterest{p.name, nonce, c});
  }
}

void ConsumerDriver::arm_retransmit(ConsumerId c) {
  auto it = pending_.find(c);
  if (it == pending_.end())
    return;
  // Variance guard keeps short cache-hit RTTs from timing out far requests.
  RttState& rtt = rtt_estimate(it->second.router);
  double timeout = params_.rtt_timeout_factor * rtt.srtt + 4 * rtt.var;
  engine_.schedule(timeout, [this, c]() {
    auto pit = pending_.find(c);
    if (pit == pending_.end() || pit->second.done)
      return;
    if (pit->second.tries >= params_.max_tries) {
      ++failed_;
      pending_.erase(pit);
      return;
    }
    ++pit->second.tries;
    send_interest(c, pit->second);
    arm_retransmit(c);
  });
}

ConsumerDriver::RttState& ConsumerDriver::rtt_estimate(RouterId router) {
  auto [it, inserted] = rtt_.try_emplace(
      router, RttState{params_.rtt_initial_ms, params_.rtt_initial_ms / 2});
  return it->second;
}

void ConsumerDriver::on_consumer_message(ConsumerId c, const Message& msg, double now) {
  auto it = pending_.find(c);
  if (it == pending_.end())
    return;
  Pending& p = it->second;
  if (std::holds_alternative<DataPacket>(msg) || std::holds_alternative<NdnData>(msg)) {
    double delay = now - p.t0;
    ++delivered_;
    if (p.measured) {
      ++delay_samples_;
      delay_sum_ += delay;
    }
    RttState& rtt = rtt_estimate(p.router);
    rtt.var = 0.75 * rtt.var + 0.25 * std::abs(rtt.srtt - delay);
    rtt.srtt = 0.875 * rtt.srtt + 0.125 * delay;
    pending_.erase(it);
  } else if (std::holds_alternative<Reply>(msg) || std::holds_alternative<Nack>(msg)) {
    ++failed_;
    pending_.erase(it);
  }
}

// ---- MulticastDriver ----

MulticastDriver::MulticastDriver(Engine& engine, ContentName group, RouterId source,
                                 std::vector<RouterId> receiver_routers, Params params)
    : engine_(engine),
      group_(std::move(group)),
      source_(source),
      receiver_routers_(std::move(receiver_routers)),
      params_(params),
      received_(receiver_routers_.size(), 0),
      highest_mc_(receiver_routers_.size(), 0) {}

ConsumerId MulticastDriver::receiver_id(std::size_t idx) const {
  return make_consumer_id(receiver_routers_[idx],
                          0x40000000u + static_cast<std::uint32_t>(idx));
}

void MulticastDriver::start() {
  for (std::size_t i = 0; i < receiver_routers_.size(); ++i) {
    ConsumerId c = receiver_id(i);
    RouterId r = receiver_routers_[i];
    engine_.inject_at(params_.join_at_ms + 0.5 * static_cast<double>(i), r, c,
                      MulticastInterest{group_, std::nullopt, 0, c});
  }
  if (params_.pull) {
    for (std::size_t i = 0; i < receiver_routers_.size(); ++i) {
      ConsumerId c = receiver_id(i);
      RouterId r = receiver_routers_[i];
      engine_.inject_at(params_.first_pull_at_ms + 0.1 * static_cast<double>(i), r, c,
                        MulticastInterest{group_, std::nullopt, 1, c});
    }
  } else {
    schedule_push(1);
  }
}

void MulticastDriver::schedule_push(std::uint64_t mc) {
  if (mc > params_.objects)
    return;
  double interval = 1000.0 / params_.push_rate_per_s;
  engine_.schedule_at(params_.first_pull_at_ms + interval * static_cast<double>(mc - 1),
                      [this, mc]() {
    engine_.invoke(source_, [this, mc](RouterBase& rb, std::vector<Emission>& out) {
      auto* gr = dynamic_cast<GramRouter*>(&rb);
      if (gr == nullptr)
        throw std::logic_error("multicast push requires the gram plane");
      Payload payload{group_.to_string() + "/" + std::to_string(mc), 1024};
      gr->emit_multicast(group_, mc, std::move(payload), out);
    });
    schedule_push(mc + 1);
  });
}

void MulticastDriver::on_consumer_message(ConsumerId c, const Message& msg, double now) {
  for (std::size_t i = 0; i < receiver_routers_.size(); ++i) {
    if (receiver_id(i) != c)
      continue;
    if (const auto* mp = std::get_if<MulticastData>(&msg)) {
      ++received_[i];
      if (mp->mc > highest_mc_[i])
        highest_mc_[i] = mp->mc;
      if (params_.pull && mp->mc < params_.objects) {
        RouterId r = receiver_routers_[i];
        engine_.inject_at(now + 0.1, r, c,
                          MulticastInterest{group_, std::nullopt, mp->mc + 1, c});
      }
    } else if (std::holds_alternative<MulticastReply>(msg)) {
      ++replies_seen_;
    }
    return;
  }
}

// ---- Experiment ----

Experiment::Experiment(Scenario s) : scenario_(std::move(s)) {
  validate(scenario_);
  setup_ = build_network_setup(scenario_);
  engine_ = build_engine(scenario_, setup_);

  double epoch_ms = scenario_.temporal_locality > 0
      ? scenario_.duration_ms / scenario_.temporal_locality
      : 0;
  sampler_ = std::make_unique<RequestSampler>(setup_.catalog, scenario_.zipf_alpha,
                                              scenario_.temporal_locality, epoch_ms,
                                              derive_stream(scenario_.seed, "locality")());

  ConsumerDriver::Params cp;
  cp.plane = scenario_.plane;
  cp.rate_per_router = scenario_.rate_per_router;
  cp.duration_ms = scenario_.duration_ms;
  cp.measure_from_ms = scenario_.warmup_ms;
  cp.duplicate_prob = scenario_.duplicate_request_prob;
  cp.rtt_initial_ms = scenario_.rtt_initial_ms;
  cp.rtt_timeout_factor = scenario_.rtt_timeout_factor;
  cp.max_tries = scenario_.max_tries;
  consumers_ = std::make_unique<ConsumerDriver>(*engine_, setup_.consumer_routers,
                                                *sampler_, cp, scenario_.seed);

  if (scenario_.multicast.enabled) {
    std::vector<RouterId> receivers;
    for (std::uint32_t i = 0; i < scenario_.multicast.receivers; ++i)
      receivers.push_back(setup_.consumer_routers[i % setup_.consumer_routers.size()]);
    MulticastDriver::Params mp;
    mp.pull = scenario_.multicast.mode == "pull";
    mp.objects = scenario_.multicast.objects;
    mp.push_rate_per_s = scenario_.multicast.push_rate_per_s;
    multicast_ = std::make_unique<MulticastDriver>(*engine_, setup_.multicast_group,
                                                   setup_.multicast_source, receivers, mp);
  }

  engine_->set_consumer_sink([this](ConsumerId c, const Message& msg, double now) {
    if (std::holds_alternative<MulticastData>(msg) ||
        std::holds_alternative<MulticastReply>(msg)) {
      if (multicast_)
        multicast_->on_consumer_message(c, msg, now);
      return;
    }
    consumers_->on_consumer_message(c, msg, now);
  });

  if (scenario_.plane == Plane::Ndn && scenario_.tick_interval_ms > 0)
    engine_->enable_ticks(scenario_.tick_interval_ms);
}

RunOutput Experiment::run() {
  RunOutput out;
  auto table_sampler = std::make_shared<TableSampler>(engine_->router_count());

  std::function<void()> sample_fn = [this, table_sampler, &out, &sample_fn]() {
    out.table_series.push_back(table_sampler->sample(
        engine_->now(), engine_->router_count(),
        [this](std::size_t r) { return engine_->router(static_cast<RouterId>(r)).table_sizes(); }));
    double next = engine_->now() + scenario_.sample_interval_ms;
    if (next <= scenario_.duration_ms)
      engine_->schedule_at(next, sample_fn);
  };
  engine_->schedule_at(scenario_.warmup_ms, sample_fn);

  consumers_->start();
  if (multicast_)
    multicast_->start();

  engine_->run_until(scenario_.duration_ms);

  RunMetrics& m = out.metrics;
  for (RouterId r = 0; r < engine_->router_count(); ++r) {
    const RouterCounters& c = engine_->router(r).counters();
    m.interest_receptions += c.interest_receptions;
    m.aggregated_interests += c.aggregated_interests;
    m.drops_no_reverse_entry += c.drops_no_reverse_entry;
    m.aid_exhaustion += c.aid_exhaustion;
    m.pit_expirations += c.pit_expirations;
  }
  if (m.interest_receptions > 0)
    m.aggregation_pct = 100.0 * static_cast<double>(m.aggregated_interests) /
                        static_cast<double>(m.interest_receptions);
  m.delivered = consumers_->delivered();
  m.failed = consumers_->failed();
  m.delay_samples = consumers_->delay_samples();
  m.mean_delay_ms = consumers_->mean_delay_ms();
  m.pit = table_sampler->pit_stats();
  m.art = table_sampler->art_stats();
  m.light = table_sampler->light_stats();
  return out;
}

RunOutput run_scenario(const Scenario& s) {
  Experiment experiment(s);
  return experiment.run();
}

}  // namespace gram
