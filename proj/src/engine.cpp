#include "gram/engine.hpp"

#include <algorithm>

namespace gram {

Engine::Engine(Topology topo, std::uint64_t max_queue)
    : topo_(std::move(topo)), max_queue_(max_queue) {}

void Engine::add_router(std::unique_ptr<RouterBase> router) {
  if (router->id() != routers_.size())
    throw std::invalid_argument("routers must be added in id order");
  routers_.push_back(std::move(router));
}

void Engine::schedule_at(double time_ms, std::function<void()> fn) {
  if (time_ms < now_)
    throw std::logic_error("event scheduled in the past");
  if (queue_.size() >= max_queue_)
    throw std::runtime_error("event queue exceeded configured bound (" +
                             std::to_string(max_queue_) + " events)");
  queue_.push(Event{time_ms, seq_++, std::move(fn)});
}

void Engine::enable_ticks(double interval_ms) {
  tick_interval_ms_ = interval_ms;
  if (interval_ms <= 0)
    return;
  schedule(interval_ms, [this]() {
    for (auto& r : routers_)
      r->on_tick(now_);
    if (tick_interval_ms_ > 0)
      enable_ticks(tick_interval_ms_);
  });
}

void Engine::run_until(double end_ms) {
  while (!queue_.empty()) {
    const Event& top = queue_.top();
    if (top.time > end_ms)
      break;
    now_ = top.time;
    auto fn = std::move(const_cast<Event&>(top).fn);
    queue_.pop();
    fn();
  }
  now_ = std::max(now_, end_ms);
}

void Engine::deliver(RouterId to, const Iface& from, const Message& msg) {
  if (trace_sink_)
    trace_sink_(TraceRecord{now_, from, false, to, 0, msg});
  std::vector<Emission> emissions;
  routers_.at(to)->handle(msg, from, now_, emissions);
  dispatch_emissions(to, emissions);
}

void Engine::dispatch_emissions(RouterId from, std::vector<Emission>& emissions) {
  for (auto& e : emissions) {
    if (e.to.is_consumer()) {
      ConsumerId c = e.to.consumer;
      schedule_at(now_, [this, c, m = std::move(e.msg)]() {
        if (trace_sink_)
          trace_sink_(TraceRecord{now_, Iface{}, true, 0, c, m});
        if (consumer_sink_)
          consumer_sink_(c, m, now_);
      });
      continue;
    }
    RouterId to = e.to.neighbor;
    const Link& link = topo_.link_between(from, to);
    double serialization = link.rate_bps > 0
        ? wire_size(e.msg) * 8.0 / link.rate_bps * 1000.0
        : 0.0;
    double& free_at = link_free_[{from, to}];
    double depart = std::max(now_, free_at);
    free_at = depart + serialization;
    double arrive = depart + serialization + link.delay_ms;
    schedule_at(arrive, [this, to, from, m = std::move(e.msg)]() {
      deliver(to, Iface::from_neighbor(from), m);
    });
  }
}

}  // namespace gram
