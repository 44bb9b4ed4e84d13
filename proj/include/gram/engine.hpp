#ifndef GRAM_ENGINE_HPP
#define GRAM_ENGINE_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <queue>
#include <stdexcept>
#include <vector>

#include "gram/message.hpp"
#include "gram/router_base.hpp"
#include "gram/topology.hpp"

namespace gram {

// Delivery of a message to a router, as observed by the trace sink.
struct TraceRecord {
  double time = 0;
  Iface from;
  bool to_consumer = false;
  RouterId router = 0;     // valid when !to_consumer
  ConsumerId consumer = 0; // valid when to_consumer
  Message msg;
};

// Single-threaded deterministic event loop. Events fire in (time, insertion
// sequence) order; identical inputs produce identical traces.
class Engine {
public:
  explicit Engine(Topology topo, std::uint64_t max_queue = 64u << 20);

  void add_router(std::unique_ptr<RouterBase> router);
  RouterBase& router(RouterId id) { return *routers_.at(id); }
  const RouterBase& router(RouterId id) const { return *routers_.at(id); }
  std::size_t router_count() const { return routers_.size(); }
  const Topology& topology() const { return topo_; }

  double now() const { return now_; }

  void schedule(double delay_ms, std::function<void()> fn) {
    schedule_at(now_ + delay_ms, std::move(fn));
  }
  void schedule_at(double time_ms, std::function<void()> fn);

  // Consumer-to-router injection; the local attachment adds no delay.
  void inject(RouterId router, ConsumerId consumer, Message msg) {
    schedule_at(now_, [this, router, consumer, m = std::move(msg)]() {
      deliver(router, Iface::from_consumer(consumer), m);
    });
  }
  void inject_at(double time_ms, RouterId router, ConsumerId consumer, Message msg) {
    schedule_at(time_ms, [this, router, consumer, m = std::move(msg)]() {
      deliver(router, Iface::from_consumer(consumer), m);
    });
  }

  // Runs `fn` against a router and dispatches whatever it emits (used for
  // source-driven emissions such as push multicast).
  void invoke(RouterId id, const std::function<void(RouterBase&, std::vector<Emission>&)>& fn) {
    std::vector<Emission> out;
    fn(*routers_.at(id), out);
    dispatch_emissions(id, out);
  }

  // Responses and data handed to local consumers.
  using ConsumerSink = std::function<void(ConsumerId, const Message&, double now)>;
  void set_consumer_sink(ConsumerSink sink) { consumer_sink_ = std::move(sink); }

  using TraceSink = std::function<void(const TraceRecord&)>;
  void set_trace_sink(TraceSink sink) { trace_sink_ = std::move(sink); }

  // Periodic router maintenance (PIT expiry); 0 disables.
  void enable_ticks(double interval_ms);

  // Drains the queue until it empties or the clock passes end_ms.
  void run_until(double end_ms);

private:
  struct Event {
    double time;
    std::uint64_t seq;
    std::function<void()> fn;
    bool operator>(const Event& o) const {
      if (time != o.time)
        return time > o.time;
      return seq > o.seq;
    }
  };

  void deliver(RouterId to, const Iface& from, const Message& msg);
  void dispatch_emissions(RouterId from, std::vector<Emission>& emissions);

  Topology topo_;
  std::vector<std::unique_ptr<RouterBase>> routers_;
  std::priority_queue<Event, std::vector<Event>, std::greater<Event>> queue_;
  std::map<std::pair<RouterId, RouterId>, double> link_free_;
  double now_ = 0;
  std::uint64_t seq_ = 0;
  std::uint64_t max_queue_;
  ConsumerSink consumer_sink_;
  TraceSink trace_sink_;
  double tick_interval_ms_ = 0;
};

}  // namespace gram

#endif  // GRAM_ENGINE_HPP
