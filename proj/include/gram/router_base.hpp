#ifndef GRAM_ROUTER_BASE_HPP
#define GRAM_ROUTER_BASE_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "gram/content_store.hpp"
#include "gram/counters.hpp"
#include "gram/message.hpp"
#include "gram/name.hpp"

namespace gram {

// Callback a router uses to ask whether it produces a given object and, if
// so, obtain its payload. Producer routers hold all objects of their
// advertised prefixes, so this never touches the LRU cache.
using ProducerLookup = std::function<std::optional<Payload>(const ContentName&)>;

struct TableSizes {
  std::size_t pit = 0;
  std::size_t art = 0;
  std::size_t light_pending = 0;
};

// A forwarding plane instance attached to one router. Handlers are pure
// transitions: (state, message) -> (state', emissions). The event loop
// invokes them sequentially; no state is shared across routers.
class RouterBase {
public:
  virtual ~RouterBase() = default;

  virtual RouterId id() const = 0;

  virtual void handle(const Message& msg, const Iface& from, double now,
                      std::vector<Emission>& out) = 0;

  // Periodic maintenance (PIT expiry for NDN; no-op for CCN-GRAM).
  virtual void on_tick(double /*now*/) {}

  virtual TableSizes table_sizes() const = 0;
  virtual const RouterCounters& counters() const = 0;
};

}  // namespace gram

#endif  // GRAM_ROUTER_BASE_HPP
