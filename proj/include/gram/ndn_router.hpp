#ifndef GRAM_NDN_ROUTER_HPP
#define GRAM_NDN_ROUTER_HPP

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "gram/content_store.hpp"
#include "gram/fib.hpp"
#include "gram/message.hpp"
#include "gram/name.hpp"
#include "gram/router_base.hpp"

namespace gram {

// Per-Interest state: nonces and incoming interfaces pending a response.
struct PitEntry {
  ContentName name;
  std::vector<std::pair<Nonce, Iface>> records;
  std::set<RouterId> out_interfaces;
  double expiry = 0;

  bool has_nonce(Nonce n) const {
    for (const auto& [nonce, _] : records)
      if (nonce == n)
        return true;
    return false;
  }
};

// Baseline NDN forwarding plane: CS, PIT with nonce-based aggregation and
// duplicate detection, best-route FIB forwarding, NACKs.
class NdnRouter : public RouterBase {
public:
  struct Config {
    RouterId id = 0;
    std::size_t cache_capacity = 0;
    CachingPolicy caching = CachingPolicy::None;
    double pit_lifetime_ms = 2000;
  };

  NdnRouter(Config cfg, Fib fib, std::vector<NamePrefix> produced_prefixes,
            ProducerLookup producer_lookup);

  RouterId id() const override { return id_; }

  void handle(const Message& msg, const Iface& from, double now,
              std::vector<Emission>& out) override;

  void on_tick(double now) override { expire_pit(now); }

  // Removes every entry whose expiry has passed.
  void expire_pit(double now);

  TableSizes table_sizes() const override {
    return TableSizes{pit_.size(), 0, 0};
  }
  const RouterCounters& counters() const override { return counters_; }

  const std::map<ContentName, PitEntry>& pit() const { return pit_; }
  const ContentStore& store() const { return store_; }
  const Fib& fib() const { return fib_; }

  void cache_insert(const ContentName& n, Payload p) { store_.insert(n, std::move(p)); }

private:
  void handle_interest(const NdnInterest& in, const Iface& from, double now,
                       std::vector<Emission>& out);
  void handle_data(const NdnData& data, const Iface& from, std::vector<Emission>& out);
  void handle_nack(const Nack& nack, std::vector<Emission>& out);

  std::optional<Payload> local_content(const ContentName& name);

  RouterId id_;
  ContentStore store_;
  Fib fib_;
  std::map<ContentName, PitEntry> pit_;
  std::vector<NamePrefix> produced_prefixes_;
  ProducerLookup producer_lookup_;
  CachingPolicy caching_;
  double pit_lifetime_ms_;
  RouterCounters counters_;
};

}  // namespace gram

#endif  // GRAM_NDN_ROUTER_HPP
