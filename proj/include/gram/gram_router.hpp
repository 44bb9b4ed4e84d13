#ifndef GRAM_GRAM_ROUTER_HPP
#define GRAM_GRAM_ROUTER_HPP

#include <map>
#include <optional>
#include <set>
#include <unordered_map>
#include <vector>

#include "gram/aid.hpp"
#include "gram/content_store.hpp"
#include "gram/fib.hpp"
#include "gram/gram_multicast.hpp"
#include "gram/message.hpp"
#include "gram/name.hpp"
#include "gram/router_base.hpp"

namespace gram {

// Pending local request: the consumers owed a response for a remote object.
struct LightEntry {
  bool content_local = false;
  std::vector<ConsumerId> local_consumers;
};

// Reverse-forwarding state for one anonymous source. next_hop is empty for
// the router's own entry; `map` is the identifier to restore when relaying
// a response to next_hop.
struct ArtEntry {
  Aid aid = 0;
  std::optional<RouterId> next_hop;  // nullopt = this router
  Aid map = 0;

  bool is_self() const { return !next_hop.has_value(); }
};

// CCN-GRAM unicast + multicast forwarding plane for one router.
class GramRouter : public RouterBase {
public:
  struct Config {
    RouterId id = 0;
    std::set<RouterId> neighbors;
    Aid epsilon = 0;
    ListTable list;
    std::size_t cache_capacity = 0;
    CachingPolicy caching = CachingPolicy::None;
  };

  GramRouter(Config cfg, Fib fib, std::vector<NamePrefix> produced_prefixes,
             ProducerLookup producer_lookup);

  RouterId id() const override { return id_; }

  void handle(const Message& msg, const Iface& from, double now,
              std::vector<Emission>& out) override;

  TableSizes table_sizes() const override {
    return TableSizes{0, art_.size(), light_.size()};
  }
  const RouterCounters& counters() const override { return counters_; }

  // Admission under the loop-free rule: highest-ranked neighbor whose
  // recorded distance is strictly below the carried one. d_in empty means
  // infinite (locally originated Interests).
  std::optional<RouterId> lfr_admits(const FibEntry& entry,
                                     std::optional<Distance> d_in) const;

  // Source-side multicast emission (push mode, or pull responses); fans the
  // packet out over the group's MART next hops.
  void emit_multicast(const ContentName& group, std::uint64_t mc,
                      Payload payload, std::vector<Emission>& out);

  // Read-only views for tests, metrics, and state snapshots.
  const std::map<ContentName, LightEntry>& light() const { return light_; }
  const std::unordered_map<Aid, ArtEntry>& art() const { return art_; }
  const Fib& fib() const { return fib_; }
  const MulticastState& mcast() const { return mcast_; }
  const ContentStore& store() const { return store_; }
  const AidMapper& mapper() const { return mapper_; }
  std::optional<Aid> self_aid() const { return self_aid_; }
  const std::vector<NamePrefix>& produced_prefixes() const { return produced_prefixes_; }

  // Test setup hooks.
  void art_insert(ArtEntry e) { art_[e.aid] = e; index_art(e); }
  void cache_insert(const ContentName& n, Payload p) { store_.insert(n, std::move(p)); }

private:
  void handle_consumer_interest(const Interest& in, ConsumerId c,
                                std::vector<Emission>& out);
  void handle_neighbor_interest(const Interest& in, RouterId p,
                                std::vector<Emission>& out);
  void handle_data(const DataPacket& dp, RouterId s, std::vector<Emission>& out);
  void handle_reply(const Reply& rep, RouterId s, std::vector<Emission>& out);

  void handle_multicast_interest(const MulticastInterest& mi, const Iface& from,
                                 std::vector<Emission>& out);
  void handle_multicast_data(const MulticastData& mp, RouterId s,
                             std::vector<Emission>& out);
  void handle_multicast_reply(const MulticastReply& mr, RouterId s,
                              std::vector<Emission>& out);

  // Content lookup for requests: producer-held objects first, then the cache.
  std::optional<Payload> local_content(const ContentName& name);
  bool produces_prefix_of(const ContentName& name) const;
  std::optional<Aid> allocate_free_aid() const;
  void index_art(const ArtEntry& e);
  void cache_per_policy(const ContentName& name, const Payload& payload, bool at_origin);

  RouterId id_;
  std::set<RouterId> neighbors_;
  std::map<ContentName, LightEntry> light_;
  Fib fib_;
  std::unordered_map<Aid, ArtEntry> art_;
  // (upstream neighbor, upstream aid) -> ART key; resolves reuse and
  // collision remaps without scanning the table.
  std::map<std::pair<RouterId, Aid>, Aid> art_by_upstream_;
  AidMapper mapper_;
  std::optional<Aid> self_aid_;
  ContentStore store_;
  std::vector<NamePrefix> produced_prefixes_;
  ProducerLookup producer_lookup_;
  CachingPolicy caching_;
  MulticastState mcast_;
  RouterCounters counters_;
};

}  // namespace gram

#endif  // GRAM_GRAM_ROUTER_HPP
