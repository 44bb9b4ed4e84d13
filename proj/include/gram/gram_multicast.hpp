#ifndef GRAM_GRAM_MULTICAST_HPP
#define GRAM_GRAM_MULTICAST_HPP

#include <cstdint>
#include <map>
#include <set>

#include "gram/message.hpp"
#include "gram/name.hpp"

namespace gram {

// Per-group forwarding state: the pacing counter and the next hops toward
// downstream receivers. `self` stands in for the router's own receivers.
struct MartEntry {
  std::uint64_t mc = 0;
  std::set<RouterId> next_hops;
  bool self = false;

  std::size_t fanout() const { return next_hops.size() + (self ? 1 : 0); }
};

// Local receivers per group.
struct GmtEntry {
  std::set<ConsumerId> local_receivers;
};

struct MulticastState {
  std::map<ContentName, MartEntry> mart;
  std::map<ContentName, GmtEntry> gmt;
};

}  // namespace gram

#endif  // GRAM_GRAM_MULTICAST_HPP
