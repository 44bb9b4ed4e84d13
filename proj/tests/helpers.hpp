#ifndef GRAM_TESTS_HELPERS_HPP
#define GRAM_TESTS_HELPERS_HPP

#include <set>
#include <vector>

#include "gram/fib.hpp"
#include "gram/gram_router.hpp"
#include "gram/name.hpp"

namespace gram::testing {

inline Fib single_entry_fib(const std::string& prefix,
                            const std::map<RouterId, Distance>& distances) {
  Fib fib;
  FibEntry e;
  e.prefix = NamePrefix::parse(prefix);
  e.per_neighbor_distance = distances;
  fib.set_entry(e);
  return fib;
}

// Router with one shared identifier interval [0, len) for itself and every
// neighbor, which is the default configuration of a run.
inline GramRouter::Config shared_interval_config(RouterId id,
                                                 std::set<RouterId> neighbors,
                                                 Aid epsilon, Aid len) {
  GramRouter::Config cfg;
  cfg.id = id;
  cfg.neighbors = neighbors;
  cfg.epsilon = epsilon;
  LocalInterval iv{0, len};
  cfg.list.set_own(iv);
  for (RouterId n : neighbors)
    cfg.list.set_neighbor(n, iv);
  return cfg;
}

inline const Interest& as_interest(const Message& m) { return std::get<Interest>(m); }
inline const DataPacket& as_data(const Message& m) { return std::get<DataPacket>(m); }
inline const Reply& as_reply(const Message& m) { return std::get<Reply>(m); }

}  // namespace gram::testing

#endif
