#ifndef GRAM_COUNTERS_HPP
#define GRAM_COUNTERS_HPP

#include <cstdint>

namespace gram {

// Per-router event counters, shared by both forwarding planes.
struct RouterCounters {
  std::uint64_t interest_receptions = 0;
  std::uint64_t aggregated_interests = 0;
  std::uint64_t interests_forwarded = 0;
  std::uint64_t data_sent = 0;
  std::uint64_t replies_sent = 0;
  std::uint64_t drops_malformed = 0;
  std::uint64_t drops_no_reverse_entry = 0;
  std::uint64_t drops_bad_aid = 0;
  std::uint64_t aid_exhaustion = 0;
  std::uint64_t pit_expirations = 0;
  std::uint64_t mc_gap_drops = 0;
  std::uint64_t mc_stale_drops = 0;
};

}  // namespace gram

#endif  // GRAM_COUNTERS_HPP
