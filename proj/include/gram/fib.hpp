#ifndef GRAM_FIB_HPP
#define GRAM_FIB_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "gram/aid.hpp"
#include "gram/name.hpp"

namespace gram {

using Distance = std::uint32_t;

// Per-prefix next hops with the distance each neighbor reports.
// Ranking lists exactly the neighbors with a recorded distance, sorted by
// (distance ascending, neighbor id ascending).
struct FibEntry {
  NamePrefix prefix;
  std::map<RouterId, Distance> per_neighbor_distance;
  std::vector<RouterId> ranking;

  void rebuild_ranking() {
    ranking.clear();
    for (const auto& [nbr, _] : per_neighbor_distance)
      ranking.push_back(nbr);
    std::sort(ranking.begin(), ranking.end(), [this](RouterId a, RouterId b) {
      Distance da = per_neighbor_distance.at(a);
      Distance db = per_neighbor_distance.at(b);
      if (da != db)
        return da < db;
      return a < b;
    });
  }
};

class Fib {
public:
  void set_entry(FibEntry entry) {
    entry.rebuild_ranking();
    prefixes_.push_back(entry.prefix);
    entries_[entry.prefix] = std::move(entry);
    // keep the prefix list duplicate-free
    std::sort(prefixes_.begin(), prefixes_.end());
    prefixes_.erase(std::unique(prefixes_.begin(), prefixes_.end()), prefixes_.end());
  }

  // Longest-prefix match against all known prefixes.
  const FibEntry* match(const ContentName& name) const {
    auto best = prefix_match(name, prefixes_);
    if (!best)
      return nullptr;
    return &entries_.at(*best);
  }

  const FibEntry* entry(const NamePrefix& p) const {
    auto it = entries_.find(p);
    return it == entries_.end() ? nullptr : &it->second;
  }

  std::size_t size() const { return entries_.size(); }

private:
  std::map<NamePrefix, FibEntry> entries_;
  std::vector<NamePrefix> prefixes_;
};

}  // namespace gram

#endif  // GRAM_FIB_HPP
