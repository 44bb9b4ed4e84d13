#ifndef GRAM_AID_HPP
#define GRAM_AID_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <unordered_map>

namespace gram {

using RouterId = std::uint32_t;
using Aid = std::uint64_t;

// Contiguous interval [start, start + length) of anonymous identifiers.
// Every interval in a run shares the same length.
struct LocalInterval {
  Aid start = 0;
  Aid length = 0;

  bool contains(Aid a) const { return a >= start && a < start + length; }
  bool operator==(const LocalInterval& o) const {
    return start == o.start && length == o.length;
  }
};

// LIST: the router's own accepted interval plus each neighbor's.
class ListTable {
public:
  ListTable() = default;
  ListTable(LocalInterval own) : own_(own) {}

  const LocalInterval& own() const { return own_; }
  void set_own(LocalInterval iv) { own_ = iv; }

  void set_neighbor(RouterId k, LocalInterval iv) { per_neighbor_[k] = iv; }

  const LocalInterval& neighbor(RouterId k) const {
    auto it = per_neighbor_.find(k);
    if (it == per_neighbor_.end())
      throw std::out_of_range("no interval recorded for neighbor " + std::to_string(k));
    return it->second;
  }

  bool has_neighbor(RouterId k) const { return per_neighbor_.count(k) != 0; }

private:
  LocalInterval own_;
  std::unordered_map<RouterId, LocalInterval> per_neighbor_;
};

// Bijection between the router's own identifier interval and a neighbor's,
// keyed by a per-router constant that never leaves the router.
class AidMapper {
public:
  AidMapper() = default;
  AidMapper(Aid epsilon, ListTable list)
      : epsilon_(epsilon), list_(std::move(list)) {}

  const ListTable& list() const { return list_; }

  // a in own interval -> identifier in neighbor's interval.
  Aid map_forward(Aid a, RouterId neighbor) const {
    const LocalInterval& own = list_.own();
    if (!own.contains(a))
      throw std::domain_error("aid " + std::to_string(a) + " outside own interval");
    const LocalInterval& target = list_.neighbor(neighbor);
    Aid offset = (epsilon_ + (a - own.start)) % own.length;
    return target.start + offset;
  }

  // Inverse: identifier in neighbor's interval -> own interval.
  Aid map_inverse(Aid b, RouterId neighbor) const {
    const LocalInterval& target = list_.neighbor(neighbor);
    if (!target.contains(b))
      throw std::domain_error("aid " + std::to_string(b) + " outside neighbor interval");
    const LocalInterval& own = list_.own();
    Aid offset = (b - target.start + own.length - epsilon_ % own.length) % own.length;
    return own.start + offset;
  }

private:
  Aid epsilon_ = 0;
  ListTable list_;
};

// Smallest identifier in `own` not accepted by `in_use`; nullopt when the
// whole interval is occupied.
std::optional<Aid> allocate_aid(const LocalInterval& own,
                                const std::function<bool(Aid)>& in_use);

}  // namespace gram

#endif  // GRAM_AID_HPP
