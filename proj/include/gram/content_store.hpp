#ifndef GRAM_CONTENT_STORE_HPP
#define GRAM_CONTENT_STORE_HPP

#include <cstdint>
#include <list>
#include <optional>
#include <string>
#include <unordered_map>

#include "gram/name.hpp"

namespace gram {

enum class CachingPolicy {
  None,    // never cache
  OnPath,  // cache at every router on the data packet's return path
  Edge,    // cache only at the consumer-facing router
};

CachingPolicy caching_policy_from_string(const std::string& s);
std::string to_string(CachingPolicy p);

// Content payloads in the simulator are synthetic: a short token plus a
// declared wire size used for link-serialization timing.
struct Payload {
  std::string token;
  std::uint32_t wire_size = 1024;

  bool operator==(const Payload& o) const {
    return token == o.token && wire_size == o.wire_size;
  }
};

// Fixed-capacity LRU cache of content objects, indexed by exact name.
// Lookup refreshes recency; insertion at capacity evicts the LRU entry.
class ContentStore {
public:
  explicit ContentStore(std::size_t capacity) : capacity_(capacity) {}

  std::size_t capacity() const { return capacity_; }
  std::size_t size() const { return entries_.size(); }

  // Exact-match lookup; a hit moves the entry to most-recently-used.
  std::optional<Payload> lookup(const ContentName& name);

  bool contains(const ContentName& name) const {
    return entries_.find(name) != entries_.end();
  }

  // Inserts or refreshes. No-op when capacity is zero.
  void insert(const ContentName& name, Payload payload);

private:
  using LruList = std::list<ContentName>;
  struct Entry {
    Payload payload;
    LruList::iterator lru_pos;
  };

  std::size_t capacity_;
  LruList lru_;  // front = most recent
  std::unordered_map<ContentName, Entry, ContentNameHash> entries_;
};

}  // namespace gram

#endif  // GRAM_CONTENT_STORE_HPP
