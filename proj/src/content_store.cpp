#include "gram/content_store.hpp"

#include <stdexcept>

namespace gram {

CachingPolicy caching_policy_from_string(const std::string& s) {
  if (s == "none")
    return CachingPolicy::None;
  if (s == "on_path")
    return CachingPolicy::OnPath;
  if (s == "edge")
    return CachingPolicy::Edge;
  throw std::invalid_argument("unknown caching policy: " + s);
}

std::string to_string(CachingPolicy p) {
  switch (p) {
    case CachingPolicy::None: return "none";
    case CachingPolicy::OnPath: return "on_path";
    case CachingPolicy::Edge: return "edge";
  }
  return "?";
}

std::optional<Payload> ContentStore::lookup(const ContentName& name) {
  auto it = entries_.find(name);
  if (it == entries_.end())
    return std::nullopt;
  lru_.splice(lru_.begin(), lru_, it->second.lru_pos);
  return it->second.payload;
}

void ContentStore::insert(const ContentName& name, Payload payload) {
  if (capacity_ == 0)
    return;
  auto it = entries_.find(name);
  if (it != entries_.end()) {
    it->second.payload = std::move(payload);
    lru_.splice(lru_.begin(), lru_, it->second.lru_pos);
    return;
  }
  if (entries_.size() >= capacity_) {
    entries_.erase(lru_.back());
    lru_.pop_back();
  }
  lru_.push_front(name);
  entries_.emplace(name, Entry{std::move(payload), lru_.begin()});
}

}  // namespace gram
