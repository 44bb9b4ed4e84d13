#include "gram/ndn_router.hpp"

#include <algorithm>

namespace gram {

NdnRouter::NdnRouter(Config cfg, Fib fib, std::vector<NamePrefix> produced_prefixes,
                     ProducerLookup producer_lookup)
    : id_(cfg.id),
      store_(cfg.cache_capacity),
      fib_(std::move(fib)),
      produced_prefixes_(std::move(produced_prefixes)),
      producer_lookup_(std::move(producer_lookup)),
      caching_(cfg.caching),
      pit_lifetime_ms_(cfg.pit_lifetime_ms) {}

void NdnRouter::handle(const Message& msg, const Iface& from, double now,
                       std::vector<Emission>& out) {
  if (const auto* in = std::get_if<NdnInterest>(&msg)) {
    handle_interest(*in, from, now, out);
  } else if (const auto* data = std::get_if<NdnData>(&msg)) {
    handle_data(*data, from, out);
  } else if (const auto* nack = std::get_if<Nack>(&msg)) {
    handle_nack(*nack, out);
  } else {
    ++counters_.drops_malformed;
  }
}

std::optional<Payload> NdnRouter::local_content(const ContentName& name) {
  if (producer_lookup_) {
    if (auto p = producer_lookup_(name))
      return p;
  }
  return store_.lookup(name);
}

void NdnRouter::handle_interest(const NdnInterest& in, const Iface& from, double now,
                                std::vector<Emission>& out) {
  ++counters_.interest_receptions;
  if (in.name.empty()) {
    ++counters_.drops_malformed;
    return;
  }

  if (auto payload = local_content(in.name)) {
    ++counters_.data_sent;
    out.push_back({from, NdnData{in.name, "sp", *payload, in.trace}});
    return;
  }

  if (auto it = pit_.find(in.name); it != pit_.end()) {
    if (it->second.has_nonce(in.nonce)) {
      // Same nonce seen before: the Interest is looping.
      ++counters_.replies_sent;
      out.push_back({from, Nack{in.name, in.nonce, NackReason::DuplicateNonce, in.trace}});
      return;
    }
    it->second.records.emplace_back(in.nonce, from);
    ++counters_.aggregated_interests;
    return;
  }

  const FibEntry* entry = fib_.match(in.name);
  if (entry == nullptr || entry->ranking.empty()) {
    ++counters_.replies_sent;
    out.push_back({from, Nack{in.name, in.nonce, NackReason::NoRoute, in.trace}});
    return;
  }

  RouterId next = entry->ranking.front();
  PitEntry pe;
  pe.name = in.name;
  pe.records.emplace_back(in.nonce, from);
  pe.out_interfaces.insert(next);
  pe.expiry = now + pit_lifetime_ms_;
  pit_.emplace(in.name, std::move(pe));
  ++counters_.interests_forwarded;
  out.push_back({Iface::from_neighbor(next), NdnInterest{in.name, in.nonce, in.trace}});
}

void NdnRouter::handle_data(const NdnData& data, const Iface& from,
                            std::vector<Emission>& out) {
  auto it = pit_.find(data.name);
  if (it == pit_.end()) {
    ++counters_.drops_no_reverse_entry;
    return;
  }
  bool consumer_facing = false;
  for (const auto& [_, iface] : it->second.records) {
    ++counters_.data_sent;
    out.push_back({iface, data});
    if (iface.is_consumer())
      consumer_facing = true;
  }
  pit_.erase(it);

  switch (caching_) {
    case CachingPolicy::None:
      break;
    case CachingPolicy::OnPath:
      store_.insert(data.name, data.payload);
      break;
    case CachingPolicy::Edge:
      if (consumer_facing)
        store_.insert(data.name, data.payload);
      break;
  }
  (void)from;
}

void NdnRouter::handle_nack(const Nack& nack, std::vector<Emission>& out) {
  auto it = pit_.find(nack.name);
  if (it == pit_.end()) {
    ++counters_.drops_no_reverse_entry;
    return;
  }
  for (const auto& [nonce, iface] : it->second.records) {
    ++counters_.replies_sent;
    out.push_back({iface, Nack{nack.name, nonce, nack.reason, nack.trace}});
  }
  pit_.erase(it);
}

void NdnRouter::expire_pit(double now) {
  for (auto it = pit_.begin(); it != pit_.end();) {
    if (it->second.expiry <= now) {
      ++counters_.pit_expirations;
      it = pit_.erase(it);
    } else {
      ++it;
    }
  }
}

}  // namespace gram
