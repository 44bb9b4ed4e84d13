#include "gram/gram_router.hpp"

#include <algorithm>

namespace gram {

GramRouter::GramRouter(Config cfg, Fib fib, std::vector<NamePrefix> produced_prefixes,
                       ProducerLookup producer_lookup)
    : id_(cfg.id),
      neighbors_(std::move(cfg.neighbors)),
      fib_(std::move(fib)),
      mapper_(cfg.epsilon, std::move(cfg.list)),
      store_(cfg.cache_capacity),
      produced_prefixes_(std::move(produced_prefixes)),
      producer_lookup_(std::move(producer_lookup)),
      caching_(cfg.caching) {}

void GramRouter::handle(const Message& msg, const Iface& from, double /*now*/,
                        std::vector<Emission>& out) {
  if (const auto* in = std::get_if<Interest>(&msg)) {
    if (from.is_consumer())
      handle_consumer_interest(*in, from.consumer, out);
    else
      handle_neighbor_interest(*in, from.neighbor, out);
  } else if (const auto* dp = std::get_if<DataPacket>(&msg)) {
    handle_data(*dp, from.neighbor, out);
  } else if (const auto* rep = std::get_if<Reply>(&msg)) {
    handle_reply(*rep, from.neighbor, out);
  } else if (const auto* mi = std::get_if<MulticastInterest>(&msg)) {
    handle_multicast_interest(*mi, from, out);
  } else if (const auto* mp = std::get_if<MulticastData>(&msg)) {
    handle_multicast_data(*mp, from.neighbor, out);
  } else if (const auto* mr = std::get_if<MulticastReply>(&msg)) {
    handle_multicast_reply(*mr, from.neighbor, out);
  } else {
    ++counters_.drops_malformed;
  }
}

std::optional<RouterId> GramRouter::lfr_admits(const FibEntry& entry,
                                               std::optional<Distance> d_in) const {
  for (RouterId v : entry.ranking) {
    Distance dv = entry.per_neighbor_distance.at(v);
    if (!d_in.has_value() || *d_in > dv)
      return v;
  }
  return std::nullopt;
}

std::optional<Payload> GramRouter::local_content(const ContentName& name) {
  if (producer_lookup_) {
    if (auto p = producer_lookup_(name))
      return p;
  }
  return store_.lookup(name);
}

bool GramRouter::produces_prefix_of(const ContentName& name) const {
  return std::any_of(produced_prefixes_.begin(), produced_prefixes_.end(),
                     [&](const NamePrefix& p) { return p.matches(name); });
}

std::optional<Aid> GramRouter::allocate_free_aid() const {
  return allocate_aid(mapper_.list().own(),
                      [this](Aid a) { return art_.count(a) != 0; });
}

void GramRouter::index_art(const ArtEntry& e) {
  if (e.next_hop)
    art_by_upstream_[{*e.next_hop, e.map}] = e.aid;
}

void GramRouter::cache_per_policy(const ContentName& name, const Payload& payload,
                                  bool at_origin) {
  switch (caching_) {
    case CachingPolicy::None:
      return;
    case CachingPolicy::OnPath:
      store_.insert(name, payload);
      return;
    case CachingPolicy::Edge:
      if (at_origin)
        store_.insert(name, payload);
      return;
  }
}

void GramRouter::handle_consumer_interest(const Interest& in, ConsumerId c,
                                          std::vector<Emission>& out) {
  ++counters_.interest_receptions;
  if (in.name.empty()) {
    ++counters_.drops_malformed;
    return;
  }

  if (auto payload = local_content(in.name)) {
    ++counters_.data_sent;
    out.push_back({Iface::from_consumer(c),
                   DataPacket{in.name, Addr::to_consumer(c), "sp", *payload, in.trace}});
    return;
  }

  if (auto it = light_.find(in.name); it != light_.end()) {
    // A request for the same object is already pending: aggregate.
    auto& lc = it->second.local_consumers;
    if (std::find(lc.begin(), lc.end(), c) == lc.end())
      lc.push_back(c);
    ++counters_.aggregated_interests;
    return;
  }

  if (produces_prefix_of(in.name)) {
    ++counters_.replies_sent;
    out.push_back({Iface::from_consumer(c),
                   Reply{in.name, Addr::to_consumer(c), ReplyCode::NoContent, in.trace}});
    return;
  }

  const FibEntry* entry = fib_.match(in.name);
  if (entry == nullptr) {
    ++counters_.replies_sent;
    out.push_back({Iface::from_consumer(c),
                   Reply{in.name, Addr::to_consumer(c), ReplyCode::NoRoute, in.trace}});
    return;
  }

  auto v = lfr_admits(*entry, in.distance);
  if (!v) {
    ++counters_.replies_sent;
    out.push_back({Iface::from_consumer(c),
                   Reply{in.name, Addr::to_consumer(c), ReplyCode::NoRoute, in.trace}});
    return;
  }

  if (!self_aid_) {
    auto a = allocate_free_aid();
    if (!a) {
      ++counters_.aid_exhaustion;
      ++counters_.replies_sent;
      out.push_back({Iface::from_consumer(c),
                     Reply{in.name, Addr::to_consumer(c), ReplyCode::NoRoute, in.trace}});
      return;
    }
    self_aid_ = *a;
    art_[*a] = ArtEntry{*a, std::nullopt, *a};
  }

  light_[in.name] = LightEntry{false, {c}};

  Interest fwd;
  fwd.name = in.name;
  fwd.origin = Addr::anon(mapper_.map_forward(*self_aid_, *v));
  fwd.distance = entry->per_neighbor_distance.at(*v);
  fwd.trace = in.trace;
  ++counters_.interests_forwarded;
  out.push_back({Iface::from_neighbor(*v), std::move(fwd)});
}

void GramRouter::handle_neighbor_interest(const Interest& in, RouterId p,
                                          std::vector<Emission>& out) {
  ++counters_.interest_receptions;
  if (!in.origin.is_anon() || !mapper_.list().own().contains(in.origin.aid)) {
    ++counters_.drops_bad_aid;
    return;
  }
  const Aid upstream_aid = in.origin.aid;

  if (auto payload = local_content(in.name)) {
    ++counters_.data_sent;
    out.push_back({Iface::from_neighbor(p),
                   DataPacket{in.name, Addr::anon(upstream_aid), "sp", *payload, in.trace}});
    return;
  }

  if (produces_prefix_of(in.name)) {
    ++counters_.replies_sent;
    out.push_back({Iface::from_neighbor(p),
                   Reply{in.name, Addr::anon(upstream_aid), ReplyCode::NoContent, in.trace}});
    return;
  }

  const FibEntry* entry = fib_.match(in.name);
  if (entry == nullptr) {
    ++counters_.replies_sent;
    out.push_back({Iface::from_neighbor(p),
                   Reply{in.name, Addr::anon(upstream_aid), ReplyCode::NoRoute, in.trace}});
    return;
  }

  auto v = lfr_admits(*entry, in.distance);
  if (!v) {
    // No next hop satisfies the loop-free rule; the Interest may be
    // traversing a loop.
    ++counters_.replies_sent;
    out.push_back({Iface::from_neighbor(p),
                   Reply{in.name, Addr::anon(upstream_aid), ReplyCode::Loop, in.trace}});
    return;
  }

  // Resolve the ART key for this (neighbor, aid) flow. An existing entry is
  // reused; a key held by a different next hop is a collision and gets a
  // fresh identifier with the original one recorded in `map`.
  Aid key;
  if (auto it = art_by_upstream_.find({p, upstream_aid}); it != art_by_upstream_.end()) {
    key = it->second;
  } else if (art_.count(upstream_aid) != 0) {
    auto a = allocate_free_aid();
    if (!a) {
      ++counters_.aid_exhaustion;
      ++counters_.replies_sent;
      out.push_back({Iface::from_neighbor(p),
                     Reply{in.name, Addr::anon(upstream_aid), ReplyCode::NoRoute, in.trace}});
      return;
    }
    key = *a;
    ArtEntry e{key, p, upstream_aid};
    art_[key] = e;
    index_art(e);
  } else {
    key = upstream_aid;
    ArtEntry e{key, p, upstream_aid};
    art_[key] = e;
    index_art(e);
  }

  Interest fwd;
  fwd.name = in.name;
  fwd.origin = Addr::anon(mapper_.map_forward(key, *v));
  fwd.distance = entry->per_neighbor_distance.at(*v);
  fwd.trace = in.trace;
  ++counters_.interests_forwarded;
  out.push_back({Iface::from_neighbor(*v), std::move(fwd)});
}

void GramRouter::handle_data(const DataPacket& dp, RouterId s,
                             std::vector<Emission>& out) {
  if (!dp.recipient.is_anon() || !mapper_.list().has_neighbor(s) ||
      !mapper_.list().neighbor(s).contains(dp.recipient.aid)) {
    ++counters_.drops_bad_aid;
    return;
  }
  Aid a = mapper_.map_inverse(dp.recipient.aid, s);
  auto it = art_.find(a);
  if (it == art_.end()) {
    ++counters_.drops_no_reverse_entry;
    return;
  }
  const ArtEntry& entry = it->second;

  if (entry.is_self()) {
    if (auto lit = light_.find(dp.name); lit != light_.end()) {
      for (ConsumerId c : lit->second.local_consumers) {
        ++counters_.data_sent;
        out.push_back({Iface::from_consumer(c),
                       DataPacket{dp.name, Addr::to_consumer(c), dp.security_payload,
                                  dp.payload, dp.trace}});
      }
      light_.erase(lit);
    }
    cache_per_policy(dp.name, dp.payload, /*at_origin=*/true);
  } else {
    ++counters_.data_sent;
    out.push_back({Iface::from_neighbor(*entry.next_hop),
                   DataPacket{dp.name, Addr::anon(entry.map), dp.security_payload,
                              dp.payload, dp.trace}});
    cache_per_policy(dp.name, dp.payload, /*at_origin=*/false);
  }
}

void GramRouter::handle_reply(const Reply& rep, RouterId s,
                              std::vector<Emission>& out) {
  if (!rep.recipient.is_anon() || !mapper_.list().has_neighbor(s) ||
      !mapper_.list().neighbor(s).contains(rep.recipient.aid)) {
    ++counters_.drops_bad_aid;
    return;
  }
  Aid a = mapper_.map_inverse(rep.recipient.aid, s);
  auto it = art_.find(a);
  if (it == art_.end()) {
    ++counters_.drops_no_reverse_entry;
    return;
  }
  const ArtEntry& entry = it->second;

  if (entry.is_self()) {
    if (auto lit = light_.find(rep.name); lit != light_.end()) {
      for (ConsumerId c : lit->second.local_consumers) {
        ++counters_.replies_sent;
        out.push_back({Iface::from_consumer(c),
                       Reply{rep.name, Addr::to_consumer(c), rep.code, rep.trace}});
      }
      light_.erase(lit);
    }
  } else {
    ++counters_.replies_sent;
    out.push_back({Iface::from_neighbor(*entry.next_hop),
                   Reply{rep.name, Addr::anon(entry.map), rep.code, rep.trace}});
  }
}

// ---- multicast ----

namespace {

bool produces_group(const std::vector<NamePrefix>& produced, const ContentName& group) {
  return std::any_of(produced.begin(), produced.end(), [&](const NamePrefix& p) {
    return p.components() == group.components();
  });
}

}  // namespace

void GramRouter::emit_multicast(const ContentName& group, std::uint64_t mc,
                                Payload payload, std::vector<Emission>& out) {
  auto it = mcast_.mart.find(group);
  if (it == mcast_.mart.end())
    return;  // no receivers joined yet
  MartEntry& entry = it->second;
  if (mc > entry.mc)
    entry.mc = mc;
  MulticastData mp{group, "sp", mc, std::move(payload), 0};
  for (RouterId q : entry.next_hops) {
    ++counters_.data_sent;
    out.push_back({Iface::from_neighbor(q), mp});
  }
  if (entry.self) {
    for (ConsumerId c : mcast_.gmt[group].local_receivers) {
      ++counters_.data_sent;
      out.push_back({Iface::from_consumer(c), mp});
    }
  }
}

void GramRouter::handle_multicast_interest(const MulticastInterest& mi,
                                           const Iface& from,
                                           std::vector<Emission>& out) {
  ++counters_.interest_receptions;
  const bool is_source = produces_group(produced_prefixes_, mi.group);

  auto reply_to_sender = [&](ReplyCode code) {
    ++counters_.replies_sent;
    out.push_back({from, MulticastReply{mi.group, code, mi.mc, mi.trace}});
  };

  auto it = mcast_.mart.find(mi.group);
  const bool had_entry = it != mcast_.mart.end();

  // A sender that is not yet a next hop is joining the group.
  bool sender_is_next_hop = false;
  if (had_entry) {
    if (from.is_consumer())
      sender_is_next_hop = it->second.self &&
          mcast_.gmt[mi.group].local_receivers.count(from.consumer) != 0;
    else
      sender_is_next_hop = it->second.next_hops.count(from.neighbor) != 0;
  }

  if (!had_entry && !is_source) {
    // First join seen here: route toward the source before accepting state.
    const FibEntry* entry = fib_.match(mi.group);
    if (entry == nullptr) {
      reply_to_sender(ReplyCode::NoRoute);
      return;
    }
    auto v = lfr_admits(*entry, from.is_consumer() ? std::nullopt : mi.distance);
    if (!v) {
      reply_to_sender(ReplyCode::Loop);
      return;
    }
    MartEntry& me = mcast_.mart[mi.group];
    me.mc = mi.mc;
    if (from.is_consumer()) {
      me.self = true;
      mcast_.gmt[mi.group].local_receivers.insert(from.consumer);
    } else {
      me.next_hops.insert(from.neighbor);
    }
    MulticastInterest fwd{mi.group, entry->per_neighbor_distance.at(*v), mi.mc, mi.trace};
    ++counters_.interests_forwarded;
    out.push_back({Iface::from_neighbor(*v), std::move(fwd)});
    return;
  }

  if (!had_entry && is_source) {
    MartEntry& me = mcast_.mart[mi.group];
    me.mc = mi.mc;
    if (from.is_consumer()) {
      me.self = true;
      mcast_.gmt[mi.group].local_receivers.insert(from.consumer);
    } else {
      me.next_hops.insert(from.neighbor);
    }
    return;
  }

  MartEntry& me = it->second;
  if (!sender_is_next_hop) {
    // Subsequent join: add the next hop, no upstream forwarding.
    if (from.is_consumer()) {
      me.self = true;
      mcast_.gmt[mi.group].local_receivers.insert(from.consumer);
    } else {
      me.next_hops.insert(from.neighbor);
    }
    ++counters_.aggregated_interests;
    return;
  }

  // Pull pacing: forward a single Interest per counter value.
  if (mi.mc == me.mc + 1) {
    me.mc = mi.mc;
    if (is_source) {
      // The source answers the paced request with the next object.
      Payload payload{mi.group.to_string() + "/" + std::to_string(mi.mc), 1024};
      emit_multicast(mi.group, mi.mc, std::move(payload), out);
      return;
    }
    const FibEntry* entry = fib_.match(mi.group);
    if (entry == nullptr) {
      reply_to_sender(ReplyCode::NoRoute);
      return;
    }
    auto v = lfr_admits(*entry, from.is_consumer() ? std::nullopt : mi.distance);
    if (!v) {
      reply_to_sender(ReplyCode::Loop);
      return;
    }
    MulticastInterest fwd{mi.group, entry->per_neighbor_distance.at(*v), mi.mc, mi.trace};
    ++counters_.interests_forwarded;
    out.push_back({Iface::from_neighbor(*v), std::move(fwd)});
    return;
  }

  if (mi.mc > me.mc + 1)
    ++counters_.mc_gap_drops;
  else
    ++counters_.mc_stale_drops;
}

void GramRouter::handle_multicast_data(const MulticastData& mp, RouterId s,
                                       std::vector<Emission>& out) {
  auto it = mcast_.mart.find(mp.group);
  if (it == mcast_.mart.end()) {
    ++counters_.drops_no_reverse_entry;
    return;
  }
  MartEntry& entry = it->second;
  if (mp.mc > entry.mc)
    entry.mc = mp.mc;
  for (RouterId q : entry.next_hops) {
    if (q == s)
      continue;
    ++counters_.data_sent;
    out.push_back({Iface::from_neighbor(q), mp});
  }
  if (entry.self) {
    for (ConsumerId c : mcast_.gmt[mp.group].local_receivers) {
      ++counters_.data_sent;
      out.push_back({Iface::from_consumer(c), mp});
    }
  }
}

void GramRouter::handle_multicast_reply(const MulticastReply& mr, RouterId s,
                                        std::vector<Emission>& out) {
  auto it = mcast_.mart.find(mr.group);
  if (it == mcast_.mart.end()) {
    ++counters_.drops_no_reverse_entry;
    return;
  }
  const MartEntry& entry = it->second;
  for (RouterId q : entry.next_hops) {
    if (q == s)
      continue;
    ++counters_.replies_sent;
    out.push_back({Iface::from_neighbor(q), mr});
  }
  if (entry.self) {
    for (ConsumerId c : mcast_.gmt.at(mr.group).local_receivers) {
      ++counters_.replies_sent;
      out.push_back({Iface::from_consumer(c), mr});
    }
  }
}

}  // namespace gram
