#include "gram/snapshot.hpp"

namespace gram {

using nlohmann::json;

namespace {

json addr_json(const Addr& a) {
  if (a.is_anon())
    return json{{"aid", a.aid}};
  return json{{"consumer", a.consumer}};
}

json counters_json(const RouterCounters& c) {
  return json{
      {"interest_receptions", c.interest_receptions},
      {"aggregated_interests", c.aggregated_interests},
      {"interests_forwarded", c.interests_forwarded},
      {"data_sent", c.data_sent},
      {"replies_sent", c.replies_sent},
      {"drops_malformed", c.drops_malformed},
      {"drops_no_reverse_entry", c.drops_no_reverse_entry},
      {"drops_bad_aid", c.drops_bad_aid},
      {"aid_exhaustion", c.aid_exhaustion},
      {"pit_expirations", c.pit_expirations},
  };
}

}  // namespace

json snapshot_json(const GramRouter& router) {
  json art = json::array();
  for (const auto& [aid, e] : router.art()) {
    json entry{{"aid", e.aid}, {"map", e.map}};
    if (e.next_hop)
      entry["next_hop"] = *e.next_hop;
    else
      entry["next_hop"] = "self";
    art.push_back(std::move(entry));
  }
  json light = json::array();
  for (const auto& [name, e] : router.light()) {
    json consumers = json::array();
    for (ConsumerId c : e.local_consumers)
      consumers.push_back(c);
    light.push_back(json{{"name", name.to_string()}, {"local_consumers", consumers}});
  }
  json mart = json::array();
  for (const auto& [group, e] : router.mcast().mart) {
    json hops = json::array();
    for (RouterId q : e.next_hops)
      hops.push_back(q);
    if (e.self)
      hops.push_back("self");
    mart.push_back(json{{"group", group.to_string()}, {"mc", e.mc}, {"next_hops", hops}});
  }
  return json{
      {"router", router.id()},
      {"plane", "gram"},
      {"art", art},
      {"light", light},
      {"mart", mart},
      {"cache_size", router.store().size()},
      {"counters", counters_json(router.counters())},
  };
}

json snapshot_json(const NdnRouter& router) {
  json pit = json::array();
  for (const auto& [name, e] : router.pit()) {
    json records = json::array();
    for (const auto& [nonce, iface] : e.records) {
      json rec{{"nonce", nonce}};
      if (iface.is_consumer())
        rec["in"] = json{{"consumer", iface.consumer}};
      else
        rec["in"] = json{{"neighbor", iface.neighbor}};
      records.push_back(std::move(rec));
    }
    pit.push_back(json{{"name", name.to_string()}, {"records", records},
                       {"expiry_ms", e.expiry}});
  }
  return json{
      {"router", router.id()},
      {"plane", "ndn"},
      {"pit", pit},
      {"cache_size", router.store().size()},
      {"counters", counters_json(router.counters())},
  };
}

json wire_json(const Message& msg) {
  return std::visit(
      [](const auto& m) -> json {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, Interest>) {
          json j{{"type", "interest"}, {"name", m.name.to_string()},
                 {"origin", addr_json(m.origin)}};
          if (m.distance)
            j["distance"] = *m.distance;
          return j;
        } else if constexpr (std::is_same_v<T, DataPacket>) {
          return json{{"type", "data"}, {"name", m.name.to_string()},
                      {"recipient", addr_json(m.recipient)},
                      {"sp", m.security_payload},
                      {"payload_size", m.payload.wire_size}};
        } else if constexpr (std::is_same_v<T, Reply>) {
          return json{{"type", "reply"}, {"name", m.name.to_string()},
                      {"recipient", addr_json(m.recipient)},
                      {"code", to_string(m.code)}};
        } else if constexpr (std::is_same_v<T, MulticastInterest>) {
          json j{{"type", "m_interest"}, {"group", m.group.to_string()}, {"mc", m.mc}};
          if (m.distance)
            j["distance"] = *m.distance;
          return j;
        } else if constexpr (std::is_same_v<T, MulticastData>) {
          return json{{"type", "m_data"}, {"group", m.group.to_string()}, {"mc", m.mc},
                      {"payload_size", m.payload.wire_size}};
        } else if constexpr (std::is_same_v<T, MulticastReply>) {
          return json{{"type", "m_reply"}, {"group", m.group.to_string()},
                      {"code", to_string(m.code)}, {"mc", m.mc}};
        } else if constexpr (std::is_same_v<T, NdnInterest>) {
          return json{{"type", "ndn_interest"}, {"name", m.name.to_string()},
                      {"nonce", m.nonce}};
        } else if constexpr (std::is_same_v<T, NdnData>) {
          return json{{"type", "ndn_data"}, {"name", m.name.to_string()},
                      {"sp", m.security_payload},
                      {"payload_size", m.payload.wire_size}};
        } else {
          static_assert(std::is_same_v<T, Nack>);
          return json{{"type", "nack"}, {"name", m.name.to_string()},
                      {"nonce", m.nonce},
                      {"reason", m.reason == NackReason::DuplicateNonce
                                     ? "duplicate_nonce" : "no_route"}};
        }
      },
      msg);
}

std::string trace_record_line(const TraceRecord& rec) {
  json j;
  j["time_ms"] = rec.time;
  if (rec.to_consumer) {
    j["to"] = json{{"consumer", rec.consumer}};
  } else {
    j["to"] = json{{"router", rec.router}};
    if (rec.from.is_consumer())
      j["from"] = json{{"consumer", rec.from.consumer}};
    else
      j["from"] = json{{"neighbor", rec.from.neighbor}};
  }
  j["msg"] = wire_json(rec.msg);
  return j.dump();
}

}  // namespace gram
