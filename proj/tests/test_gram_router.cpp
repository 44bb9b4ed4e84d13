#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"

using namespace gram;
using namespace gram::testing;

namespace {

constexpr RouterId P = 1, Q = 2, S = 3;

GramRouter make_relay(Aid epsilon = 0, Aid len = 64, Distance dist_s = 2,
                      CachingPolicy caching = CachingPolicy::None,
                      std::size_t cache_capacity = 0) {
  auto cfg = shared_interval_config(0, {P, Q, S}, epsilon, len);
  cfg.caching = caching;
  cfg.cache_capacity = cache_capacity;
  return GramRouter(std::move(cfg), single_entry_fib("/n", {{S, dist_s}}), {},
                    nullptr);
}

Interest consumer_interest(const std::string& name, ConsumerId c) {
  return Interest{ContentName::parse(name), Addr::to_consumer(c), std::nullopt, 0};
}

Interest neighbor_interest(const std::string& name, Aid aid, Distance d) {
  return Interest{ContentName::parse(name), Addr::anon(aid), d, 0};
}

}  // namespace

TEST_CASE("lfr admission") {
  auto r = make_relay();
  FibEntry e;
  e.prefix = NamePrefix::parse("/n");

  SUBCASE("neighbor below the carried distance is admitted") {
    e.per_neighbor_distance = {{S, 2}};
    e.rebuild_ranking();
    CHECK(r.lfr_admits(e, 3) == S);
  }
  SUBCASE("missing distance means infinity, so the best neighbor wins") {
    e.per_neighbor_distance = {{P, 7}, {S, 2}};
    e.rebuild_ranking();
    CHECK(r.lfr_admits(e, std::nullopt) == S);
  }
  SUBCASE("equality is rejected") {
    e.per_neighbor_distance = {{S, 2}};
    e.rebuild_ranking();
    CHECK_FALSE(r.lfr_admits(e, 2).has_value());
  }
  SUBCASE("ties rank by neighbor id") {
    e.per_neighbor_distance = {{Q, 2}, {P, 2}};
    e.rebuild_ranking();
    CHECK(r.lfr_admits(e, 5) == P);
  }
  SUBCASE("skips neighbors that fail the strict inequality") {
    e.per_neighbor_distance = {{P, 4}, {S, 2}};
    e.rebuild_ranking();
    CHECK(r.lfr_admits(e, 3) == S);
  }
}

TEST_CASE("consumer interest with local content answers immediately") {
  auto r = make_relay(0, 64, 2, CachingPolicy::OnPath, 10);
  r.cache_insert(ContentName::parse("/n/1"), {"tok", 100});
  std::vector<Emission> out;
  r.handle(consumer_interest("/n/1", 7), Iface::from_consumer(7), 0, out);
  REQUIRE(out.size() == 1);
  CHECK(out[0].to == Iface::from_consumer(7));
  CHECK(as_data(out[0].msg).payload.token == "tok");
  CHECK(r.light().empty());
}

TEST_CASE("consumer interest creates pending state and forwards anonymized") {
  auto r = make_relay(5, 64, 2);
  std::vector<Emission> out;
  r.handle(consumer_interest("/n/1", 7), Iface::from_consumer(7), 0, out);

  REQUIRE(out.size() == 1);
  CHECK(out[0].to == Iface::from_neighbor(S));
  const auto& fwd = as_interest(out[0].msg);
  CHECK(fwd.distance == 2);  // FIB distance replaces the infinite one
  REQUIRE(fwd.origin.is_anon());
  // self aid is the smallest free identifier (0), mapped with epsilon=5
  CHECK(r.self_aid() == Aid{0});
  CHECK(fwd.origin.aid == 5);

  REQUIRE(r.light().count(ContentName::parse("/n/1")) == 1);
  const auto& le = r.light().at(ContentName::parse("/n/1"));
  CHECK(le.local_consumers == std::vector<ConsumerId>{7});

  // the self entry maps to itself
  REQUIRE(r.art().count(0) == 1);
  CHECK(r.art().at(0).is_self());
  CHECK(r.art().at(0).map == 0);
}

TEST_CASE("second consumer for a pending name aggregates locally") {
  auto r = make_relay();
  std::vector<Emission> out;
  r.handle(consumer_interest("/n/1", 7), Iface::from_consumer(7), 0, out);
  out.clear();
  r.handle(consumer_interest("/n/1", 8), Iface::from_consumer(8), 0, out);

  CHECK(out.empty());
  CHECK(r.counters().aggregated_interests == 1);
  CHECK(r.light().at(ContentName::parse("/n/1")).local_consumers ==
        std::vector<ConsumerId>{7, 8});
}

TEST_CASE("produced prefix without the object yields NO_CONTENT") {
  auto cfg = shared_interval_config(0, {S}, 0, 64);
  GramRouter r(std::move(cfg), Fib{}, {NamePrefix::parse("/n")},
               [](const ContentName&) { return std::nullopt; });
  std::vector<Emission> out;
  r.handle(consumer_interest("/n/1", 7), Iface::from_consumer(7), 0, out);
  REQUIRE(out.size() == 1);
  CHECK(as_reply(out[0].msg).code == ReplyCode::NoContent);
}

TEST_CASE("no FIB match yields NO_ROUTE") {
  auto r = make_relay();
  std::vector<Emission> out;
  r.handle(consumer_interest("/other/1", 7), Iface::from_consumer(7), 0, out);
  REQUIRE(out.size() == 1);
  CHECK(out[0].to == Iface::from_consumer(7));
  CHECK(as_reply(out[0].msg).code == ReplyCode::NoRoute);
  CHECK(r.light().empty());
}

TEST_CASE("neighbor interest without collision keys the ART by the carried aid") {
  auto r = make_relay(5, 64, 2);
  std::vector<Emission> out;
  r.handle(neighbor_interest("/n/1", 15, 3), Iface::from_neighbor(P), 0, out);

  REQUIRE(out.size() == 1);
  CHECK(out[0].to == Iface::from_neighbor(S));
  const auto& fwd = as_interest(out[0].msg);
  CHECK(fwd.distance == 2);
  CHECK(fwd.origin.aid == (5 + 15) % 64);

  REQUIRE(r.art().count(15) == 1);
  CHECK(r.art().at(15).next_hop == P);
  CHECK(r.art().at(15).map == 15);
}

TEST_CASE("neighbor interests never aggregate") {
  auto r = make_relay();
  std::vector<Emission> out;
  r.handle(neighbor_interest("/n/1", 15, 3), Iface::from_neighbor(P), 0, out);
  out.clear();
  // same name from another neighbor: forwarded again, not aggregated
  r.handle(neighbor_interest("/n/1", 16, 3), Iface::from_neighbor(Q), 0, out);
  REQUIRE(out.size() == 1);
  CHECK(out[0].to == Iface::from_neighbor(S));
  CHECK(r.counters().aggregated_interests == 0);
  CHECK(r.counters().interests_forwarded == 2);
}

TEST_CASE("carried distance not above every FIB option yields LOOP") {
  auto r = make_relay(0, 64, 2);
  std::vector<Emission> out;
  r.handle(neighbor_interest("/n/1", 15, 2), Iface::from_neighbor(P), 0, out);
  REQUIRE(out.size() == 1);
  CHECK(out[0].to == Iface::from_neighbor(P));
  const auto& rep = as_reply(out[0].msg);
  CHECK(rep.code == ReplyCode::Loop);
  CHECK(rep.recipient.aid == 15);  // echoed untranslated to the sender
  CHECK(r.art().empty());
}

TEST_CASE("aid outside the own interval is dropped") {
  auto r = make_relay(0, 64);
  std::vector<Emission> out;
  r.handle(neighbor_interest("/n/1", 64, 3), Iface::from_neighbor(P), 0, out);
  CHECK(out.empty());
  CHECK(r.counters().drops_bad_aid == 1);
}

TEST_CASE("golden relay scenario with identifier collision") {
  // Interval [0, 1024) shared by everyone, epsilon 510, ART already holding
  // keys 0..39 with 15 owned by neighbor q. The Interest I[/n/j, 15, 3] from
  // p collides, gets the fresh key 40, and leaves as I[/n/j, 550, 2]; the
  // returning data packet DP[/n/j, 550] goes back to p as DP[/n/j, 15].
  auto cfg = shared_interval_config(0, {P, Q, S}, 510, 1024);
  GramRouter r(std::move(cfg), single_entry_fib("/n", {{S, 2}}), {}, nullptr);
  for (Aid a = 0; a < 40; ++a)
    r.art_insert(ArtEntry{a, a == 15 ? Q : S, a + 500});

  std::vector<Emission> out;
  r.handle(neighbor_interest("/n/j", 15, 3), Iface::from_neighbor(P), 0, out);

  REQUIRE(out.size() == 1);
  CHECK(out[0].to == Iface::from_neighbor(S));
  CHECK(as_interest(out[0].msg).origin.aid == 550);
  CHECK(as_interest(out[0].msg).distance == 2);

  REQUIRE(r.art().count(40) == 1);
  CHECK(r.art().at(40).next_hop == P);
  CHECK(r.art().at(40).map == 15);

  out.clear();
  DataPacket dp{ContentName::parse("/n/j"), Addr::anon(550), "sp", {"x", 64}, 0};
  r.handle(Message{dp}, Iface::from_neighbor(S), 0, out);
  REQUIRE(out.size() == 1);
  CHECK(out[0].to == Iface::from_neighbor(P));
  CHECK(as_data(out[0].msg).recipient.aid == 15);
}

TEST_CASE("repeat interests from the same upstream flow reuse the ART entry") {
  auto r = make_relay();
  std::vector<Emission> out;
  for (int k = 0; k < 50; ++k) {
    out.clear();
    r.handle(neighbor_interest("/n/" + std::to_string(k), 15, 3),
             Iface::from_neighbor(P), 0, out);
    REQUIRE(out.size() == 1);
  }
  // 50 distinct names, one upstream flow: exactly one ART entry.
  CHECK(r.art().size() == 1);
}

TEST_CASE("art growth is bounded by distinct upstream flows") {
  auto r = make_relay();
  std::vector<Emission> out;
  int flows = 0;
  for (RouterId nbr : {P, Q}) {
    for (Aid a = 10; a < 20; ++a) {
      ++flows;
      for (int k = 0; k < 5; ++k) {
        out.clear();
        r.handle(neighbor_interest("/n/" + std::to_string(k), a, 3),
                 Iface::from_neighbor(nbr), 0, out);
      }
    }
  }
  CHECK(r.art().size() <= static_cast<std::size_t>(flows));
}

TEST_CASE("data for the self entry fans out to all waiting consumers") {
  auto r = make_relay(0, 64, 2, CachingPolicy::OnPath, 10);
  std::vector<Emission> out;
  r.handle(consumer_interest("/n/1", 7), Iface::from_consumer(7), 0, out);
  r.handle(consumer_interest("/n/1", 8), Iface::from_consumer(8), 0, out);
  out.clear();

  // epsilon 0, shared interval: the data packet carries the self aid directly
  DataPacket dp{ContentName::parse("/n/1"), Addr::anon(*r.self_aid()), "sp",
                {"x", 64}, 0};
  r.handle(Message{dp}, Iface::from_neighbor(S), 0, out);

  REQUIRE(out.size() == 2);
  CHECK(out[0].to == Iface::from_consumer(7));
  CHECK(out[1].to == Iface::from_consumer(8));
  CHECK(r.light().empty());
  CHECK(r.store().contains(ContentName::parse("/n/1")));
}

TEST_CASE("data with no reverse entry is dropped") {
  auto r = make_relay();
  std::vector<Emission> out;
  DataPacket dp{ContentName::parse("/n/1"), Addr::anon(9), "sp", {"x", 64}, 0};
  r.handle(Message{dp}, Iface::from_neighbor(S), 0, out);
  CHECK(out.empty());
  CHECK(r.counters().drops_no_reverse_entry == 1);
}

TEST_CASE("replies follow the reverse path and delete pending state") {
  auto r = make_relay();
  std::vector<Emission> out;
  r.handle(consumer_interest("/n/1", 7), Iface::from_consumer(7), 0, out);
  out.clear();

  Reply rep{ContentName::parse("/n/1"), Addr::anon(*r.self_aid()),
            ReplyCode::Loop, 0};
  r.handle(Message{rep}, Iface::from_neighbor(S), 0, out);
  REQUIRE(out.size() == 1);
  CHECK(out[0].to == Iface::from_consumer(7));
  CHECK(as_reply(out[0].msg).code == ReplyCode::Loop);
  CHECK(r.light().empty());

  // relay case: reply translated via the ART map field
  out.clear();
  r.handle(neighbor_interest("/n/2", 30, 3), Iface::from_neighbor(P), 0, out);
  out.clear();
  Reply rep2{ContentName::parse("/n/2"), Addr::anon(30), ReplyCode::NoRoute, 0};
  r.handle(Message{rep2}, Iface::from_neighbor(S), 0, out);
  REQUIRE(out.size() == 1);
  CHECK(out[0].to == Iface::from_neighbor(P));
  CHECK(as_reply(out[0].msg).recipient.aid == 30);
}

TEST_CASE("relay state never names an origin beyond one hop") {
  // Chain: origin router 0 -> relay -> S. The relay is built standalone and
  // fed Interests carrying only anonymous identifiers; its resulting state
  // must reference nothing but immediate neighbors.
  auto r = make_relay(17, 64, 2);
  std::vector<Emission> out;
  for (Aid a = 0; a < 8; ++a)
    r.handle(neighbor_interest("/n/" + std::to_string(a), a, 3),
             Iface::from_neighbor(P), 0, out);

  for (const auto& [aid, e] : r.art()) {
    CHECK(e.aid < 64);
    CHECK(e.map < 64);
    if (e.next_hop)
      CHECK((*e.next_hop == P || *e.next_hop == Q || *e.next_hop == S));
  }
  for (const auto& em : out) {
    const auto& fwd = as_interest(em.msg);
    CHECK(fwd.origin.is_anon());  // no consumer or router id on the wire
  }
  CHECK(r.light().empty());  // relays keep no per-name pending state
}

TEST_CASE("exhausted identifier interval answers NO_ROUTE") {
  auto cfg = shared_interval_config(0, {P, S}, 0, 4);
  GramRouter r(std::move(cfg), single_entry_fib("/n", {{S, 2}}), {}, nullptr);
  for (Aid a = 0; a < 4; ++a)
    r.art_insert(ArtEntry{a, S, a});

  std::vector<Emission> out;
  // aid 1 collides with an entry owned by S and no identifier is free
  r.handle(neighbor_interest("/n/1", 1, 3), Iface::from_neighbor(P), 0, out);
  REQUIRE(out.size() == 1);
  CHECK(as_reply(out[0].msg).code == ReplyCode::NoRoute);
  CHECK(r.counters().aid_exhaustion == 1);
}
