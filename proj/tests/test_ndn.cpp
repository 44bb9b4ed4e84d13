#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gram/ndn_router.hpp"
#include "helpers.hpp"

using namespace gram;
using namespace gram::testing;

namespace {

constexpr RouterId P = 1, S = 3;

NdnRouter make_router(CachingPolicy caching = CachingPolicy::None,
                      std::size_t cache = 0, double pit_lifetime = 2000) {
  NdnRouter::Config cfg;
  cfg.id = 0;
  cfg.caching = caching;
  cfg.cache_capacity = cache;
  cfg.pit_lifetime_ms = pit_lifetime;
  return NdnRouter(std::move(cfg), single_entry_fib("/n", {{S, 2}}), {}, nullptr);
}

NdnInterest interest(const std::string& name, Nonce nonce) {
  return NdnInterest{ContentName::parse(name), nonce, 0};
}

}  // namespace

TEST_CASE("distinct nonces aggregate, one forwarded") {
  auto r = make_router();
  std::vector<Emission> out;
  r.handle(Message{interest("/n/1", 100)}, Iface::from_neighbor(P), 0, out);
  REQUIRE(out.size() == 1);
  CHECK(out[0].to == Iface::from_neighbor(S));

  out.clear();
  r.handle(Message{interest("/n/1", 101)}, Iface::from_consumer(9), 0, out);
  CHECK(out.empty());
  CHECK(r.counters().aggregated_interests == 1);
  CHECK(r.pit().at(ContentName::parse("/n/1")).records.size() == 2);
}

TEST_CASE("duplicate nonce draws a NACK without touching the PIT") {
  auto r = make_router();
  std::vector<Emission> out;
  r.handle(Message{interest("/n/1", 100)}, Iface::from_neighbor(P), 0, out);
  out.clear();
  r.handle(Message{interest("/n/1", 100)}, Iface::from_neighbor(P), 0, out);
  REQUIRE(out.size() == 1);
  const auto& nack = std::get<Nack>(out[0].msg);
  CHECK(nack.reason == NackReason::DuplicateNonce);
  CHECK(r.pit().at(ContentName::parse("/n/1")).records.size() == 1);
}

TEST_CASE("content-store hit answers without PIT mutation") {
  auto r = make_router(CachingPolicy::OnPath, 10);
  r.cache_insert(ContentName::parse("/n/1"), {"tok", 64});
  std::vector<Emission> out;
  r.handle(Message{interest("/n/1", 100)}, Iface::from_neighbor(P), 0, out);
  REQUIRE(out.size() == 1);
  CHECK(std::get<NdnData>(out[0].msg).payload.token == "tok");
  CHECK(r.pit().empty());
}

TEST_CASE("no route yields a NACK") {
  auto r = make_router();
  std::vector<Emission> out;
  r.handle(Message{interest("/other/1", 100)}, Iface::from_consumer(9), 0, out);
  REQUIRE(out.size() == 1);
  CHECK(std::get<Nack>(out[0].msg).reason == NackReason::NoRoute);
}

TEST_CASE("data fans out to every recorded interface and erases the entry") {
  auto r = make_router(CachingPolicy::OnPath, 10);
  std::vector<Emission> out;
  r.handle(Message{interest("/n/1", 100)}, Iface::from_neighbor(P), 0, out);
  r.handle(Message{interest("/n/1", 101)}, Iface::from_consumer(9), 0, out);
  r.handle(Message{interest("/n/1", 102)}, Iface::from_consumer(10), 0, out);
  out.clear();

  NdnData data{ContentName::parse("/n/1"), "sp", {"x", 64}, 0};
  r.handle(Message{data}, Iface::from_neighbor(S), 5, out);
  REQUIRE(out.size() == 3);
  CHECK(out[0].to == Iface::from_neighbor(P));
  CHECK(out[1].to == Iface::from_consumer(9));
  CHECK(out[2].to == Iface::from_consumer(10));
  CHECK(r.pit().empty());
  CHECK(r.store().contains(ContentName::parse("/n/1")));
}

TEST_CASE("edge caching stores only at consumer-facing routers") {
  auto relay = make_router(CachingPolicy::Edge, 10);
  std::vector<Emission> out;
  relay.handle(Message{interest("/n/1", 100)}, Iface::from_neighbor(P), 0, out);
  out.clear();
  relay.handle(Message{NdnData{ContentName::parse("/n/1"), "sp", {"x", 64}, 0}},
               Iface::from_neighbor(S), 5, out);
  CHECK_FALSE(relay.store().contains(ContentName::parse("/n/1")));

  auto edge = make_router(CachingPolicy::Edge, 10);
  out.clear();
  edge.handle(Message{interest("/n/1", 100)}, Iface::from_consumer(9), 0, out);
  out.clear();
  edge.handle(Message{NdnData{ContentName::parse("/n/1"), "sp", {"x", 64}, 0}},
              Iface::from_neighbor(S), 5, out);
  CHECK(edge.store().contains(ContentName::parse("/n/1")));
}

TEST_CASE("unsolicited data is dropped") {
  auto r = make_router();
  std::vector<Emission> out;
  r.handle(Message{NdnData{ContentName::parse("/n/1"), "sp", {"x", 64}, 0}},
           Iface::from_neighbor(S), 5, out);
  CHECK(out.empty());
  CHECK(r.counters().drops_no_reverse_entry == 1);
}

TEST_CASE("nacks propagate per recorded nonce and erase the entry") {
  auto r = make_router();
  std::vector<Emission> out;
  r.handle(Message{interest("/n/1", 100)}, Iface::from_neighbor(P), 0, out);
  r.handle(Message{interest("/n/1", 101)}, Iface::from_consumer(9), 0, out);
  out.clear();

  r.handle(Message{Nack{ContentName::parse("/n/1"), 999, NackReason::NoRoute, 0}},
           Iface::from_neighbor(S), 5, out);
  REQUIRE(out.size() == 2);
  CHECK(std::get<Nack>(out[0].msg).nonce == 100);  // each gets its own nonce back
  CHECK(std::get<Nack>(out[1].msg).nonce == 101);
  CHECK(r.pit().empty());
}

TEST_CASE("entries expire only past their lifetime") {
  auto r = make_router(CachingPolicy::None, 0, 100);
  std::vector<Emission> out;
  r.handle(Message{interest("/n/1", 100)}, Iface::from_neighbor(P), 0, out);

  r.expire_pit(99);
  CHECK(r.pit().size() == 1);
  r.expire_pit(100);
  CHECK(r.pit().empty());
  CHECK(r.counters().pit_expirations == 1);

  // answered entries vanish before expiry and never count as expired
  out.clear();
  r.handle(Message{interest("/n/2", 200)}, Iface::from_neighbor(P), 0, out);
  out.clear();
  r.handle(Message{NdnData{ContentName::parse("/n/2"), "sp", {"x", 64}, 0}},
           Iface::from_neighbor(S), 50, out);
  r.expire_pit(1000);
  CHECK(r.counters().pit_expirations == 1);
}
