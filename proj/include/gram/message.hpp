#ifndef GRAM_MESSAGE_HPP
#define GRAM_MESSAGE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "gram/aid.hpp"
#include "gram/content_store.hpp"
#include "gram/name.hpp"

namespace gram {

// Consumer ids are synthesized per request: high half = attachment router,
// low half = serial.
using ConsumerId = std::uint64_t;

inline ConsumerId make_consumer_id(RouterId router, std::uint32_t serial) {
  return (static_cast<std::uint64_t>(router) << 32) | serial;
}
inline RouterId consumer_router(ConsumerId c) {
  return static_cast<RouterId>(c >> 32);
}

// Where a message enters or leaves a router.
struct Iface {
  enum class Kind { Neighbor, Consumer };
  Kind kind = Kind::Neighbor;
  RouterId neighbor = 0;   // valid when kind == Neighbor
  ConsumerId consumer = 0; // valid when kind == Consumer

  static Iface from_neighbor(RouterId r) { return {Kind::Neighbor, r, 0}; }
  static Iface from_consumer(ConsumerId c) { return {Kind::Consumer, 0, c}; }

  bool is_neighbor() const { return kind == Kind::Neighbor; }
  bool is_consumer() const { return kind == Kind::Consumer; }

  bool operator==(const Iface& o) const {
    return kind == o.kind && neighbor == o.neighbor && consumer == o.consumer;
  }
};

// Recipient/origin field of datagram messages: an anonymous identifier on
// router-to-router links, a consumer id on the last hop.
struct Addr {
  enum class Kind { Anon, Consumer };
  Kind kind = Kind::Anon;
  Aid aid = 0;
  ConsumerId consumer = 0;

  static Addr anon(Aid a) { return {Kind::Anon, a, 0}; }
  static Addr to_consumer(ConsumerId c) { return {Kind::Consumer, 0, c}; }

  bool is_anon() const { return kind == Kind::Anon; }
};

// Harness-only provenance tag carried alongside messages; not part of the
// wire contents a router may inspect.
using TraceId = std::uint64_t;

enum class ReplyCode { Loop, NoRoute, NoContent };

std::string to_string(ReplyCode c);

// ---- CCN-GRAM unicast messages ----

struct Interest {
  ContentName name;
  Addr origin;                       // AID on links, consumer id from users
  std::optional<std::uint32_t> distance;  // nullopt = infinite
  TraceId trace = 0;
};

struct DataPacket {
  ContentName name;
  Addr recipient;
  std::string security_payload;  // carried opaquely
  Payload payload;
  TraceId trace = 0;
};

struct Reply {
  ContentName name;
  Addr recipient;
  ReplyCode code = ReplyCode::NoRoute;
  TraceId trace = 0;
};

// ---- CCN-GRAM multicast messages ----

struct MulticastInterest {
  ContentName group;
  std::optional<std::uint32_t> distance;
  std::uint64_t mc = 0;
  TraceId trace = 0;
};

struct MulticastData {
  ContentName group;
  std::string security_payload;
  std::uint64_t mc = 0;
  Payload payload;
  TraceId trace = 0;
};

struct MulticastReply {
  ContentName group;
  ReplyCode code = ReplyCode::NoRoute;
  std::uint64_t mc = 0;
  TraceId trace = 0;
};

// ---- NDN messages ----

using Nonce = std::uint64_t;

struct NdnInterest {
  ContentName name;
  Nonce nonce = 0;
  TraceId trace = 0;
};

struct NdnData {
  ContentName name;
  std::string security_payload;
  Payload payload;
  TraceId trace = 0;
};

enum class NackReason { DuplicateNonce, NoRoute };

struct Nack {
  ContentName name;
  Nonce nonce = 0;
  NackReason reason = NackReason::NoRoute;
  TraceId trace = 0;
};

using Message = std::variant<Interest, DataPacket, Reply,
                             MulticastInterest, MulticastData, MulticastReply,
                             NdnInterest, NdnData, Nack>;

// Bytes on the wire, used for link serialization timing. Header sizes are
// nominal; the experiments measure state and delay, not throughput.
std::uint32_t wire_size(const Message& m);

// A message handed to an interface by a router handler.
struct Emission {
  Iface to;
  Message msg;
};

}  // namespace gram

#endif  // GRAM_MESSAGE_HPP
