#include "gram/message.hpp"

namespace gram {

std::string to_string(ReplyCode c) {
  switch (c) {
    case ReplyCode::Loop: return "loop";
    case ReplyCode::NoRoute: return "no_route";
    case ReplyCode::NoContent: return "no_content";
  }
  return "?";
}

namespace {

std::uint32_t name_bytes(const ContentName& n) {
  std::uint32_t total = 0;
  for (const auto& c : n.components())
    total += static_cast<std::uint32_t>(c.size()) + 1;
  return total;
}

constexpr std::uint32_t kHeader = 24;

struct SizeVisitor {
  std::uint32_t operator()(const Interest& m) const { return kHeader + name_bytes(m.name); }
  std::uint32_t operator()(const DataPacket& m) const {
    return kHeader + name_bytes(m.name) + m.payload.wire_size +
           static_cast<std::uint32_t>(m.security_payload.size());
  }
  std::uint32_t operator()(const Reply& m) const { return kHeader + name_bytes(m.name); }
  std::uint32_t operator()(const MulticastInterest& m) const {
    return kHeader + name_bytes(m.group);
  }
  std::uint32_t operator()(const MulticastData& m) const {
    return kHeader + name_bytes(m.group) + m.payload.wire_size +
           static_cast<std::uint32_t>(m.security_payload.size());
  }
  std::uint32_t operator()(const MulticastReply& m) const {
    return kHeader + name_bytes(m.group);
  }
  std::uint32_t operator()(const NdnInterest& m) const { return kHeader + name_bytes(m.name); }
  std::uint32_t operator()(const NdnData& m) const {
    return kHeader + name_bytes(m.name) + m.payload.wire_size +
           static_cast<std::uint32_t>(m.security_payload.size());
  }
  std::uint32_t operator()(const Nack& m) const { return kHeader + name_bytes(m.name); }
};

}  // namespace

std::uint32_t wire_size(const Message& m) {
  return std::visit(SizeVisitor{}, m);
}

}  // namespace gram
