#ifndef GRAM_SNAPSHOT_HPP
#define GRAM_SNAPSHOT_HPP

#include <string>

#include <json.hpp>

#include "gram/engine.hpp"
#include "gram/gram_router.hpp"
#include "gram/message.hpp"
#include "gram/ndn_router.hpp"

namespace gram {

// Structured dump of one router's tables and counters, taken at a sampling
// instant. This is the wire contract for the metrics/analysis side.
nlohmann::json snapshot_json(const GramRouter& router);
nlohmann::json snapshot_json(const NdnRouter& router);

// Wire-visible fields of a message, exactly as a neighbor would see them.
// Harness-only metadata (trace tags) is excluded on purpose.
nlohmann::json wire_json(const Message& msg);

// One event-trace record as a JSON line.
std::string trace_record_line(const TraceRecord& rec);

}  // namespace gram

#endif  // GRAM_SNAPSHOT_HPP
