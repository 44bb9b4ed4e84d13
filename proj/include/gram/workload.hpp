#ifndef GRAM_WORKLOAD_HPP
#define GRAM_WORKLOAD_HPP

#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "gram/name.hpp"
#include "gram/rng.hpp"

namespace gram {

// The published object universe: `size` objects split uniformly across
// producers. Object k lives at producer k mod P under prefix /p<pid>.
class Catalog {
public:
  Catalog(std::uint64_t size, std::uint32_t producer_count,
          std::uint32_t payload_size = 1024)
      : size_(size), producer_count_(producer_count), payload_size_(payload_size) {}

  std::uint64_t size() const { return size_; }
  std::uint32_t producer_count() const { return producer_count_; }
  std::uint32_t payload_size() const { return payload_size_; }

  ContentName object_name(std::uint64_t k) const;
  NamePrefix producer_prefix(std::uint32_t pid) const;

  // Object index encoded in `name`, when the name is a catalog object.
  std::optional<std::uint64_t> parse_object(const ContentName& name) const;

  // True when producer `pid` publishes the object `name` refers to.
  bool produced_by(const ContentName& name, std::uint32_t pid) const;

private:
  std::uint64_t size_;
  std::uint32_t producer_count_;
  std::uint32_t payload_size_;
};

// Zipf(alpha) over ranks [0, n): P(r) proportional to 1/(r+1)^alpha.
// alpha = 0 degenerates to uniform.
class ZipfSampler {
public:
  ZipfSampler(std::uint64_t n, double alpha);

  std::uint64_t draw(Rng& rng) const;
  // Draw restricted to the top `limit` ranks, renormalized.
  std::uint64_t draw_truncated(Rng& rng, std::uint64_t limit) const;

  double pmf(std::uint64_t rank) const;
  std::uint64_t n() const { return cdf_.size(); }

private:
  std::vector<double> cdf_;
};

// Temporal-locality approximation: the rank-to-object assignment is
// re-permuted once per epoch and draws are confined to a hot subset whose
// size shrinks with the locality factor. Factor 0 disables the model.
class LocalityModel {
public:
  LocalityModel(std::uint64_t catalog_size, double factor, double epoch_ms,
                std::uint64_t seed);

  bool enabled() const { return factor_ > 0; }
  double factor() const { return factor_; }
  std::uint64_t hot_size() const { return hot_size_; }

  std::uint64_t object_for(std::uint64_t rank, double now_ms) const;

private:
  std::uint64_t catalog_size_;
  double factor_;
  double epoch_ms_;
  std::uint64_t seed_;
  std::uint64_t hot_size_;
};

// Draws the next requested object for a consumer.
class RequestSampler {
public:
  RequestSampler(const Catalog& catalog, double zipf_alpha, double locality_factor,
                 double epoch_ms, std::uint64_t seed)
      : catalog_(&catalog),
        zipf_(catalog.size(), zipf_alpha),
        locality_(catalog.size(), locality_factor, epoch_ms, seed) {}

  ContentName draw(Rng& rng, double now_ms) const;

  const ZipfSampler& zipf() const { return zipf_; }
  const LocalityModel& locality() const { return locality_; }

private:
  const Catalog* catalog_;
  ZipfSampler zipf_;
  LocalityModel locality_;
};

}  // namespace gram

#endif  // GRAM_WORKLOAD_HPP
