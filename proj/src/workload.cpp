#include "gram/workload.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace gram {

ContentName Catalog::object_name(std::uint64_t k) const {
  std::uint32_t pid = static_cast<std::uint32_t>(k % producer_count_);
  return ContentName({"p" + std::to_string(pid), std::to_string(k)});
}

NamePrefix Catalog::producer_prefix(std::uint32_t pid) const {
  return NamePrefix({"p" + std::to_string(pid)});
}

std::optional<std::uint64_t> Catalog::parse_object(const ContentName& name) const {
  const auto& comps = name.components();
  if (comps.size() != 2 || comps[0].empty() || comps[0][0] != 'p')
    return std::nullopt;
  std::uint64_t k = 0;
  for (char c : comps[1]) {
    if (c < '0' || c > '9')
      return std::nullopt;
    k = k * 10 + static_cast<std::uint64_t>(c - '0');
  }
  if (k >= size_)
    return std::nullopt;
  if (comps[0] != "p" + std::to_string(k % producer_count_))
    return std::nullopt;
  return k;
}

bool Catalog::produced_by(const ContentName& name, std::uint32_t pid) const {
  auto k = parse_object(name);
  return k.has_value() && *k % producer_count_ == pid;
}

ZipfSampler::ZipfSampler(std::uint64_t n, double alpha) {
  if (n == 0)
    throw std::invalid_argument("zipf needs a non-empty catalog");
  if (alpha < 0)
    throw std::invalid_argument("zipf alpha must be non-negative");
  cdf_.resize(n);
  double acc = 0;
  for (std::uint64_t r = 0; r < n; ++r) {
    acc += std::pow(static_cast<double>(r + 1), -alpha);
    cdf_[r] = acc;
  }
}

std::uint64_t ZipfSampler::draw(Rng& rng) const {
  return draw_truncated(rng, cdf_.size());
}

std::uint64_t ZipfSampler::draw_truncated(Rng& rng, std::uint64_t limit) const {
  limit = std::min<std::uint64_t>(limit, cdf_.size());
  double total = cdf_[limit - 1];
  std::uniform_real_distribution<double> u(0.0, total);
  double x = u(rng);
  auto it = std::lower_bound(cdf_.begin(), cdf_.begin() + limit, x);
  return static_cast<std::uint64_t>(it - cdf_.begin());
}

double ZipfSampler::pmf(std::uint64_t rank) const {
  double mass = rank == 0 ? cdf_[0] : cdf_[rank] - cdf_[rank - 1];
  return mass / cdf_.back();
}

LocalityModel::LocalityModel(std::uint64_t catalog_size, double factor,
                             double epoch_ms, std::uint64_t seed)
    : catalog_size_(catalog_size),
      factor_(factor),
      epoch_ms_(epoch_ms),
      seed_(seed) {
  hot_size_ = factor > 0
      ? std::max<std::uint64_t>(1, static_cast<std::uint64_t>(catalog_size / factor))
      : catalog_size;
}

std::uint64_t LocalityModel::object_for(std::uint64_t rank, double now_ms) const {
  if (!enabled())
    return rank;
  std::uint64_t epoch = epoch_ms_ > 0
      ? static_cast<std::uint64_t>(now_ms / epoch_ms_)
      : 0;
  // Per-epoch affine permutation of the catalog: obj = a*rank + b mod M
  // with a coprime to M.
  Rng rng(seed_ ^ (epoch * 0x9e3779b97f4a7c15ull + 0x2545f4914f6cdd1dull));
  std::uniform_int_distribution<std::uint64_t> dist(1, catalog_size_ - 1);
  std::uint64_t a = dist(rng);
  while (std::gcd(a, catalog_size_) != 1)
    a = dist(rng);
  std::uint64_t b = dist(rng);
  return (a * (rank % catalog_size_) + b) % catalog_size_;
}

ContentName RequestSampler::draw(Rng& rng, double now_ms) const {
  std::uint64_t rank = locality_.enabled()
      ? zipf_.draw_truncated(rng, locality_.hot_size())
      : zipf_.draw(rng);
  return catalog_->object_name(locality_.object_for(rank, now_ms));
}

}  // namespace gram
