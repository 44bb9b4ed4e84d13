#ifndef GRAM_METRICS_HPP
#define GRAM_METRICS_HPP

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gram {

struct TableStats {
  double mean = 0;  // router-mean of per-router time means
  double stddev = 0;  // spread of the per-router time means
};

// Time series row: router-mean table sizes at one sampling instant.
struct SampleRow {
  double time_ms = 0;
  double pit_mean = 0;
  double art_mean = 0;
  double light_mean = 0;
};

struct RunMetrics {
  std::uint64_t interest_receptions = 0;
  std::uint64_t aggregated_interests = 0;
  // Absent when no Interests were received.
  std::optional<double> aggregation_pct;
  std::uint64_t delivered = 0;
  std::uint64_t failed = 0;
  std::uint64_t delay_samples = 0;
  double mean_delay_ms = 0;
  TableStats pit;
  TableStats art;
  TableStats light;
  std::uint64_t drops_no_reverse_entry = 0;
  std::uint64_t aid_exhaustion = 0;
  std::uint64_t pit_expirations = 0;
};

// Accumulates per-router table-size samples and reduces them per the
// time-then-routers averaging rule.
class TableSampler {
public:
  explicit TableSampler(std::size_t router_count)
      : pit_sum_(router_count, 0), art_sum_(router_count, 0),
        light_sum_(router_count, 0) {}

  template <typename SizesFn>
  SampleRow sample(double now, std::size_t router_count, SizesFn sizes_of) {
    SampleRow row;
    row.time_ms = now;
    for (std::size_t r = 0; r < router_count; ++r) {
      auto s = sizes_of(r);
      pit_sum_[r] += static_cast<double>(s.pit);
      art_sum_[r] += static_cast<double>(s.art);
      light_sum_[r] += static_cast<double>(s.light_pending);
      row.pit_mean += static_cast<double>(s.pit);
      row.art_mean += static_cast<double>(s.art);
      row.light_mean += static_cast<double>(s.light_pending);
    }
    row.pit_mean /= static_cast<double>(router_count);
    row.art_mean /= static_cast<double>(router_count);
    row.light_mean /= static_cast<double>(router_count);
    ++count_;
    return row;
  }

  std::uint64_t sample_count() const { return count_; }

  TableStats pit_stats() const { return reduce(pit_sum_); }
  TableStats art_stats() const { return reduce(art_sum_); }
  TableStats light_stats() const { return reduce(light_sum_); }

private:
  TableStats reduce(const std::vector<double>& sums) const {
    TableStats out;
    if (count_ == 0 || sums.empty())
      return out;
    std::vector<double> means(sums.size());
    for (std::size_t i = 0; i < sums.size(); ++i)
      means[i] = sums[i] / static_cast<double>(count_);
    double total = 0;
    for (double m : means)
      total += m;
    out.mean = total / static_cast<double>(means.size());
    double var = 0;
    for (double m : means)
      var += (m - out.mean) * (m - out.mean);
    out.stddev = std::sqrt(var / static_cast<double>(means.size()));
    return out;
  }

  std::vector<double> pit_sum_, art_sum_, light_sum_;
  std::uint64_t count_ = 0;
};

// Stable fixed-precision formatting so identical runs produce byte-identical
// CSV files.
std::string format_double(double v);

std::string metrics_csv_header();
std::string metrics_csv_row(const std::string& plane, const std::string& caching,
                            double rate, double alpha, std::size_t cache_capacity,
                            double locality, std::uint64_t seed, const RunMetrics& m);

std::string table_series_csv_header();
std::string table_series_csv_row(const SampleRow& row);

}  // namespace gram

#endif  // GRAM_METRICS_HPP
