#include "gram/metrics.hpp"

#include <cstdio>
#include <sstream>

namespace gram {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

std::string metrics_csv_header() {
  return "plane,caching,rate_per_router,zipf_alpha,cache_capacity,locality,seed,"
         "interest_receptions,aggregated_interests,aggregation_pct,"
         "delivered,failed,delay_samples,mean_delay_ms,"
         "pit_mean,pit_std,art_mean,art_std,light_mean,light_std,"
         "drops_no_reverse_entry,aid_exhaustion,pit_expirations";
}

std::string metrics_csv_row(const std::string& plane, const std::string& caching,
                            double rate, double alpha, std::size_t cache_capacity,
                            double locality, std::uint64_t seed, const RunMetrics& m) {
  std::ostringstream out;
  out << plane << ',' << caching << ',' << format_double(rate) << ','
      << format_double(alpha) << ',' << cache_capacity << ','
      << format_double(locality) << ',' << seed << ','
      << m.interest_receptions << ',' << m.aggregated_interests << ','
      << (m.aggregation_pct ? format_double(*m.aggregation_pct) : std::string("")) << ','
      << m.delivered << ',' << m.failed << ',' << m.delay_samples << ','
      << format_double(m.mean_delay_ms) << ','
      << format_double(m.pit.mean) << ',' << format_double(m.pit.stddev) << ','
      << format_double(m.art.mean) << ',' << format_double(m.art.stddev) << ','
      << format_double(m.light.mean) << ',' << format_double(m.light.stddev) << ','
      << m.drops_no_reverse_entry << ',' << m.aid_exhaustion << ','
      << m.pit_expirations;
  return out.str();
}

std::string table_series_csv_header() {
  return "time_ms,pit_mean,art_mean,light_mean";
}

std::string table_series_csv_row(const SampleRow& row) {
  std::ostringstream out;
  out << format_double(row.time_ms) << ',' << format_double(row.pit_mean) << ','
      << format_double(row.art_mean) << ',' << format_double(row.light_mean);
  return out.str();
}

}  // namespace gram
