// Experiment runner for the CCN-GRAM / NDN simulator.
//
// Subcommands:
//   run         execute one scenario (optionally sweeping axes) and write CSVs
//   sweep       alias of run with --sweep required
//   validate    parse and validate a scenario file
//   trace-dump  run a scenario and emit the event trace as JSON lines

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gram/experiment.hpp"
#include "gram/metrics.hpp"
#include "gram/scenario.hpp"
#include "gram/snapshot.hpp"

namespace fs = std::filesystem;
using namespace gram;

namespace {

struct SweepAxes {
  std::vector<double> rates;
  std::vector<std::uint64_t> seeds;
  std::vector<double> alphas;
  std::vector<std::size_t> caches;
  std::vector<double> localities;
  std::vector<Plane> planes;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

SweepAxes parse_sweep(const std::vector<std::string>& specs, const Scenario& base) {
  SweepAxes axes;
  axes.rates = {base.rate_per_router};
  axes.seeds = {base.seed};
  axes.alphas = {base.zipf_alpha};
  axes.caches = {base.cache_capacity};
  axes.localities = {base.temporal_locality};
  axes.planes = {base.plane};
  for (const auto& spec : specs) {
    auto eq = spec.find('=');
    if (eq == std::string::npos)
      throw CLI::ValidationError("--sweep expects key=v1,v2,... got " + spec);
    std::string key = spec.substr(0, eq);
    auto values = split(spec.substr(eq + 1), ',');
    if (key == "rate") {
      axes.rates.clear();
      for (auto& v : values) axes.rates.push_back(std::stod(v));
    } else if (key == "seed") {
      axes.seeds.clear();
      for (auto& v : values) axes.seeds.push_back(std::stoull(v));
    } else if (key == "alpha") {
      axes.alphas.clear();
      for (auto& v : values) axes.alphas.push_back(std::stod(v));
    } else if (key == "cache") {
      axes.caches.clear();
      for (auto& v : values) axes.caches.push_back(std::stoul(v));
    } else if (key == "locality") {
      axes.localities.clear();
      for (auto& v : values) axes.localities.push_back(std::stod(v));
    } else if (key == "plane") {
      axes.planes.clear();
      for (auto& v : values) {
        if (v == "both") {
          axes.planes = {Plane::Gram, Plane::Ndn};
        } else {
          axes.planes.push_back(plane_from_string(v));
        }
      }
    } else {
      throw CLI::ValidationError("unknown sweep axis: " + key);
    }
  }
  return axes;
}

fs::path resolve_output_dir(const std::string& flag_value) {
  if (!flag_value.empty())
    return flag_value;
  if (const char* env = std::getenv("GRAMSIM_OUTPUT_DIR"))
    return env;
  return ".";
}

std::string run_tag(const Scenario& s) {
  std::ostringstream tag;
  tag << to_string(s.plane) << "_r" << s.rate_per_router << "_a" << s.zipf_alpha
      << "_c" << s.cache_capacity << "_l" << s.temporal_locality << "_s" << s.seed;
  return tag.str();
}

int do_run(const std::string& scenario_path, const std::vector<std::string>& sweep,
           const std::string& out_flag, std::optional<std::uint64_t> seed_override,
           bool with_series) {
  Scenario base = load_scenario(scenario_path);
  if (seed_override)
    base.seed = *seed_override;
  else
    std::cout << "# seed not given; using scenario default " << base.seed << "\n";
  std::cout << "# scenario=" << scenario_path << " plane=" << to_string(base.plane)
            << " caching=" << to_string(base.caching)
            << " duration_ms=" << base.duration_ms << " seed=" << base.seed << "\n";

  SweepAxes axes = parse_sweep(sweep, base);
  fs::path out_dir = resolve_output_dir(out_flag);
  fs::create_directories(out_dir);

  std::ofstream metrics_file(out_dir / "metrics.csv");
  metrics_file << metrics_csv_header() << "\n";

  for (Plane plane : axes.planes)
    for (double rate : axes.rates)
      for (double alpha : axes.alphas)
        for (std::size_t cache : axes.caches)
          for (double locality : axes.localities)
            for (std::uint64_t seed : axes.seeds) {
              Scenario s = base;
              s.plane = plane;
              s.rate_per_router = rate;
              s.zipf_alpha = alpha;
              s.cache_capacity = cache;
              s.temporal_locality = locality;
              s.seed = seed;
              std::cout << "running " << run_tag(s) << "..." << std::flush;
              RunOutput out = run_scenario(s);
              std::cout << " done ("
                        << out.metrics.delivered << " delivered, mean delay "
                        << format_double(out.metrics.mean_delay_ms) << " ms)\n";
              metrics_file << metrics_csv_row(to_string(plane), to_string(s.caching),
                                              rate, alpha, cache, locality, seed,
                                              out.metrics)
                           << "\n";
              if (with_series) {
                std::ofstream series(out_dir / ("series_" + run_tag(s) + ".csv"));
                series << table_series_csv_header() << "\n";
                for (const auto& row : out.table_series)
                  series << table_series_csv_row(row) << "\n";
              }
            }
  std::cout << "wrote " << (out_dir / "metrics.csv").string() << "\n";
  return 0;
}

int do_trace_dump(const std::string& scenario_path, const std::string& out_flag,
                  std::optional<std::uint64_t> seed_override) {
  Scenario s = load_scenario(scenario_path);
  if (seed_override)
    s.seed = *seed_override;
  std::ostream* out = &std::cout;
  std::ofstream file;
  if (!out_flag.empty()) {
    file.open(out_flag);
    out = &file;
  }
  Experiment experiment(s);
  experiment.engine().set_trace_sink([out](const TraceRecord& rec) {
    *out << trace_record_line(rec) << "\n";
  });
  experiment.run();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"CCN-GRAM vs NDN forwarding-plane simulator"};
  app.require_subcommand(1);

  std::string scenario_path;
  std::string out_dir;
  std::vector<std::string> sweep_specs;
  std::optional<std::uint64_t> seed_override;
  bool with_series = true;

  auto* run = app.add_subcommand("run", "execute a scenario");
  run->add_option("--scenario", scenario_path, "scenario JSON file")->required();
  run->add_option("--sweep", sweep_specs, "axis=v1,v2 (rate, seed, alpha, cache, locality, plane)");
  run->add_option("--out", out_dir, "output directory (default $GRAMSIM_OUTPUT_DIR or .)");
  run->add_option("--seed", seed_override, "override scenario seed");
  run->add_flag("--series,!--no-series", with_series, "write per-run table-size series");

  auto* sweep = app.add_subcommand("sweep", "execute a scenario across sweep axes");
  sweep->add_option("--scenario", scenario_path, "scenario JSON file")->required();
  sweep->add_option("--sweep", sweep_specs, "axis=v1,v2")->required();
  sweep->add_option("--out", out_dir, "output directory");
  sweep->add_option("--seed", seed_override, "override scenario seed");

  auto* validate_cmd = app.add_subcommand("validate", "check a scenario file");
  validate_cmd->add_option("--scenario", scenario_path, "scenario JSON file")->required();

  std::string trace_out;
  auto* trace = app.add_subcommand("trace-dump", "emit the event trace as JSON lines");
  trace->add_option("--scenario", scenario_path, "scenario JSON file")->required();
  trace->add_option("--out", trace_out, "trace output file (default stdout)");
  trace->add_option("--seed", seed_override, "override scenario seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(run))
      return do_run(scenario_path, sweep_specs, out_dir, seed_override, with_series);
    if (app.got_subcommand(sweep))
      return do_run(scenario_path, sweep_specs, out_dir, seed_override, false);
    if (app.got_subcommand(validate_cmd)) {
      load_scenario(scenario_path);
      std::cout << scenario_path << ": OK\n";
      return 0;
    }
    if (app.got_subcommand(trace))
      return do_trace_dump(scenario_path, trace_out, seed_override);
  } catch (const ScenarioError& e) {
    std::cerr << "scenario error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
