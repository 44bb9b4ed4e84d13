#ifndef GRAM_TOPOLOGY_HPP
#define GRAM_TOPOLOGY_HPP

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "gram/aid.hpp"
#include "gram/fib.hpp"
#include "gram/name.hpp"
#include "gram/rng.hpp"

namespace gram {

struct Point {
  double x = 0;
  double y = 0;
};

struct Link {
  RouterId a = 0;
  RouterId b = 0;
  double delay_ms = 0;
  double rate_bps = 0;
};

// Random geometric graph: nodes placed uniformly in a square, linked when
// within the connection radius.
struct Topology {
  std::vector<Point> nodes;
  std::vector<Link> links;
  std::vector<std::set<RouterId>> adjacency;

  std::size_t node_count() const { return nodes.size(); }

  const Link& link_between(RouterId a, RouterId b) const;

  bool connected() const;

  // Hop distances from `src` to every node (BFS).
  std::vector<std::uint32_t> hop_distances(RouterId src) const;
};

struct TopologyParams {
  std::size_t node_count = 50;
  double area_m = 100;
  double radius_m = 20;
  double delay_ms = 15;
  double rate_bps = 1e9;
};

// Samples placements from `rng` until the resulting graph is connected.
// Throws std::runtime_error after too many failed attempts.
Topology generate_topology(const TopologyParams& params, Rng& rng);

// Builds a topology directly from an edge list (tests and hand-made scenarios).
Topology make_topology(std::size_t n, const std::vector<std::pair<RouterId, RouterId>>& edges,
                       double delay_ms = 15, double rate_bps = 1e9);

// prefix -> map from router to (neighbor -> hop distance). Loop-free by
// construction; tests may overwrite distances to exercise adversarial FIBs.
struct StaticRoutes {
  std::map<NamePrefix, std::map<RouterId, std::map<RouterId, Distance>>> per_prefix;
};

// Hop-count shortest-path distances toward every producer prefix via every
// neighbor: D(i, prefix, q) = 1 + dist(q, producer). The producer's own
// router gets no FIB entry; it holds the content.
StaticRoutes compute_routes(const Topology& topo,
                            const std::map<NamePrefix, RouterId>& producers);

// Per-router FIB assembled from the routes.
Fib build_fib(const StaticRoutes& routes, RouterId router);

}  // namespace gram

#endif  // GRAM_TOPOLOGY_HPP
