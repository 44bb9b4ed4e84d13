#include "gram/topology.hpp"

#include <cmath>
#include <deque>
#include <limits>
#include <stdexcept>

namespace gram {

const Link& Topology::link_between(RouterId a, RouterId b) const {
  for (const auto& l : links) {
    if ((l.a == a && l.b == b) || (l.a == b && l.b == a))
      return l;
  }
  throw std::out_of_range("no link between " + std::to_string(a) + " and " +
                          std::to_string(b));
}

bool Topology::connected() const {
  if (nodes.empty())
    return false;
  auto d = hop_distances(0);
  for (auto v : d)
    if (v == std::numeric_limits<std::uint32_t>::max())
      return false;
  return true;
}

std::vector<std::uint32_t> Topology::hop_distances(RouterId src) const {
  std::vector<std::uint32_t> dist(nodes.size(), std::numeric_limits<std::uint32_t>::max());
  std::deque<RouterId> queue{src};
  dist[src] = 0;
  while (!queue.empty()) {
    RouterId u = queue.front();
    queue.pop_front();
    for (RouterId v : adjacency[u]) {
      if (dist[v] == std::numeric_limits<std::uint32_t>::max()) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

Topology generate_topology(const TopologyParams& params, Rng& rng) {
  if (params.node_count < 2)
    throw std::invalid_argument("topology needs at least 2 nodes");
  if (params.node_count > 100000)
    throw std::invalid_argument("node count exceeds memory budget");

  std::uniform_real_distribution<double> coord(0.0, params.area_m);
  constexpr int kMaxAttempts = 1000;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    Topology topo;
    topo.nodes.resize(params.node_count);
    topo.adjacency.assign(params.node_count, {});
    for (auto& p : topo.nodes) {
      p.x = coord(rng);
      p.y = coord(rng);
    }
    for (RouterId i = 0; i < params.node_count; ++i) {
      for (RouterId j = i + 1; j < params.node_count; ++j) {
        double dx = topo.nodes[i].x - topo.nodes[j].x;
        double dy = topo.nodes[i].y - topo.nodes[j].y;
        if (std::hypot(dx, dy) <= params.radius_m) {
          topo.links.push_back({i, j, params.delay_ms, params.rate_bps});
          topo.adjacency[i].insert(j);
          topo.adjacency[j].insert(i);
        }
      }
    }
    if (topo.connected())
      return topo;
  }
  throw std::runtime_error("could not generate a connected topology; "
                           "increase radius or node count");
}

Topology make_topology(std::size_t n, const std::vector<std::pair<RouterId, RouterId>>& edges,
                       double delay_ms, double rate_bps) {
  Topology topo;
  topo.nodes.resize(n);
  topo.adjacency.assign(n, {});
  for (auto [a, b] : edges) {
    topo.links.push_back({a, b, delay_ms, rate_bps});
    topo.adjacency[a].insert(b);
    topo.adjacency[b].insert(a);
  }
  return topo;
}

StaticRoutes compute_routes(const Topology& topo,
                            const std::map<NamePrefix, RouterId>& producers) {
  StaticRoutes routes;
  for (const auto& [prefix, origin] : producers) {
    auto dist = topo.hop_distances(origin);
    for (RouterId i = 0; i < topo.node_count(); ++i) {
      if (dist[i] == std::numeric_limits<std::uint32_t>::max())
        throw std::runtime_error("prefix " + prefix.to_string() +
                                 " unreachable from router " + std::to_string(i));
      if (i == origin)
        continue;
      auto& per_neighbor = routes.per_prefix[prefix][i];
      for (RouterId q : topo.adjacency[i])
        per_neighbor[q] = 1 + dist[q];
    }
  }
  return routes;
}

Fib build_fib(const StaticRoutes& routes, RouterId router) {
  Fib fib;
  for (const auto& [prefix, per_router] : routes.per_prefix) {
    auto it = per_router.find(router);
    if (it == per_router.end())
      continue;
    FibEntry entry;
    entry.prefix = prefix;
    entry.per_neighbor_distance = it->second;
    fib.set_entry(std::move(entry));
  }
  return fib;
}

}  // namespace gram
