/*
 * Copyright (C) 2026 uNet Scheduling Contributors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 *
*/

#include "unet/route.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <sstream>

#include "unet/error.hpp"

namespace unet {

namespace {

// Lengths are compared at micrometer resolution so that equal-length paths
// built from the same edge multiset compare equal regardless of summation
// order, making the lexicographic tie-break well defined.
long long quantize(double length_m) { return std::llround(length_m * 1e6); }

struct PathKey {
  long long qlen;
  std::vector<NodeId> nodes;

  bool operator<(const PathKey& o) const {
    if (qlen != o.qlen) return qlen < o.qlen;
    return nodes < o.nodes;
  }
};

std::optional<Route> dijkstra(const RouteNetwork& network, NodeId origin, NodeId destination,
                              const std::set<NodeId>& banned_nodes,
                              const std::set<std::pair<NodeId, NodeId>>& banned_edges) {
  struct Entry {
    PathKey key;
    double length;
    bool operator>(const Entry& o) const { return o.key < key; }
  };
  std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> queue;
  std::set<NodeId> settled;

  queue.push({{0, {origin}}, 0.0});
  while (!queue.empty()) {
    Entry cur = queue.top();
    queue.pop();
    const NodeId at = cur.key.nodes.back();
    if (!settled.insert(at).second) continue;
    if (at == destination) return Route{std::move(cur.key.nodes), cur.length};
    for (const Edge* e : network.edges_out(at)) {
      if (settled.count(e->to) || banned_nodes.count(e->to)) continue;
      if (banned_edges.count({e->from, e->to})) continue;
      Entry next{{0, cur.key.nodes}, cur.length + e->length};
      next.key.nodes.push_back(e->to);
      next.key.qlen = quantize(next.length);
      queue.push(std::move(next));
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<std::pair<NodeId, NodeId>> Route::edge_pairs() const {
  std::vector<std::pair<NodeId, NodeId>> pairs;
  for (std::size_t i = 1; i < nodes.size(); ++i) pairs.emplace_back(nodes[i - 1], nodes[i]);
  return pairs;
}

std::string to_string(RouteViolation v) {
  switch (v) {
    case RouteViolation::empty: return "empty route";
    case RouteViolation::edge_not_in_network: return "edge not in network";
    case RouteViolation::disconnected: return "consecutive edges not connected";
    case RouteViolation::retrace: return "edge immediately retraced";
    case RouteViolation::repeated_node: return "repeated node";
    case RouteViolation::origin_mismatch: return "route does not start at origin";
    case RouteViolation::destination_mismatch: return "route does not end at destination";
  }
  return "unknown violation";
}

RouteReport validate_route(const RouteNetwork& network,
                           const std::vector<std::pair<NodeId, NodeId>>& edges,
                           NodeId origin,
                           NodeId destination) {
  RouteReport report;
  auto add = [&report](RouteViolation v, const std::string& detail) {
    report.violations.emplace_back(v, to_string(v) + (detail.empty() ? "" : ": " + detail));
  };

  if (edges.empty()) {
    add(RouteViolation::empty, "");
    return report;
  }

  for (const auto& [from, to] : edges) {
    if (!network.has_edge(from, to))
      add(RouteViolation::edge_not_in_network, "{" + std::to_string(from) + "," + std::to_string(to) + "}");
  }
  for (std::size_t j = 0; j + 1 < edges.size(); ++j) {
    if (edges[j].second != edges[j + 1].first)
      add(RouteViolation::disconnected,
          "edge " + std::to_string(j + 1) + " ends at " + std::to_string(edges[j].second) +
              ", edge " + std::to_string(j + 2) + " starts at " + std::to_string(edges[j + 1].first));
    if (edges[j].first == edges[j + 1].second)
      add(RouteViolation::retrace, "{" + std::to_string(edges[j].first) + "," +
                                       std::to_string(edges[j].second) + "} then back");
  }

  std::vector<NodeId> seq{edges.front().first};
  for (const auto& e : edges) seq.push_back(e.second);
  std::set<NodeId> seen;
  for (NodeId n : seq) {
    if (!seen.insert(n).second) add(RouteViolation::repeated_node, std::to_string(n));
  }

  if (seq.front() != origin)
    add(RouteViolation::origin_mismatch,
        "starts at " + std::to_string(seq.front()) + ", expected " + std::to_string(origin));
  if (seq.back() != destination)
    add(RouteViolation::destination_mismatch,
        "ends at " + std::to_string(seq.back()) + ", expected " + std::to_string(destination));
  return report;
}

Route shortest_route(const RouteNetwork& network, NodeId origin, NodeId destination) {
  if (origin == destination)
    throw Error(ErrorCode::invalid_argument, "origin and destination must differ");
  network.node(origin);
  network.node(destination);
  auto route = dijkstra(network, origin, destination, {}, {});
  if (!route)
    throw Error(ErrorCode::no_path,
                "no path from " + std::to_string(origin) + " to " + std::to_string(destination));
  return *route;
}

std::vector<Route> k_shortest_routes(const RouteNetwork& network, NodeId origin, NodeId destination,
                                     std::size_t k) {
  if (k < 1) throw Error(ErrorCode::invalid_argument, "k must be at least 1");
  std::vector<Route> accepted{shortest_route(network, origin, destination)};
  std::map<PathKey, double> candidates;

  while (accepted.size() < k) {
    const Route& prev = accepted.back();
    for (std::size_t spur = 0; spur + 1 < prev.nodes.size(); ++spur) {
      const std::vector<NodeId> root(prev.nodes.begin(), prev.nodes.begin() + spur + 1);

      std::set<std::pair<NodeId, NodeId>> banned_edges;
      for (const Route& r : accepted) {
        if (r.nodes.size() > spur + 1 &&
            std::equal(root.begin(), root.end(), r.nodes.begin()))
          banned_edges.insert({r.nodes[spur], r.nodes[spur + 1]});
      }
      std::set<NodeId> banned_nodes(root.begin(), root.end() - 1);

      auto spur_route = dijkstra(network, root.back(), destination, banned_nodes, banned_edges);
      if (!spur_route) continue;

      Route total;
      total.nodes = root;
      total.nodes.insert(total.nodes.end(), spur_route->nodes.begin() + 1, spur_route->nodes.end());
      total.length = spur_route->length;
      for (std::size_t i = 1; i < root.size(); ++i)
        total.length += network.edge(root[i - 1], root[i]).length;
      candidates.emplace(PathKey{quantize(total.length), total.nodes}, total.length);
    }
    // Drop candidates already accepted, then take the best remaining one.
    for (const Route& r : accepted) candidates.erase(PathKey{quantize(r.length), r.nodes});
    if (candidates.empty()) break;
    auto best = candidates.begin();
    accepted.push_back(Route{best->first.nodes, best->second});
    candidates.erase(best);
  }
  return accepted;
}

}  // namespace unet
