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

// Test-only reference implementations. These deliberately avoid the search
// and interval machinery of the library: paths come from exhaustive DFS
// enumeration and entry times from a fine grid scan, so the two sides can
// disagree when the library is wrong.

#ifndef UNET_TESTS_ORACLES_HPP
#define UNET_TESTS_ORACLES_HPP

#include <algorithm>
#include <cmath>
#include <optional>
#include <set>
#include <vector>

#include "unet/network.hpp"
#include "unet/route.hpp"
#include "unet/schedule.hpp"

namespace unet::test {

namespace detail {

inline void dfs_paths(const RouteNetwork& network, NodeId at, NodeId destination,
                      std::vector<NodeId>& stack, std::set<NodeId>& visited, double length,
                      std::vector<Route>& out) {
  if (at == destination) {
    // A simple path cannot pass through the destination and return later,
    // so recording here loses nothing.
    out.push_back({stack, length});
    return;
  }
  for (const Edge* e : network.edges_out(at)) {
    if (visited.count(e->to)) continue;
    visited.insert(e->to);
    stack.push_back(e->to);
    dfs_paths(network, e->to, destination, stack, visited, length + e->length, out);
    stack.pop_back();
    visited.erase(e->to);
  }
}

}  // namespace detail

/// Every simple directed path from origin to destination, by DFS.
inline std::vector<Route> all_simple_paths(const RouteNetwork& network, NodeId origin,
                                           NodeId destination) {
  std::vector<Route> paths;
  std::vector<NodeId> stack{origin};
  std::set<NodeId> visited{origin};
  detail::dfs_paths(network, origin, destination, stack, visited, 0.0, paths);
  return paths;
}

/// Route ordering used to pick the reference winner: length at micrometer
/// resolution, then the lexicographically smallest node sequence.
inline bool route_order(const Route& a, const Route& b) {
  const long long qa = std::llround(a.length * 1e6);
  const long long qb = std::llround(b.length * 1e6);
  if (qa != qb) return qa < qb;
  return a.nodes < b.nodes;
}

inline std::optional<Route> brute_force_shortest(const RouteNetwork& network, NodeId origin,
                                                 NodeId destination) {
  std::vector<Route> paths = all_simple_paths(network, origin, destination);
  if (paths.empty()) return std::nullopt;
  return *std::min_element(paths.begin(), paths.end(), route_order);
}

/// True iff entering at `sta` keeps every checkpoint arrival at least t_min
/// away from all existing reservations (equality allowed).
inline bool conflict_free_at(const std::vector<ArrivalOffset>& offsets, const ScheduleBook& book,
                             double sta, double t_min) {
  for (const ArrivalOffset& a : offsets) {
    auto it = book.timelines().find(a.checkpoint);
    if (it == book.timelines().end()) continue;
    for (const auto& [t, k] : it->second) {
      if (std::abs(sta + a.offset - t) < t_min - 1e-9) return false;
    }
  }
  return true;
}

/// Grid-scan reference for the earliest feasible entry time: walks a fixed
/// grid from eta until a conflict-free point appears.
inline double grid_scan_sta(const std::vector<ArrivalOffset>& offsets, const ScheduleBook& book,
                            double eta, double t_min, double step) {
  for (long long i = 0;; ++i) {
    const double sta = eta + static_cast<double>(i) * step;
    if (conflict_free_at(offsets, book, sta, t_min)) return sta;
  }
}

}  // namespace unet::test

#endif  // UNET_TESTS_ORACLES_HPP
