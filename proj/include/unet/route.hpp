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

#ifndef UNET_ROUTE_HPP
#define UNET_ROUTE_HPP

#include <string>
#include <utility>
#include <vector>

#include "unet/network.hpp"

namespace unet {

/// A valid route is a connected sequence of distinct nodes; edges follow
/// from consecutive node pairs.
struct Route {
  std::vector<NodeId> nodes;
  double length = 0.0;  // meters

  std::vector<std::pair<NodeId, NodeId>> edge_pairs() const;
};

enum class RouteViolation {
  empty,
  edge_not_in_network,
  disconnected,     // consecutive edges do not share the junction node
  retrace,          // edge immediately followed by its reverse
  repeated_node,    // node sequence is not distinct
  origin_mismatch,  // first node differs from requested origin
  destination_mismatch,
};

struct RouteReport {
  std::vector<std::pair<RouteViolation, std::string>> violations;
  bool valid() const { return violations.empty(); }
};

std::string to_string(RouteViolation v);

/// Check an edge sequence against the network and the route rules for a
/// requested origin/destination. Violations are reported, not thrown.
RouteReport validate_route(const RouteNetwork& network,
                           const std::vector<std::pair<NodeId, NodeId>>& edges,
                           NodeId origin,
                           NodeId destination);

/// Minimal-length route between two nodes. Ties are broken by the
/// lexicographically smallest node-id sequence so results are reproducible.
/// Throws ErrorCode::no_path if the destination is unreachable and
/// ErrorCode::invalid_argument if origin == destination or either is unknown.
Route shortest_route(const RouteNetwork& network, NodeId origin, NodeId destination);

/// Up to k loop-free routes ordered by (length, node sequence); the first
/// equals shortest_route. Returns fewer than k when the graph runs out of
/// simple paths.
std::vector<Route> k_shortest_routes(const RouteNetwork& network, NodeId origin, NodeId destination,
                                     std::size_t k);

}  // namespace unet

#endif  // UNET_ROUTE_HPP
