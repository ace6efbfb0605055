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

#ifndef UNET_NETWORK_HPP
#define UNET_NETWORK_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "unet/geometry.hpp"

namespace unet {

using NodeId = int;

struct Node {
  NodeId id = 0;
  Vec3 position;  // meters
};

/// Directed edge between two distinct nodes of the network.
struct Edge {
  NodeId from = 0;
  NodeId to = 0;
  int snet = -1;      // index into RouteNetwork::snet_names()
  double length = 0;  // meters, from node positions
};

/// Immutable directed route network partitioned into sectors (sNets).
///
/// Construction validates:
///  - node ids unique, positions pairwise distinct
///  - edge endpoints exist, from != to, (from, to) unique
///  - every edge belongs to exactly one sNet
///  - every ordered pair of distinct terminals is connected by a directed path
class RouteNetwork {
 public:
  RouteNetwork(std::string name,
               std::vector<Node> nodes,
               std::vector<Edge> edges,
               std::vector<std::string> snet_names,
               std::vector<NodeId> terminals);

  const std::string& name() const { return name_; }
  const std::vector<Node>& nodes() const { return nodes_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::string>& snet_names() const { return snet_names_; }
  const std::vector<NodeId>& terminals() const { return terminals_; }

  bool has_node(NodeId id) const;
  const Node& node(NodeId id) const;
  bool has_edge(NodeId from, NodeId to) const;
  const Edge& edge(NodeId from, NodeId to) const;

  /// Outgoing edges of a node, ordered by destination id.
  const std::vector<const Edge*>& edges_out(NodeId id) const;
  /// Incoming edges of a node, ordered by origin id.
  const std::vector<const Edge*>& edges_in(NodeId id) const;

  /// Distinct neighbor ids (union of in- and out-adjacency), ascending.
  std::vector<NodeId> neighbors(NodeId id) const;

  bool is_terminal(NodeId id) const;

  /// Set of node ids reachable from `start` by directed edges (with `start`).
  std::vector<NodeId> reachable_from(NodeId start) const;

 private:
  std::string name_;
  std::vector<Node> nodes_;
  std::vector<Edge> edges_;
  std::vector<std::string> snet_names_;
  std::vector<NodeId> terminals_;
  std::map<NodeId, std::size_t> node_index_;
  std::map<std::pair<NodeId, NodeId>, std::size_t> edge_index_;
  std::map<NodeId, std::vector<const Edge*>> out_;
  std::map<NodeId, std::vector<const Edge*>> in_;
};

/// Load a network from a JSON document (schema "unet-network/1").
RouteNetwork load_network(const std::string& path);
RouteNetwork parse_network(const std::string& json_text);

/// Canonical JSON serialization of a network; load(save(n)) == n.
std::string serialize_network(const RouteNetwork& network);
void save_network(const RouteNetwork& network, const std::string& path);

/// 12-node, 26-edge sector on a 100 m grid at 50 m height. Intersection
/// variety: node 4 has five legs, node 5 is a cross, nodes 8 and 11 are
/// three-way forks, node 9 is a T, node 12 is a dead end.
RouteNetwork build_snet1();

/// 42-node network of four sector tiles (mirrored copies of the snet1
/// layout) sharing six boundary nodes, with 16 entry/exit terminals.
RouteNetwork build_example_unet();

/// Builtin networks by name ("snet1", "unet4").
RouteNetwork build_builtin(const std::string& name);

}  // namespace unet

#endif  // UNET_NETWORK_HPP
