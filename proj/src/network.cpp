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

#include "unet/network.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "unet/error.hpp"

namespace unet {

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kNetworkSchema = "unet-network/1";

void sort_adjacency(std::map<NodeId, std::vector<const Edge*>>& adj, bool by_to) {
  for (auto& [id, list] : adj) {
    std::sort(list.begin(), list.end(), [by_to](const Edge* a, const Edge* b) {
      return by_to ? a->to < b->to : a->from < b->from;
    });
  }
}

}  // namespace

RouteNetwork::RouteNetwork(std::string name,
                           std::vector<Node> nodes,
                           std::vector<Edge> edges,
                           std::vector<std::string> snet_names,
                           std::vector<NodeId> terminals)
    : name_(std::move(name)),
      nodes_(std::move(nodes)),
      edges_(std::move(edges)),
      snet_names_(std::move(snet_names)),
      terminals_(std::move(terminals)) {
  if (nodes_.empty()) throw Error(ErrorCode::invalid_network, "network has no nodes");

  std::sort(nodes_.begin(), nodes_.end(), [](const Node& a, const Node& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (!node_index_.emplace(nodes_[i].id, i).second)
      throw Error(ErrorCode::invalid_network, "duplicate node id " + std::to_string(nodes_[i].id));
  }
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    for (std::size_t j = i + 1; j < nodes_.size(); ++j) {
      if (nodes_[i].position == nodes_[j].position)
        throw Error(ErrorCode::invalid_network,
                    "nodes " + std::to_string(nodes_[i].id) + " and " + std::to_string(nodes_[j].id) +
                        " share a spatial position");
    }
  }

  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return std::make_pair(a.from, a.to) < std::make_pair(b.from, b.to);
  });
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    Edge& e = edges_[i];
    if (e.from == e.to)
      throw Error(ErrorCode::invalid_network, "edge {" + std::to_string(e.from) + "," + std::to_string(e.to) +
                                                  "} connects a node to itself");
    if (!node_index_.count(e.from) || !node_index_.count(e.to))
      throw Error(ErrorCode::invalid_network, "edge {" + std::to_string(e.from) + "," + std::to_string(e.to) +
                                                  "} references a missing node (dangling endpoint)");
    if (e.snet < 0 || e.snet >= static_cast<int>(snet_names_.size()))
      throw Error(ErrorCode::invalid_network, "edge {" + std::to_string(e.from) + "," + std::to_string(e.to) +
                                                  "} is not assigned to exactly one sNet");
    if (!edge_index_.emplace(std::make_pair(e.from, e.to), i).second)
      throw Error(ErrorCode::invalid_network,
                  "duplicate edge {" + std::to_string(e.from) + "," + std::to_string(e.to) + "}");
    e.length = distance(node(e.from).position, node(e.to).position);
  }
  {
    std::set<std::string> seen;
    for (const auto& s : snet_names_) {
      if (s.empty()) throw Error(ErrorCode::invalid_network, "empty sNet name");
      if (!seen.insert(s).second) throw Error(ErrorCode::invalid_network, "duplicate sNet name " + s);
    }
  }

  for (const Edge& e : edges_) {
    out_[e.from].push_back(&e);
    in_[e.to].push_back(&e);
  }
  sort_adjacency(out_, /*by_to=*/true);
  sort_adjacency(in_, /*by_to=*/false);

  std::sort(terminals_.begin(), terminals_.end());
  terminals_.erase(std::unique(terminals_.begin(), terminals_.end()), terminals_.end());
  for (NodeId t : terminals_) {
    if (!node_index_.count(t))
      throw Error(ErrorCode::invalid_network, "terminal " + std::to_string(t) + " is not a network node");
  }
  for (NodeId a : terminals_) {
    const std::vector<NodeId> reach = reachable_from(a);
    for (NodeId b : terminals_) {
      if (a == b) continue;
      if (!std::binary_search(reach.begin(), reach.end(), b))
        throw Error(ErrorCode::invalid_network, "terminal pair (" + std::to_string(a) + ", " + std::to_string(b) +
                                                    ") is not connected by any directed path");
    }
  }
}

bool RouteNetwork::has_node(NodeId id) const { return node_index_.count(id) > 0; }

const Node& RouteNetwork::node(NodeId id) const {
  auto it = node_index_.find(id);
  if (it == node_index_.end())
    throw Error(ErrorCode::invalid_argument, "unknown node id " + std::to_string(id));
  return nodes_[it->second];
}

bool RouteNetwork::has_edge(NodeId from, NodeId to) const {
  return edge_index_.count(std::make_pair(from, to)) > 0;
}

const Edge& RouteNetwork::edge(NodeId from, NodeId to) const {
  auto it = edge_index_.find(std::make_pair(from, to));
  if (it == edge_index_.end())
    throw Error(ErrorCode::invalid_argument,
                "unknown edge {" + std::to_string(from) + "," + std::to_string(to) + "}");
  return edges_[it->second];
}

const std::vector<const Edge*>& RouteNetwork::edges_out(NodeId id) const {
  static const std::vector<const Edge*> empty;
  auto it = out_.find(id);
  return it == out_.end() ? empty : it->second;
}

const std::vector<const Edge*>& RouteNetwork::edges_in(NodeId id) const {
  static const std::vector<const Edge*> empty;
  auto it = in_.find(id);
  return it == in_.end() ? empty : it->second;
}

std::vector<NodeId> RouteNetwork::neighbors(NodeId id) const {
  std::set<NodeId> s;
  for (const Edge* e : edges_out(id)) s.insert(e->to);
  for (const Edge* e : edges_in(id)) s.insert(e->from);
  return {s.begin(), s.end()};
}

bool RouteNetwork::is_terminal(NodeId id) const {
  return std::binary_search(terminals_.begin(), terminals_.end(), id);
}

std::vector<NodeId> RouteNetwork::reachable_from(NodeId start) const {
  std::set<NodeId> seen{start};
  std::deque<NodeId> queue{start};
  while (!queue.empty()) {
    const NodeId cur = queue.front();
    queue.pop_front();
    for (const Edge* e : edges_out(cur)) {
      if (seen.insert(e->to).second) queue.push_back(e->to);
    }
  }
  return {seen.begin(), seen.end()};
}

namespace {

RouteNetwork network_from_json(const json& doc, const std::string& origin) {
  if (!doc.is_object()) throw Error(ErrorCode::schema, origin + ": top-level value must be an object");
  if (!doc.contains("schema") || !doc["schema"].is_string())
    throw Error(ErrorCode::schema, origin + ": missing \"schema\" field");
  if (doc["schema"].get<std::string>() != kNetworkSchema)
    throw Error(ErrorCode::schema, origin + ": unsupported schema version \"" +
                                       doc["schema"].get<std::string>() + "\" (expected " + kNetworkSchema + ")");

  const std::string name = doc.value("name", std::string("network"));

  if (!doc.contains("nodes") || !doc["nodes"].is_array())
    throw Error(ErrorCode::schema, origin + ": missing \"nodes\" array");
  if (!doc.contains("edges") || !doc["edges"].is_array())
    throw Error(ErrorCode::schema, origin + ": missing \"edges\" array");
  if (!doc.contains("terminals") || !doc["terminals"].is_array())
    throw Error(ErrorCode::schema, origin + ": missing \"terminals\" array");

  std::vector<Node> nodes;
  for (const auto& jn : doc["nodes"]) {
    if (!jn.is_object() || !jn.contains("id") || !jn.contains("x") || !jn.contains("y") || !jn.contains("z"))
      throw Error(ErrorCode::schema, origin + ": node entries need id, x, y, z");
    nodes.push_back({jn["id"].get<NodeId>(),
                     {jn["x"].get<double>(), jn["y"].get<double>(), jn["z"].get<double>()}});
  }

  std::vector<std::string> snet_names;
  std::map<std::string, int> snet_ids;
  std::vector<Edge> edges;
  for (const auto& je : doc["edges"]) {
    if (!je.is_object() || !je.contains("from") || !je.contains("to") || !je.contains("snet") ||
        !je["snet"].is_string())
      throw Error(ErrorCode::schema, origin + ": edge entries need from, to, snet");
    const std::string snet = je["snet"].get<std::string>();
    auto [it, inserted] = snet_ids.emplace(snet, static_cast<int>(snet_names.size()));
    if (inserted) snet_names.push_back(snet);
    edges.push_back({je["from"].get<NodeId>(), je["to"].get<NodeId>(), it->second, 0.0});
  }

  std::vector<NodeId> terminals;
  for (const auto& jt : doc["terminals"]) terminals.push_back(jt.get<NodeId>());

  return RouteNetwork(name, std::move(nodes), std::move(edges), std::move(snet_names), std::move(terminals));
}

}  // namespace

RouteNetwork parse_network(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& ex) {
    throw Error(ErrorCode::schema, std::string("network document is not valid JSON: ") + ex.what());
  }
  return network_from_json(doc, "network");
}

RouteNetwork load_network(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::io, "cannot open network file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  json doc;
  try {
    doc = json::parse(buf.str());
  } catch (const json::exception& ex) {
    throw Error(ErrorCode::schema, path + ": not valid JSON: " + ex.what());
  }
  return network_from_json(doc, path);
}

std::string serialize_network(const RouteNetwork& network) {
  json doc;
  doc["schema"] = kNetworkSchema;
  doc["name"] = network.name();
  doc["nodes"] = json::array();
  for (const Node& n : network.nodes()) {
    doc["nodes"].push_back({{"id", n.id}, {"x", n.position.x}, {"y", n.position.y}, {"z", n.position.z}});
  }
  doc["edges"] = json::array();
  for (const Edge& e : network.edges()) {
    doc["edges"].push_back({{"from", e.from}, {"to", e.to}, {"snet", network.snet_names()[e.snet]}});
  }
  doc["terminals"] = network.terminals();
  return doc.dump(2) + "\n";
}

void save_network(const RouteNetwork& network, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::io, "cannot write network file " + path);
  out << serialize_network(network);
  if (!out) throw Error(ErrorCode::io, "failed writing network file " + path);
}

namespace {

// snet1 grid coordinates in units of 100 m; every node at 50 m height.
const std::vector<std::pair<NodeId, std::pair<int, int>>> kSnet1Grid = {
    {1, {0, 2}}, {2, {2, 3}}, {3, {0, 1}}, {4, {1, 2}},  {5, {2, 2}},  {6, {3, 2}},
    {7, {1, 3}}, {8, {1, 1}}, {9, {2, 1}}, {10, {3, 1}}, {11, {2, 0}}, {12, {2, -1}},
};

const std::vector<std::pair<NodeId, NodeId>> kSnet1Edges = {
    {1, 4},  {2, 5},  {3, 4},  {4, 1},  {4, 3},  {4, 5},  {4, 7},   {4, 8},   {5, 2},
    {5, 4},  {5, 6},  {5, 9},  {6, 5},  {7, 4},  {8, 4},  {8, 9},   {8, 11},  {9, 5},
    {9, 8},  {9, 10}, {10, 9}, {10, 11}, {11, 8}, {11, 10}, {11, 12}, {12, 11},
};

constexpr double kGridSpacing = 100.0;  // meters
constexpr double kGridHeight = 50.0;    // meters

Vec3 grid_pos(int gx, int gy) { return {gx * kGridSpacing, gy * kGridSpacing, kGridHeight}; }

}  // namespace

RouteNetwork build_snet1() {
  std::vector<Node> nodes;
  for (const auto& [id, g] : kSnet1Grid) nodes.push_back({id, grid_pos(g.first, g.second)});
  std::vector<Edge> edges;
  for (const auto& [from, to] : kSnet1Edges) edges.push_back({from, to, 0, 0.0});
  std::vector<NodeId> terminals;
  for (const auto& [id, g] : kSnet1Grid) terminals.push_back(id);
  return RouteNetwork("snet1", std::move(nodes), std::move(edges), {"S1"}, std::move(terminals));
}

RouteNetwork build_example_unet() {
  // Four tiles of the snet1 layout: A as-is, B mirrored about x = 300 m,
  // C mirrored about y = -100 m, D mirrored about both. Mirroring makes the
  // tile boundaries line up, so the tiles share six boundary nodes:
  // A/B share {6, 10}, A/C share {12}, B/D share {22}, C/D share {27, 31}.
  struct Tile {
    const char* snet;
    bool flip_x;
    bool flip_y;
    std::map<NodeId, NodeId> id_map;  // snet1-local id -> global id
  };
  const std::vector<Tile> tiles = {
      {"S1", false, false,
       {{1, 1}, {2, 2}, {3, 3}, {4, 4}, {5, 5}, {6, 6}, {7, 7}, {8, 8}, {9, 9}, {10, 10}, {11, 11}, {12, 12}}},
      {"S2", true, false,
       {{1, 13}, {2, 14}, {3, 17}, {4, 15}, {5, 16}, {6, 6}, {7, 20}, {8, 18}, {9, 19}, {10, 10}, {11, 21}, {12, 22}}},
      {"S3", false, true,
       {{1, 23}, {2, 24}, {3, 28}, {4, 25}, {5, 26}, {6, 27}, {7, 33}, {8, 29}, {9, 30}, {10, 31}, {11, 32}, {12, 12}}},
      {"S4", true, true,
       {{1, 34}, {2, 37}, {3, 40}, {4, 35}, {5, 36}, {6, 27}, {7, 42}, {8, 38}, {9, 39}, {10, 31}, {11, 41}, {12, 22}}},
  };
  // Local terminals are the snet1 dead-end nodes that stay on the outer
  // boundary after tiling (6, 10 and 12 become interior seam nodes).
  const std::vector<NodeId> local_terminals = {1, 2, 3, 7};

  std::map<NodeId, Node> nodes;
  std::vector<Edge> edges;
  std::vector<std::string> snet_names;
  std::vector<NodeId> terminals;

  for (std::size_t t = 0; t < tiles.size(); ++t) {
    const Tile& tile = tiles[t];
    snet_names.push_back(tile.snet);
    for (const auto& [local, g] : kSnet1Grid) {
      const int gx = tile.flip_x ? 6 - g.first : g.first;
      const int gy = tile.flip_y ? -2 - g.second : g.second;
      const NodeId global = tile.id_map.at(local);
      nodes.insert({global, Node{global, grid_pos(gx, gy)}});
    }
    for (const auto& [from, to] : kSnet1Edges) {
      edges.push_back({tile.id_map.at(from), tile.id_map.at(to), static_cast<int>(t), 0.0});
    }
    for (NodeId local : local_terminals) terminals.push_back(tile.id_map.at(local));
  }

  std::vector<Node> node_list;
  for (const auto& [id, n] : nodes) node_list.push_back(n);
  return RouteNetwork("unet4", std::move(node_list), std::move(edges), std::move(snet_names),
                      std::move(terminals));
}

RouteNetwork build_builtin(const std::string& name) {
  if (name == "snet1") return build_snet1();
  if (name == "unet4") return build_example_unet();
  throw Error(ErrorCode::invalid_argument, "unknown builtin network \"" + name + "\" (have: snet1, unet4)");
}

}  // namespace unet
