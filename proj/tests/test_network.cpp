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

#include <algorithm>
#include <map>
#include <set>

#include <doctest.h>

#include "unet/error.hpp"
#include "unet/network.hpp"

using namespace unet;

namespace {

std::string source_path(const char* rel) { return std::string(UNET_SOURCE_DIR) + "/" + rel; }

RouteNetwork make(const std::string& body) {
  return parse_network(std::string(R"({"schema": "unet-network/1",)") + body + "}");
}

}  // namespace

TEST_CASE("snet1 matches the published sector layout") {
  const RouteNetwork net = build_snet1();
  CHECK(net.nodes().size() == 12);
  CHECK(net.edges().size() == 26);
  CHECK(net.snet_names().size() == 1);

  CHECK(net.has_edge(8, 9));
  CHECK(net.has_edge(9, 8));

  std::set<NodeId> into_9;
  for (const Edge* e : net.edges_in(9)) into_9.insert(e->from);
  CHECK(into_9 == std::set<NodeId>{5, 8, 10});

  CHECK(net.edges_in(12).size() == 1);
  CHECK(net.edges_out(12).size() == 1);
  CHECK(net.edges_in(12).front()->from == 11);
  CHECK(net.edges_out(12).front()->to == 11);

  CHECK(net.neighbors(4) == std::vector<NodeId>{1, 3, 5, 7, 8});
  CHECK(net.neighbors(5) == std::vector<NodeId>{2, 4, 6, 9});

  for (const Edge& e : net.edges()) CHECK(e.length >= 100.0);
}

TEST_CASE("example unet tiles four sectors into 42 nodes") {
  const RouteNetwork net = build_example_unet();
  CHECK(net.nodes().size() == 42);
  CHECK(net.edges().size() == 4 * 26);
  CHECK(net.snet_names() == std::vector<std::string>{"S1", "S2", "S3", "S4"});

  const std::vector<NodeId> expected_terminals{1,  2,  3,  7,  13, 14, 17, 20,
                                               23, 24, 28, 33, 34, 37, 40, 42};
  CHECK(net.terminals() == expected_terminals);

  NodeId max_id = 0;
  for (const Node& n : net.nodes()) max_id = std::max(max_id, n.id);
  CHECK(max_id == 42);

  SUBCASE("every terminal pair is reachable (brute-force BFS)") {
    for (NodeId a : net.terminals()) {
      const auto reach = net.reachable_from(a);
      for (NodeId b : net.terminals()) {
        CAPTURE(a);
        CAPTURE(b);
        CHECK(std::binary_search(reach.begin(), reach.end(), b));
      }
    }
  }

  SUBCASE("edges partition into the four sectors") {
    std::map<int, int> counts;
    for (const Edge& e : net.edges()) ++counts[e.snet];
    int total = 0;
    for (const auto& [snet, count] : counts) {
      CHECK(count == 26);
      total += count;
    }
    CHECK(total == static_cast<int>(net.edges().size()));
  }

  SUBCASE("seam nodes are shared between sectors") {
    for (NodeId seam : {6, 10, 12, 22, 27, 31}) {
      std::set<int> snets;
      for (const Edge* e : net.edges_in(seam)) snets.insert(e->snet);
      for (const Edge* e : net.edges_out(seam)) snets.insert(e->snet);
      CAPTURE(seam);
      CHECK(snets.size() == 2);
    }
  }
}

TEST_CASE("bundled network files match the builders") {
  const RouteNetwork snet1_file = load_network(source_path("data/snet1.json"));
  CHECK(snet1_file.nodes().size() == 12);
  CHECK(snet1_file.edges().size() == 26);
  CHECK(serialize_network(snet1_file) == serialize_network(build_snet1()));

  const RouteNetwork unet_file = load_network(source_path("data/unet4.json"));
  CHECK(serialize_network(unet_file) == serialize_network(build_example_unet()));
}

TEST_CASE("serialize/parse round trip is exact") {
  const RouteNetwork net = build_example_unet();
  const std::string text = serialize_network(net);
  CHECK(serialize_network(parse_network(text)) == text);
}

TEST_CASE("loader rejects malformed documents") {
  SUBCASE("no nodes") {
    CHECK_THROWS_WITH_AS(make(R"("nodes": [], "edges": [], "terminals": [])"),
                         doctest::Contains("no nodes"), Error);
  }
  SUBCASE("dangling endpoint") {
    CHECK_THROWS_WITH_AS(
        make(R"("nodes": [{"id":1,"x":0,"y":0,"z":0}],
                "edges": [{"from":1,"to":13,"snet":"S1"}], "terminals": [])"),
        doctest::Contains("dangling"), Error);
  }
  SUBCASE("duplicate node id") {
    CHECK_THROWS_WITH_AS(
        make(R"("nodes": [{"id":1,"x":0,"y":0,"z":0},{"id":1,"x":9,"y":0,"z":0}],
                "edges": [], "terminals": [])"),
        doctest::Contains("duplicate node"), Error);
  }
  SUBCASE("duplicate edge") {
    CHECK_THROWS_WITH_AS(
        make(R"("nodes": [{"id":1,"x":0,"y":0,"z":0},{"id":2,"x":9,"y":0,"z":0}],
                "edges": [{"from":1,"to":2,"snet":"S1"},{"from":1,"to":2,"snet":"S2"}],
                "terminals": [])"),
        doctest::Contains("duplicate edge"), Error);
  }
  SUBCASE("self edge") {
    CHECK_THROWS_WITH_AS(
        make(R"("nodes": [{"id":1,"x":0,"y":0,"z":0}],
                "edges": [{"from":1,"to":1,"snet":"S1"}], "terminals": [])"),
        doctest::Contains("itself"), Error);
  }
  SUBCASE("shared position") {
    CHECK_THROWS_WITH_AS(
        make(R"("nodes": [{"id":1,"x":0,"y":0,"z":0},{"id":2,"x":0,"y":0,"z":0}],
                "edges": [], "terminals": [])"),
        doctest::Contains("spatial position"), Error);
  }
  SUBCASE("edge without snet") {
    CHECK_THROWS_WITH_AS(
        make(R"("nodes": [{"id":1,"x":0,"y":0,"z":0},{"id":2,"x":9,"y":0,"z":0}],
                "edges": [{"from":1,"to":2}], "terminals": [])"),
        doctest::Contains("snet"), Error);
  }
  SUBCASE("disconnected terminal pair") {
    CHECK_THROWS_WITH_AS(
        make(R"("nodes": [{"id":1,"x":0,"y":0,"z":0},{"id":2,"x":9,"y":0,"z":0}],
                "edges": [{"from":1,"to":2,"snet":"S1"}], "terminals": [1, 2])"),
        doctest::Contains("not connected"), Error);
  }
  SUBCASE("unknown schema version") {
    CHECK_THROWS_WITH_AS(parse_network(R"({"schema": "unet-network/9",
                                           "nodes": [], "edges": [], "terminals": []})"),
                         doctest::Contains("unsupported schema"), Error);
  }
  SUBCASE("not json") { CHECK_THROWS_AS(parse_network("nodes: 1"), Error); }
  SUBCASE("unknown terminal id") {
    CHECK_THROWS_WITH_AS(
        make(R"("nodes": [{"id":1,"x":0,"y":0,"z":0}], "edges": [], "terminals": [7])"),
        doctest::Contains("not a network node"), Error);
  }
}

TEST_CASE("builtin lookup") {
  CHECK(build_builtin("snet1").nodes().size() == 12);
  CHECK(build_builtin("unet4").nodes().size() == 42);
  CHECK_THROWS_AS(build_builtin("nope"), Error);
}
