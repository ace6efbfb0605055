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

#ifndef UNET_AIRSPACE_HPP
#define UNET_AIRSPACE_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "unet/network.hpp"
#include "unet/separation.hpp"

namespace unet {

/// Geometry parameters for per-node de-confliction airspaces.
///
/// Each directed edge crosses a node's boundary circle at its own point:
/// traffic keeps right, so the inbound and outbound crossings of the same
/// corridor are offset laterally by lane_offset on each side of the
/// node-to-neighbor line. Opposite crossings end up 2 * lane_offset apart.
struct AirspaceConfig {
  SeparationParams sep;
  double d_star = 45.0;      // boundary circle radius, meters
  double lane_offset = 4.4;  // lateral lane shift, meters

  void validate() const;

  /// Default sampling step for the trajectory-distance oracle; keeps the
  /// positional sampling error at d_sep / 10.
  double sample_dt() const { return sep.d_sep / (10.0 * sep.speed); }
};

/// Identifies one boundary-circle crossing of a node: the corridor's other
/// end and whether the crossing belongs to the inbound edge.
struct CrossingId {
  NodeId neighbor = 0;
  bool inbound = false;

  bool operator<(const CrossingId& o) const {
    if (neighbor != o.neighbor) return neighbor < o.neighbor;
    return inbound < o.inbound;
  }
  bool operator==(const CrossingId& o) const {
    return neighbor == o.neighbor && inbound == o.inbound;
  }
};

/// Per-node de-confliction geometry: boundary circle crossings and the
/// stacked transition levels, one level per inbound edge that has at least
/// one non-backtrack transition. Level i sits at center.z + i * level_gap.
struct NodeAirspace {
  NodeId node = 0;
  Vec3 center;
  double d_star = 0.0;
  double h_star = 0.0;     // cylinder height above the node plane
  double level_gap = 0.0;  // h_N, >= max(d_sep, d_min)

  std::map<CrossingId, Vec3> points;
  std::map<NodeId, int> levels;  // inbound neighbor -> level index (1-based)
  int transition_count = 0;
  double min_point_spacing = 0.0;  // min pairwise crossing distance; 0 if < 2 points

  const Vec3& point(const CrossingId& id) const;
  double level_height(int index) const { return center.z + index * level_gap; }
  int level_count() const { return static_cast<int>(levels.size()); }
};

/// Construct and validate a node's airspace. Throws ErrorCode::geometry when
/// the configuration cannot satisfy the separation requirements (crossing
/// spacing below sqrt(2) * d_sep with more than one transition, an edge
/// shorter than 2 * d_star, or a non-horizontal edge at the node).
NodeAirspace build_node_airspace(const RouteNetwork& network, NodeId node, const AirspaceConfig& config);

/// Airspaces for every node of the network.
std::map<NodeId, NodeAirspace> build_all_airspaces(const RouteNetwork& network,
                                                   const AirspaceConfig& config);

enum class TransitionMode { leveled, direct, on_demand };

/// Waypoint polyline a vehicle follows through a node's airspace.
struct TransitionPath {
  std::vector<Vec3> waypoints;
  TransitionMode mode = TransitionMode::leveled;
  int level = 0;  // 0 for in-plane paths, else the level index used
};

/// Path from the inbound crossing of e_in to the outbound crossing of e_out.
///
/// leveled   : climb at the inbound crossing to the level assigned to e_in,
///             cross above the node, descend at the outbound crossing.
/// direct    : in-plane through the node center.
/// on_demand : direct when no level is occupied, otherwise the lowest free
///             level's polyline.
TransitionPath transition_path(const NodeAirspace& airspace,
                               const Edge& e_in,
                               const Edge& e_out,
                               TransitionMode mode,
                               const std::set<int>& occupied_levels = {});

/// A polyline traversed at constant speed starting at entry_time. The
/// vehicle exists only between entry_time and exit_time.
class TimedPath {
 public:
  TimedPath(std::vector<Vec3> waypoints, double entry_time, double speed);

  double entry_time() const { return entry_time_; }
  double exit_time() const { return entry_time_ + cumulative_.back() / speed_; }
  double speed() const { return speed_; }
  double length() const { return cumulative_.back(); }
  const std::vector<Vec3>& waypoints() const { return waypoints_; }

  /// Position at time t; t is clamped to the presence window.
  Vec3 position(double t) const;

 private:
  std::vector<Vec3> waypoints_;
  std::vector<double> cumulative_;
  double entry_time_;
  double speed_;
};

struct SampledDistance {
  double min_distance = 0.0;    // +infinity when presence windows are disjoint
  double sampling_bound = 0.0;  // worst-case closeness missed between samples
};

/// Minimum distance between two moving points, sampled every dt seconds over
/// the overlap of their presence windows (both endpoints included).
SampledDistance sample_min_distance(const TimedPath& a, const TimedPath& b, double dt);

/// One line of the per-node geometry check.
struct NodeGeometryStatus {
  NodeId node = 0;
  bool ok = false;
  double d_star = 0.0;
  int point_count = 0;
  double min_spacing = 0.0;
  int level_count = 0;
  std::string message;  // failure reason when !ok
};

std::vector<NodeGeometryStatus> check_geometry(const RouteNetwork& network, const AirspaceConfig& config);
std::string format_geometry_report(const RouteNetwork& network, const AirspaceConfig& config,
                                   const std::vector<NodeGeometryStatus>& statuses);

}  // namespace unet

#endif  // UNET_AIRSPACE_HPP
