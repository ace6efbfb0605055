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

#include "unet/airspace.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "unet/error.hpp"

namespace unet {

namespace {

constexpr double kHorizontalTolerance = 1e-6;  // meters of allowed edge z drift

std::string edge_str(NodeId from, NodeId to) {
  return "{" + std::to_string(from) + "," + std::to_string(to) + "}";
}

}  // namespace

void AirspaceConfig::validate() const {
  sep.validate();
  if (!(d_star >= sep.d_sep))
    throw Error(ErrorCode::invalid_argument, "d_star must be at least d_sep");
  if (!(lane_offset >= 0.0) || lane_offset >= d_star)
    throw Error(ErrorCode::invalid_argument, "lane_offset must lie in [0, d_star)");
}

const Vec3& NodeAirspace::point(const CrossingId& id) const {
  auto it = points.find(id);
  if (it == points.end())
    throw Error(ErrorCode::invalid_argument,
                "node " + std::to_string(node) + " has no crossing for neighbor " +
                    std::to_string(id.neighbor) + (id.inbound ? " (inbound)" : " (outbound)"));
  return it->second;
}

NodeAirspace build_node_airspace(const RouteNetwork& network, NodeId node, const AirspaceConfig& config) {
  config.validate();
  const Node& n = network.node(node);

  NodeAirspace space;
  space.node = node;
  space.center = n.position;
  space.d_star = config.d_star;
  space.level_gap = std::max(config.sep.d_sep, config.sep.d_min());

  const double chord_shift = std::sqrt(config.d_star * config.d_star -
                                       config.lane_offset * config.lane_offset);

  auto add_point = [&](const Edge& e, bool inbound) {
    const NodeId neighbor = inbound ? e.from : e.to;
    const Node& other = network.node(neighbor);
    if (std::abs(other.position.z - n.position.z) > kHorizontalTolerance)
      throw Error(ErrorCode::geometry,
                  "edge " + edge_str(e.from, e.to) + " is not horizontal near node " +
                      std::to_string(node) + "; crossings must lie on one plane");
    if (e.length < 2.0 * config.d_star - 1e-9)
      throw Error(ErrorCode::geometry,
                  "edge " + edge_str(e.from, e.to) + " is shorter than 2*d_star; boundary circles of " +
                      "its endpoints would overlap");
    const Vec3 u = unit_xy(other.position - n.position);
    const Vec3 lateral = inbound ? rot90_ccw(u) : rot90_cw(u);
    space.points[{neighbor, inbound}] =
        n.position + u * chord_shift + lateral * config.lane_offset;
  };

  for (const Edge* e : network.edges_in(node)) add_point(*e, true);
  for (const Edge* e : network.edges_out(node)) add_point(*e, false);

  // Transitions pair each inbound edge with every outbound edge except the
  // one returning to the inbound edge's start node (back-track).
  for (const Edge* in : network.edges_in(node)) {
    int outs = 0;
    for (const Edge* out : network.edges_out(node)) {
      if (out->to != in->from) ++outs;
    }
    space.transition_count += outs;
    if (outs > 0) space.levels.emplace(in->from, 0);
  }
  int index = 0;
  for (auto& [neighbor, level] : space.levels) level = ++index;  // map order = ascending id
  space.h_star = (space.level_count() + 1) * space.level_gap;

  space.min_point_spacing = std::numeric_limits<double>::infinity();
  for (auto a = space.points.begin(); a != space.points.end(); ++a) {
    for (auto b = std::next(a); b != space.points.end(); ++b) {
      space.min_point_spacing = std::min(space.min_point_spacing, distance(a->second, b->second));
    }
  }
  if (space.points.size() < 2) space.min_point_spacing = 0.0;

  const double required = std::numbers::sqrt2 * config.sep.d_sep;
  if (space.transition_count > 1 && space.min_point_spacing < required - 1e-9) {
    std::ostringstream msg;
    msg << "node " << node << ": boundary-circle crossings are " << space.min_point_spacing
        << " m apart, below the required sqrt(2)*d_sep = " << required
        << " m; increase d_star or lane_offset";
    throw Error(ErrorCode::geometry, msg.str());
  }
  return space;
}

std::map<NodeId, NodeAirspace> build_all_airspaces(const RouteNetwork& network,
                                                   const AirspaceConfig& config) {
  std::map<NodeId, NodeAirspace> spaces;
  for (const Node& n : network.nodes()) spaces.emplace(n.id, build_node_airspace(network, n.id, config));
  return spaces;
}

namespace {

TransitionPath leveled_path(const NodeAirspace& space, const Vec3& in_pt, const Vec3& out_pt, int level,
                            TransitionMode mode) {
  const double z = space.level_height(level);
  TransitionPath path;
  path.mode = mode;
  path.level = level;
  path.waypoints = {in_pt,
                    {in_pt.x, in_pt.y, z},
                    {space.center.x, space.center.y, z},
                    {out_pt.x, out_pt.y, z},
                    out_pt};
  return path;
}

}  // namespace

TransitionPath transition_path(const NodeAirspace& space, const Edge& e_in, const Edge& e_out,
                               TransitionMode mode, const std::set<int>& occupied_levels) {
  if (e_in.to != space.node)
    throw Error(ErrorCode::invalid_argument,
                "edge " + edge_str(e_in.from, e_in.to) + " does not end at node " + std::to_string(space.node));
  if (e_out.from != space.node)
    throw Error(ErrorCode::invalid_argument,
                "edge " + edge_str(e_out.from, e_out.to) + " does not start at node " +
                    std::to_string(space.node));
  if (e_out.to == e_in.from)
    throw Error(ErrorCode::invalid_argument,
                "back-track transition " + edge_str(e_in.from, e_in.to) + " -> " +
                    edge_str(e_out.from, e_out.to) + " is not allowed");

  const Vec3& in_pt = space.point({e_in.from, true});
  const Vec3& out_pt = space.point({e_out.to, false});

  switch (mode) {
    case TransitionMode::leveled: {
      auto it = space.levels.find(e_in.from);
      if (it == space.levels.end())
        throw Error(ErrorCode::internal,
                    "no level assigned to inbound edge " + edge_str(e_in.from, e_in.to));
      return leveled_path(space, in_pt, out_pt, it->second, TransitionMode::leveled);
    }
    case TransitionMode::direct: {
      TransitionPath path;
      path.mode = TransitionMode::direct;
      path.level = 0;
      path.waypoints = {in_pt, space.center, out_pt};
      return path;
    }
    case TransitionMode::on_demand: {
      if (occupied_levels.empty()) {
        TransitionPath path = transition_path(space, e_in, e_out, TransitionMode::direct, {});
        path.mode = TransitionMode::on_demand;
        return path;
      }
      for (int level = 1; level <= space.level_count(); ++level) {
        if (!occupied_levels.count(level))
          return leveled_path(space, in_pt, out_pt, level, TransitionMode::on_demand);
      }
      throw Error(ErrorCode::invalid_argument,
                  "all " + std::to_string(space.level_count()) + " levels of node " +
                      std::to_string(space.node) + " are occupied");
    }
  }
  throw Error(ErrorCode::internal, "unknown transition mode");
}

std::vector<double> polyline_turn_angles(const std::vector<Vec3>& pts) {
  std::vector<double> angles;
  Vec3 prev_dir{0, 0, 0};
  bool have_prev = false;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    const Vec3 seg = pts[i] - pts[i - 1];
    const double len = seg.norm();
    if (len == 0.0) continue;
    const Vec3 dir = seg * (1.0 / len);
    if (have_prev) {
      double c = prev_dir.dot(dir);
      c = std::clamp(c, -1.0, 1.0);
      angles.push_back(std::acos(c));
    }
    prev_dir = dir;
    have_prev = true;
  }
  return angles;
}

TimedPath::TimedPath(std::vector<Vec3> waypoints, double entry_time, double speed)
    : waypoints_(std::move(waypoints)), entry_time_(entry_time), speed_(speed) {
  if (waypoints_.empty()) throw Error(ErrorCode::invalid_argument, "timed path needs waypoints");
  if (!(speed_ > 0.0)) throw Error(ErrorCode::invalid_argument, "speed must be positive");
  cumulative_.resize(waypoints_.size());
  cumulative_[0] = 0.0;
  for (std::size_t i = 1; i < waypoints_.size(); ++i)
    cumulative_[i] = cumulative_[i - 1] + distance(waypoints_[i - 1], waypoints_[i]);
}

Vec3 TimedPath::position(double t) const {
  double s = (t - entry_time_) * speed_;
  s = std::clamp(s, 0.0, cumulative_.back());
  auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), s);
  if (it == cumulative_.begin()) return waypoints_.front();
  const std::size_t hi = std::min<std::size_t>(it - cumulative_.begin(), waypoints_.size() - 1);
  const std::size_t lo = hi - 1;
  const double seg = cumulative_[hi] - cumulative_[lo];
  if (seg == 0.0) return waypoints_[hi];
  return lerp(waypoints_[lo], waypoints_[hi], (s - cumulative_[lo]) / seg);
}

SampledDistance sample_min_distance(const TimedPath& a, const TimedPath& b, double dt) {
  if (!(dt > 0.0)) throw Error(ErrorCode::invalid_argument, "dt must be positive");
  SampledDistance result;
  result.sampling_bound = 0.5 * (a.speed() + b.speed()) * dt;
  const double t0 = std::max(a.entry_time(), b.entry_time());
  const double t1 = std::min(a.exit_time(), b.exit_time());
  if (t1 < t0) {
    result.min_distance = std::numeric_limits<double>::infinity();
    return result;
  }
  double best = std::numeric_limits<double>::infinity();
  for (double t = t0; t < t1; t += dt) best = std::min(best, distance(a.position(t), b.position(t)));
  best = std::min(best, distance(a.position(t1), b.position(t1)));
  result.min_distance = best;
  return result;
}

std::vector<NodeGeometryStatus> check_geometry(const RouteNetwork& network, const AirspaceConfig& config) {
  std::vector<NodeGeometryStatus> statuses;
  for (const Node& n : network.nodes()) {
    NodeGeometryStatus s;
    s.node = n.id;
    s.d_star = config.d_star;
    try {
      const NodeAirspace space = build_node_airspace(network, n.id, config);
      s.ok = true;
      s.point_count = static_cast<int>(space.points.size());
      s.min_spacing = space.min_point_spacing;
      s.level_count = space.level_count();
    } catch (const Error& ex) {
      s.ok = false;
      s.message = ex.what();
    }
    statuses.push_back(std::move(s));
  }
  return statuses;
}

std::string format_geometry_report(const RouteNetwork& network, const AirspaceConfig& config,
                                   const std::vector<NodeGeometryStatus>& statuses) {
  std::ostringstream out;
  const double required = std::numbers::sqrt2 * config.sep.d_sep;
  out << "geometry check: network=" << network.name() << " d_sep=" << config.sep.d_sep
      << " d_star=" << config.d_star << " lane_offset=" << config.lane_offset
      << " required_spacing=" << required << "\n";
  int failures = 0;
  for (const NodeGeometryStatus& s : statuses) {
    if (s.ok) {
      out << "  node " << s.node << ": ok  points=" << s.point_count
          << " min_spacing=" << s.min_spacing << " levels=" << s.level_count << "\n";
    } else {
      ++failures;
      out << "  node " << s.node << ": FAIL  " << s.message << "\n";
    }
  }
  out << (failures == 0 ? "all nodes pass" : std::to_string(failures) + " node(s) fail") << "\n";
  return out.str();
}

}  // namespace unet
