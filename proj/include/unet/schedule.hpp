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

#ifndef UNET_SCHEDULE_HPP
#define UNET_SCHEDULE_HPP

#include <map>
#include <string>
#include <vector>

#include "unet/airspace.hpp"
#include "unet/network.hpp"
#include "unet/route.hpp"

namespace unet {

struct UavRequest {
  int k = 0;  // FCFS sequence number
  NodeId origin = 0;
  NodeId destination = 0;
  double eta = 0.0;  // requested network entry time, seconds

  void validate() const;
};

/// A reservable timed resource: one boundary-circle crossing of one node.
struct CheckpointId {
  NodeId node = 0;
  CrossingId crossing;

  bool operator<(const CheckpointId& o) const {
    if (node != o.node) return node < o.node;
    return crossing < o.crossing;
  }
  bool operator==(const CheckpointId& o) const { return node == o.node && crossing == o.crossing; }

  std::string str() const;
};

struct ArrivalOffset {
  CheckpointId checkpoint;
  double offset = 0.0;  // seconds after the scheduled entry time
};

/// Checkpoint visit times of a route, relative to the vehicle's entry time.
///
/// Timing follows the node-distance approximation: the vehicle is at the
/// outbound crossing of the origin at offset 0, and reaches each later
/// node's crossings at (cumulative node distance -/+ d_star) / speed for the
/// inbound/outbound crossing respectively. Offsets are strictly increasing;
/// requires every route edge to be longer than 2 * d_star.
std::vector<ArrivalOffset> arrival_offsets(const Route& route, const RouteNetwork& network,
                                           double speed, double d_star);

struct FlightPlan {
  UavRequest request;
  Route route;
  double sta = 0.0;  // scheduled entry time, >= request.eta
  std::vector<ArrivalOffset> arrivals;

  double delay() const { return sta - request.eta; }
  double arrival_time(std::size_t i) const { return sta + arrivals[i].offset; }
};

struct TimelineViolation {
  CheckpointId checkpoint;
  int uav_a = 0;
  int uav_b = 0;
  double gap = 0.0;
};

struct ConflictCheck {
  bool ok = true;
  std::vector<TimelineViolation> violations;
};

/// Reservation timelines per checkpoint plus the committed plans. Within a
/// timeline, consecutive reservations must be at least t_min apart; a gap of
/// exactly t_min is conflict-free.
class ScheduleBook {
 public:
  using Timeline = std::vector<std::pair<double, int>>;  // (time, uav k), time-sorted

  const std::map<CheckpointId, Timeline>& timelines() const { return timelines_; }
  const std::vector<FlightPlan>& plans() const { return plans_; }
  bool empty() const { return plans_.empty(); }

  /// Insert all of a plan's arrival times. Throws ErrorCode::conflict if any
  /// reservation would violate the t_min gap (a scheduler bug, not user error).
  void commit(const FlightPlan& plan, double t_min);

  /// True iff every timeline's consecutive gaps are >= t_min.
  ConflictCheck verify_conflict_free(double t_min) const;

 private:
  std::map<CheckpointId, Timeline> timelines_;
  std::vector<FlightPlan> plans_;
};

/// Smallest sta >= eta such that every (checkpoint, offset) lands at least
/// t_min away from all existing reservations on that checkpoint's timeline.
/// Exact: forbidden open intervals (t - offset - t_min, t - offset + t_min)
/// are merged and the least feasible point at or after eta is returned.
double earliest_sta(const std::vector<ArrivalOffset>& offsets, const ScheduleBook& book,
                    double eta, double t_min);

/// First-come-first-served scheduler: each request gets the shortest route
/// and the earliest conflict-free entry time given all prior commitments.
/// Single-writer: calls to schedule() must be externally serialized.
class Scheduler {
 public:
  Scheduler(const RouteNetwork& network, double speed, double d_star, double t_min);

  const FlightPlan& schedule(const UavRequest& request);

  const ScheduleBook& book() const { return book_; }
  const RouteNetwork& network() const { return network_; }
  double speed() const { return speed_; }
  double d_star() const { return d_star_; }
  double t_min() const { return t_min_; }

 private:
  const RouteNetwork& network_;
  double speed_;
  double d_star_;
  double t_min_;
  ScheduleBook book_;
};

}  // namespace unet

#endif  // UNET_SCHEDULE_HPP
