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

#include "unet/schedule.hpp"

#include <algorithm>
#include <cmath>

#include "unet/error.hpp"

namespace unet {

namespace {

// Gaps this close to t_min count as satisfying it, so that reservations
// placed exactly t_min apart survive floating-point round trips.
constexpr double kTimeTolerance = 1e-9;

}  // namespace

void UavRequest::validate() const {
  if (origin == destination)
    throw Error(ErrorCode::invalid_argument, "request origin and destination must differ");
  if (!(eta >= 0.0)) throw Error(ErrorCode::invalid_argument, "request eta must be non-negative");
}

std::string CheckpointId::str() const {
  return std::to_string(node) + (crossing.inbound ? "<" : ">") + std::to_string(crossing.neighbor);
}

std::vector<ArrivalOffset> arrival_offsets(const Route& route, const RouteNetwork& network,
                                           double speed, double d_star) {
  if (route.nodes.size() < 2) throw Error(ErrorCode::invalid_argument, "route needs at least one edge");
  if (!(speed > 0.0)) throw Error(ErrorCode::invalid_argument, "speed must be positive");
  if (!(d_star > 0.0)) throw Error(ErrorCode::invalid_argument, "d_star must be positive");

  std::vector<double> cumulative{0.0};
  for (std::size_t i = 1; i < route.nodes.size(); ++i) {
    const Edge& e = network.edge(route.nodes[i - 1], route.nodes[i]);
    if (e.length <= 2.0 * d_star)
      throw Error(ErrorCode::invalid_argument,
                  "edge {" + std::to_string(e.from) + "," + std::to_string(e.to) +
                      "} is not longer than 2*d_star; checkpoint times would not increase");
    cumulative.push_back(cumulative.back() + e.length);
  }

  std::vector<ArrivalOffset> offsets;
  const auto& nodes = route.nodes;
  offsets.push_back({{nodes[0], {nodes[1], false}}, 0.0});
  for (std::size_t i = 1; i + 1 < nodes.size(); ++i) {
    offsets.push_back({{nodes[i], {nodes[i - 1], true}}, (cumulative[i] - d_star) / speed});
    offsets.push_back({{nodes[i], {nodes[i + 1], false}}, (cumulative[i] + d_star) / speed});
  }
  offsets.push_back(
      {{nodes.back(), {nodes[nodes.size() - 2], true}}, (cumulative.back() - d_star) / speed});
  return offsets;
}

void ScheduleBook::commit(const FlightPlan& plan, double t_min) {
  for (const ArrivalOffset& a : plan.arrivals) {
    const double t = plan.sta + a.offset;
    const Timeline& line = timelines_[a.checkpoint];
    auto it = std::lower_bound(line.begin(), line.end(), std::make_pair(t, 0));
    if (it != line.end() && it->first - t < t_min - kTimeTolerance)
      throw Error(ErrorCode::conflict, "commit would violate t_min at checkpoint " + a.checkpoint.str() +
                                           " against uav " + std::to_string(it->second));
    if (it != line.begin() && t - std::prev(it)->first < t_min - kTimeTolerance)
      throw Error(ErrorCode::conflict, "commit would violate t_min at checkpoint " + a.checkpoint.str() +
                                           " against uav " + std::to_string(std::prev(it)->second));
  }
  for (const ArrivalOffset& a : plan.arrivals) {
    Timeline& line = timelines_[a.checkpoint];
    const std::pair<double, int> entry{plan.sta + a.offset, plan.request.k};
    line.insert(std::upper_bound(line.begin(), line.end(), entry), entry);
  }
  plans_.push_back(plan);
}

ConflictCheck ScheduleBook::verify_conflict_free(double t_min) const {
  ConflictCheck check;
  for (const auto& [checkpoint, line] : timelines_) {
    for (std::size_t i = 1; i < line.size(); ++i) {
      const double gap = line[i].first - line[i - 1].first;
      if (gap < t_min - kTimeTolerance) {
        check.ok = false;
        check.violations.push_back({checkpoint, line[i - 1].second, line[i].second, gap});
      }
    }
  }
  return check;
}

double earliest_sta(const std::vector<ArrivalOffset>& offsets, const ScheduleBook& book,
                    double eta, double t_min) {
  if (offsets.empty()) throw Error(ErrorCode::invalid_argument, "offsets must be nonempty");

  // Candidate entry times sta are forbidden while strictly inside
  // (t - offset - t_min, t - offset + t_min) for any reservation t; the
  // boundary itself (gap exactly t_min) is allowed.
  std::vector<std::pair<double, double>> intervals;
  for (const ArrivalOffset& a : offsets) {
    auto it = book.timelines().find(a.checkpoint);
    if (it == book.timelines().end()) continue;
    for (const auto& [t, k] : it->second) {
      intervals.emplace_back(t - a.offset - t_min, t - a.offset + t_min);
    }
  }
  std::sort(intervals.begin(), intervals.end());

  double sta = eta;
  for (const auto& [lo, hi] : intervals) {
    if (lo >= sta + kTimeTolerance) break;  // intervals are sorted; no later one can cover sta
    if (sta > lo + kTimeTolerance && sta < hi - kTimeTolerance) sta = hi;
  }
  return sta;
}

Scheduler::Scheduler(const RouteNetwork& network, double speed, double d_star, double t_min)
    : network_(network), speed_(speed), d_star_(d_star), t_min_(t_min) {
  if (!(speed > 0.0)) throw Error(ErrorCode::invalid_argument, "speed must be positive");
  if (!(d_star > 0.0)) throw Error(ErrorCode::invalid_argument, "d_star must be positive");
  if (!(t_min >= 0.0)) throw Error(ErrorCode::invalid_argument, "t_min must be non-negative");
}

const FlightPlan& Scheduler::schedule(const UavRequest& request) {
  request.validate();
  FlightPlan plan;
  plan.request = request;
  plan.route = shortest_route(network_, request.origin, request.destination);
  plan.arrivals = arrival_offsets(plan.route, network_, speed_, d_star_);
  plan.sta = earliest_sta(plan.arrivals, book_, request.eta, t_min_);
  book_.commit(plan, t_min_);
  return book_.plans().back();
}

}  // namespace unet
