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

#ifndef UNET_SIM_HPP
#define UNET_SIM_HPP

#include <cstdint>
#include <vector>

#include "unet/network.hpp"
#include "unet/rng.hpp"
#include "unet/schedule.hpp"

namespace unet {

/// One Monte Carlo trial: ticks advance in steps of tick_seconds; at each
/// tick a geometric number of vehicles arrives (repeat while a uniform draw
/// is <= p_a), each with a random ordered terminal pair; the trial stops once
/// n_uav requests have been scheduled.
struct SimConfig {
  double p_a = 0.5;          // arrival probability per draw
  double tick_seconds = 1.0;
  double t_min = 5.0;        // arrival-time separation, seconds
  double speed = 4.0;        // m/s
  double d_star = 45.0;      // boundary circle radius used for checkpoint timing
  int n_uav = 1000;

  void validate() const;
};

struct UavRecord {
  int k = 0;
  NodeId origin = 0;
  NodeId destination = 0;
  double eta = 0.0;
  double sta = 0.0;
  double route_length = 0.0;  // meters

  double delay() const { return sta - eta; }
};

struct TrialResult {
  std::vector<UavRecord> records;
  double max_delay = 0.0;
  double mean_delay = 0.0;
};

/// Arrivals for one tick. Draws r uniform on (0, 1]; while r <= p_a, emits a
/// request with eta = tick_time and a uniformly random ordered pair of
/// distinct terminals, then redraws; stops at the first r > p_a or once
/// max_count requests have been emitted. Sequence numbers start at k_start.
///
/// RNG consumption per accepted arrival: one acceptance draw, one origin
/// index, one destination index.
std::vector<UavRequest> draw_arrivals(double tick_time, double p_a,
                                      const std::vector<NodeId>& terminals, Xoshiro256pp& rng,
                                      int k_start, int max_count);

/// Run one trial against a fresh scheduler; requests are scheduled in
/// arrival order (FCFS). Returns per-vehicle delay records. Deterministic in
/// (config, network, rng state). With p_a == 0 the result is empty.
TrialResult run_trial(const SimConfig& config, const RouteNetwork& network, Xoshiro256pp& rng);

/// Like run_trial, but also exposes the scheduler's book for auditing.
TrialResult run_trial(const SimConfig& config, const RouteNetwork& network, Xoshiro256pp& rng,
                      Scheduler& scheduler);

struct SweepConfig {
  std::vector<double> p_a_values{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
  std::vector<double> t_min_values{5.0, 2.0};
  int trials = 7;
  int n_uav = 1000;
  double tick_seconds = 1.0;
  double speed = 4.0;
  double d_star = 45.0;
  std::uint64_t seed = 1u;

  void validate() const;
};

struct TrialCell {
  double t_min = 0.0;
  double p_a = 0.0;
  int trial = 0;
  std::uint64_t seed = 0;  // substream seed actually used
  TrialResult result;
};

struct ExperimentReport {
  SweepConfig config;
  std::vector<TrialCell> cells;  // ordered by (t_min index, p_a index, trial)

  /// Mean over trials of the per-trial maximum delay.
  double mean_max_delay(double t_min, double p_a) const;
};

/// Full sweep: for every (t_min, p_a) pair, `trials` independent trials with
/// paired per-trial substream seeds (trial i uses the same seed in every
/// cell). Trials run in parallel; results are deterministic regardless.
ExperimentReport run_experiment(const SweepConfig& config, const RouteNetwork& network);

}  // namespace unet

#endif  // UNET_SIM_HPP
