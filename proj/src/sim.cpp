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

#include "unet/sim.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <thread>

#include "unet/error.hpp"

namespace unet {

namespace {

// Guard against configurations that would effectively never finish
// (e.g. p_a so small that n_uav arrivals take forever).
constexpr long long kMaxTicks = 100'000'000;

}  // namespace

void SimConfig::validate() const {
  if (!(p_a >= 0.0) || p_a > 1.0) throw Error(ErrorCode::invalid_argument, "p_a must be in [0, 1]");
  if (!(tick_seconds > 0.0)) throw Error(ErrorCode::invalid_argument, "tick_seconds must be positive");
  if (!(t_min >= 0.0)) throw Error(ErrorCode::invalid_argument, "t_min must be non-negative");
  if (!(speed > 0.0)) throw Error(ErrorCode::invalid_argument, "speed must be positive");
  if (!(d_star > 0.0)) throw Error(ErrorCode::invalid_argument, "d_star must be positive");
  if (n_uav < 1) throw Error(ErrorCode::invalid_argument, "n_uav must be at least 1");
}

std::vector<UavRequest> draw_arrivals(double tick_time, double p_a,
                                      const std::vector<NodeId>& terminals, Xoshiro256pp& rng,
                                      int k_start, int max_count) {
  if (terminals.size() < 2)
    throw Error(ErrorCode::invalid_argument, "need at least two terminals to draw arrivals");
  std::vector<UavRequest> requests;
  const std::uint64_t n = terminals.size();
  while (static_cast<int>(requests.size()) < max_count) {
    if (rng.uniform01() > p_a) break;
    const std::uint64_t oi = rng.uniform_below(n);
    std::uint64_t di = rng.uniform_below(n - 1);
    if (di >= oi) ++di;
    requests.push_back({k_start + static_cast<int>(requests.size()),
                        terminals[oi], terminals[di], tick_time});
  }
  return requests;
}

TrialResult run_trial(const SimConfig& config, const RouteNetwork& network, Xoshiro256pp& rng,
                      Scheduler& scheduler) {
  config.validate();
  TrialResult result;
  if (config.p_a == 0.0) return result;

  const std::vector<NodeId>& terminals = network.terminals();
  int scheduled = 0;
  for (long long tick = 0; scheduled < config.n_uav; ++tick) {
    if (tick > kMaxTicks)
      throw Error(ErrorCode::invalid_argument,
                  "trial did not reach n_uav arrivals within " + std::to_string(kMaxTicks) + " ticks");
    const double t = static_cast<double>(tick) * config.tick_seconds;
    for (const UavRequest& request :
         draw_arrivals(t, config.p_a, terminals, rng, scheduled + 1, config.n_uav - scheduled)) {
      const FlightPlan& plan = scheduler.schedule(request);
      result.records.push_back({request.k, request.origin, request.destination, request.eta,
                                plan.sta, plan.route.length});
      ++scheduled;
    }
  }

  double sum = 0.0;
  for (const UavRecord& r : result.records) {
    result.max_delay = std::max(result.max_delay, r.delay());
    sum += r.delay();
  }
  result.mean_delay = result.records.empty() ? 0.0 : sum / static_cast<double>(result.records.size());
  return result;
}

TrialResult run_trial(const SimConfig& config, const RouteNetwork& network, Xoshiro256pp& rng) {
  Scheduler scheduler(network, config.speed, config.d_star, config.t_min);
  return run_trial(config, network, rng, scheduler);
}

void SweepConfig::validate() const {
  if (p_a_values.empty()) throw Error(ErrorCode::invalid_argument, "p_a sweep must be nonempty");
  if (t_min_values.empty()) throw Error(ErrorCode::invalid_argument, "t_min sweep must be nonempty");
  if (trials < 1) throw Error(ErrorCode::invalid_argument, "trials must be at least 1");
  SimConfig probe;
  probe.tick_seconds = tick_seconds;
  probe.speed = speed;
  probe.d_star = d_star;
  probe.n_uav = n_uav;
  for (double p : p_a_values) {
    probe.p_a = p;
    for (double t : t_min_values) {
      probe.t_min = t;
      probe.validate();
    }
  }
}

double ExperimentReport::mean_max_delay(double t_min, double p_a) const {
  double sum = 0.0;
  int count = 0;
  for (const TrialCell& cell : cells) {
    if (cell.t_min == t_min && cell.p_a == p_a) {
      sum += cell.result.max_delay;
      ++count;
    }
  }
  return count == 0 ? 0.0 : sum / count;
}

ExperimentReport run_experiment(const SweepConfig& config, const RouteNetwork& network) {
  config.validate();
  ExperimentReport report;
  report.config = config;

  for (double t_min : config.t_min_values) {
    for (double p_a : config.p_a_values) {
      for (int trial = 0; trial < config.trials; ++trial) {
        TrialCell cell;
        cell.t_min = t_min;
        cell.p_a = p_a;
        cell.trial = trial;
        cell.seed = trial_seed(config.seed, trial);
        report.cells.push_back(std::move(cell));
      }
    }
  }

  // Cells are independent (own scheduler, own substream); run them on a
  // small worker pool and write each result into its preallocated slot.
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= report.cells.size() || failed.load()) return;
      TrialCell& cell = report.cells[i];
      SimConfig sim;
      sim.p_a = cell.p_a;
      sim.tick_seconds = config.tick_seconds;
      sim.t_min = cell.t_min;
      sim.speed = config.speed;
      sim.d_star = config.d_star;
      sim.n_uav = config.n_uav;
      Xoshiro256pp rng(cell.seed);
      try {
        cell.result = run_trial(sim, network, rng);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        failed.store(true);
        return;
      }
    }
  };

  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t pool = std::min<std::size_t>(hw, report.cells.size());
  std::vector<std::thread> threads;
  for (std::size_t i = 1; i < pool; ++i) threads.emplace_back(worker);
  worker();
  for (std::thread& t : threads) t.join();
  if (first_error) std::rethrow_exception(first_error);
  return report;
}

}  // namespace unet
