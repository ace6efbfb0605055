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

#include "unet.h"

#include <cstring>
#include <string>

#include "unet/airspace.hpp"
#include "unet/error.hpp"
#include "unet/network.hpp"
#include "unet/report.hpp"
#include "unet/route.hpp"
#include "unet/schedule.hpp"
#include "unet/version.hpp"

struct unet_network {
  unet::RouteNetwork impl;
};

struct unet_scheduler {
  unet::Scheduler impl;
};

namespace {

thread_local std::string g_last_error;

unet_status map_code(unet::ErrorCode code) {
  switch (code) {
    case unet::ErrorCode::io: return UNET_ERR_IO;
    case unet::ErrorCode::schema: return UNET_ERR_SCHEMA;
    case unet::ErrorCode::invalid_network: return UNET_ERR_INVALID_NETWORK;
    case unet::ErrorCode::invalid_argument: return UNET_ERR_INVALID_ARGUMENT;
    case unet::ErrorCode::no_path: return UNET_ERR_NO_PATH;
    case unet::ErrorCode::geometry: return UNET_ERR_GEOMETRY;
    case unet::ErrorCode::conflict: return UNET_ERR_CONFLICT;
    case unet::ErrorCode::internal: return UNET_ERR_INTERNAL;
  }
  return UNET_ERR_INTERNAL;
}

template <typename Fn>
unet_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return UNET_OK;
  } catch (const unet::Error& ex) {
    g_last_error = ex.what();
    return map_code(ex.code());
  } catch (const std::exception& ex) {
    g_last_error = ex.what();
    return UNET_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return UNET_ERR_INTERNAL;
  }
}

unet_status require(bool condition, const char* message) {
  if (condition) return UNET_OK;
  g_last_error = message;
  return UNET_ERR_INVALID_ARGUMENT;
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

unet::AirspaceConfig to_config(const unet_params& p) {
  unet::AirspaceConfig config;
  config.sep.d_sep = p.d_sep;
  config.sep.phi_star = p.phi_star;
  config.sep.speed = p.speed;
  config.d_star = p.d_star;
  config.lane_offset = p.lane_offset;
  return config;
}

unet_plan to_plan(const unet::FlightPlan& plan) {
  unet_plan out;
  out.k = plan.request.k;
  out.origin = plan.request.origin;
  out.destination = plan.request.destination;
  out.eta = plan.request.eta;
  out.sta = plan.sta;
  out.delay = plan.delay();
  out.route_length = plan.route.length;
  return out;
}

unet_status fill_nodes(const std::vector<unet::NodeId>& nodes, int* out_nodes, int capacity,
                       int* out_count) {
  if (out_count) *out_count = static_cast<int>(nodes.size());
  if (!out_nodes) return UNET_OK;
  if (capacity < static_cast<int>(nodes.size())) {
    g_last_error = "buffer too small; required size is in *out_count";
    return UNET_ERR_INVALID_ARGUMENT;
  }
  for (std::size_t i = 0; i < nodes.size(); ++i) out_nodes[i] = nodes[i];
  return UNET_OK;
}

}  // namespace

extern "C" {

const char* unet_version(void) { return UNET_VERSION_STRING; }

const char* unet_last_error(void) { return g_last_error.c_str(); }

void unet_string_free(char* s) { delete[] s; }

unet_status unet_network_load(const char* path, unet_network** out) {
  if (unet_status s = require(path && out, "path and out must be non-null")) return s;
  return guarded([&] { *out = new unet_network{unet::load_network(path)}; });
}

unet_status unet_network_builtin(const char* name, unet_network** out) {
  if (unet_status s = require(name && out, "name and out must be non-null")) return s;
  return guarded([&] { *out = new unet_network{unet::build_builtin(name)}; });
}

unet_status unet_network_save(const unet_network* network, const char* path) {
  if (unet_status s = require(network && path, "network and path must be non-null")) return s;
  return guarded([&] { unet::save_network(network->impl, path); });
}

void unet_network_free(unet_network* network) { delete network; }

int unet_network_node_count(const unet_network* network) {
  return network ? static_cast<int>(network->impl.nodes().size()) : 0;
}

int unet_network_edge_count(const unet_network* network) {
  return network ? static_cast<int>(network->impl.edges().size()) : 0;
}

int unet_network_terminal_count(const unet_network* network) {
  return network ? static_cast<int>(network->impl.terminals().size()) : 0;
}

unet_status unet_network_terminals(const unet_network* network, int* out_ids, int capacity,
                                   int* out_count) {
  if (unet_status s = require(network != nullptr, "network must be non-null")) return s;
  return fill_nodes(network->impl.terminals(), out_ids, capacity, out_count);
}

unet_params unet_params_default(void) {
  const unet::AirspaceConfig config;
  return {config.sep.d_sep, config.sep.phi_star, config.sep.speed, config.d_star, config.lane_offset};
}

unet_status unet_geometry_check(const unet_network* network, const unet_params* params,
                                char** out_report, int* out_ok) {
  if (unet_status s = require(network && params, "network and params must be non-null")) return s;
  return guarded([&] {
    const unet::AirspaceConfig config = to_config(*params);
    config.validate();
    const auto statuses = unet::check_geometry(network->impl, config);
    bool all_ok = true;
    for (const auto& st : statuses) all_ok = all_ok && st.ok;
    if (out_ok) *out_ok = all_ok ? 1 : 0;
    if (out_report)
      *out_report = copy_string(unet::format_geometry_report(network->impl, config, statuses));
  });
}

unet_status unet_shortest_route(const unet_network* network, int origin, int destination,
                                int* out_nodes, int capacity, int* out_count, double* out_length) {
  if (unet_status s = require(network != nullptr, "network must be non-null")) return s;
  unet_status status = UNET_OK;
  unet_status guard = guarded([&] {
    const unet::Route route = unet::shortest_route(network->impl, origin, destination);
    if (out_length) *out_length = route.length;
    status = fill_nodes(route.nodes, out_nodes, capacity, out_count);
  });
  return guard != UNET_OK ? guard : status;
}

unet_status unet_scheduler_new(const unet_network* network, const unet_params* params, double t_min,
                               unet_scheduler** out) {
  if (unet_status s = require(network && params && out, "network, params and out must be non-null"))
    return s;
  return guarded([&] {
    *out = new unet_scheduler{
        unet::Scheduler(network->impl, params->speed, params->d_star, t_min)};
  });
}

void unet_scheduler_free(unet_scheduler* scheduler) { delete scheduler; }

unet_status unet_scheduler_schedule(unet_scheduler* scheduler, int k, int origin, int destination,
                                    double eta, unet_plan* out_plan) {
  if (unet_status s = require(scheduler != nullptr, "scheduler must be non-null")) return s;
  return guarded([&] {
    const unet::FlightPlan& plan = scheduler->impl.schedule({k, origin, destination, eta});
    if (out_plan) *out_plan = to_plan(plan);
  });
}

int unet_scheduler_plan_count(const unet_scheduler* scheduler) {
  return scheduler ? static_cast<int>(scheduler->impl.book().plans().size()) : 0;
}

unet_status unet_scheduler_plan(const unet_scheduler* scheduler, int index, unet_plan* out_plan) {
  if (unet_status s = require(scheduler && out_plan, "scheduler and out_plan must be non-null")) return s;
  const auto& plans = scheduler->impl.book().plans();
  if (unet_status s = require(index >= 0 && index < static_cast<int>(plans.size()),
                              "plan index out of range"))
    return s;
  *out_plan = to_plan(plans[index]);
  return UNET_OK;
}

unet_status unet_scheduler_plan_route(const unet_scheduler* scheduler, int index, int* out_nodes,
                                      int capacity, int* out_count) {
  if (unet_status s = require(scheduler != nullptr, "scheduler must be non-null")) return s;
  const auto& plans = scheduler->impl.book().plans();
  if (unet_status s = require(index >= 0 && index < static_cast<int>(plans.size()),
                              "plan index out of range"))
    return s;
  return fill_nodes(plans[index].route.nodes, out_nodes, capacity, out_count);
}

unet_status unet_scheduler_verify(const unet_scheduler* scheduler, int* out_violations) {
  if (unet_status s = require(scheduler && out_violations,
                              "scheduler and out_violations must be non-null"))
    return s;
  return guarded([&] {
    const unet::ConflictCheck check = scheduler->impl.book().verify_conflict_free(scheduler->impl.t_min());
    *out_violations = static_cast<int>(check.violations.size());
  });
}

unet_status unet_scheduler_export_plans_csv(const unet_scheduler* scheduler, const char* path) {
  if (unet_status s = require(scheduler && path, "scheduler and path must be non-null")) return s;
  return guarded([&] { unet::write_plans_csv(path, scheduler->impl.book().plans()); });
}

unet_status unet_scheduler_export_timelines_csv(const unet_scheduler* scheduler, const char* path) {
  if (unet_status s = require(scheduler && path, "scheduler and path must be non-null")) return s;
  return guarded([&] { unet::write_timelines_csv(path, scheduler->impl.book()); });
}

unet_status unet_sweep_run(const char* config_json, const char* out_dir) {
  if (unet_status s = require(config_json && out_dir, "config_json and out_dir must be non-null"))
    return s;
  return guarded([&] {
    const unet::SweepSpec spec = unet::parse_sweep_spec(config_json);
    unet::run_sweep(spec, out_dir);
  });
}

}  // extern "C"
