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

/*
 * C interface of the unet shared library: route-network loading and
 * validation, conflict-free FCFS scheduling, and Monte Carlo delay sweeps.
 *
 * Conventions:
 *  - objects are opaque handles created by unet_*_new/load and released by
 *    the matching unet_*_free (free functions accept NULL);
 *  - every fallible call returns unet_status; on failure,
 *    unet_last_error() describes the problem for the calling thread;
 *  - strings returned through char** are owned by the caller and must be
 *    released with unet_string_free().
 */

#ifndef UNET_H
#define UNET_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct unet_network unet_network;
typedef struct unet_scheduler unet_scheduler;

typedef enum unet_status {
  UNET_OK = 0,
  UNET_ERR_IO = 1,
  UNET_ERR_SCHEMA = 2,
  UNET_ERR_INVALID_NETWORK = 3,
  UNET_ERR_INVALID_ARGUMENT = 4,
  UNET_ERR_NO_PATH = 5,
  UNET_ERR_GEOMETRY = 6,
  UNET_ERR_CONFLICT = 7,
  UNET_ERR_INTERNAL = 8
} unet_status;

/* Library semantic version, e.g. "0.1.0". */
const char* unet_version(void);

/* Message of the last failure on the calling thread; empty if none. */
const char* unet_last_error(void);

void unet_string_free(char* s);

/* ---- networks ---------------------------------------------------------- */

unet_status unet_network_load(const char* path, unet_network** out);
unet_status unet_network_builtin(const char* name, unet_network** out); /* "snet1", "unet4" */
unet_status unet_network_save(const unet_network* network, const char* path);
void unet_network_free(unet_network* network);

int unet_network_node_count(const unet_network* network);
int unet_network_edge_count(const unet_network* network);
int unet_network_terminal_count(const unet_network* network);
unet_status unet_network_terminals(const unet_network* network, int* out_ids, int capacity,
                                   int* out_count);

/* ---- geometry ---------------------------------------------------------- */

typedef struct unet_params {
  double d_sep;       /* minimum vehicle separation, meters */
  double phi_star;    /* maximum turn angle, radians, < pi */
  double speed;       /* cruise speed, m/s */
  double d_star;      /* node boundary circle radius, meters */
  double lane_offset; /* lateral lane shift at crossings, meters */
} unet_params;

unet_params unet_params_default(void);

/*
 * Per-node geometry check (crossing spacing vs sqrt(2)*d_sep, level stack).
 * *out_ok is 1 when every node passes. *out_report receives the readable
 * per-node report.
 */
unet_status unet_geometry_check(const unet_network* network, const unet_params* params,
                                char** out_report, int* out_ok);

/* Shortest route between two nodes; fills node ids. */
unet_status unet_shortest_route(const unet_network* network, int origin, int destination,
                                int* out_nodes, int capacity, int* out_count, double* out_length);

/* ---- scheduling -------------------------------------------------------- */

typedef struct unet_plan {
  int k;
  int origin;
  int destination;
  double eta;
  double sta;
  double delay;
  double route_length;
} unet_plan;

/*
 * FCFS scheduler over a network. t_min is the required arrival-time spacing
 * at every boundary-circle crossing; speed/d_star come from params.
 * The network handle must outlive the scheduler.
 */
unet_status unet_scheduler_new(const unet_network* network, const unet_params* params, double t_min,
                               unet_scheduler** out);
void unet_scheduler_free(unet_scheduler* scheduler);

/* Schedule one request; returns the committed plan. */
unet_status unet_scheduler_schedule(unet_scheduler* scheduler, int k, int origin, int destination,
                                    double eta, unet_plan* out_plan);

int unet_scheduler_plan_count(const unet_scheduler* scheduler);
unet_status unet_scheduler_plan(const unet_scheduler* scheduler, int index, unet_plan* out_plan);
unet_status unet_scheduler_plan_route(const unet_scheduler* scheduler, int index, int* out_nodes,
                                      int capacity, int* out_count);

/* Number of t_min violations across all timelines (0 = conflict-free). */
unet_status unet_scheduler_verify(const unet_scheduler* scheduler, int* out_violations);

unet_status unet_scheduler_export_plans_csv(const unet_scheduler* scheduler, const char* path);
unet_status unet_scheduler_export_timelines_csv(const unet_scheduler* scheduler, const char* path);

/* ---- experiments ------------------------------------------------------- */

/*
 * Run a delay sweep described by a "unet-config/1" JSON document and write
 * summary.csv, per_uav.csv and manifest.json into out_dir. Outputs are a
 * deterministic function of the config.
 */
unet_status unet_sweep_run(const char* config_json, const char* out_dir);

#ifdef __cplusplus
}
#endif

#endif /* UNET_H */
