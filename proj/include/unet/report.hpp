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

#ifndef UNET_REPORT_HPP
#define UNET_REPORT_HPP

#include <string>
#include <vector>

#include "unet/schedule.hpp"
#include "unet/sim.hpp"

namespace unet {

/// SHA-256 of a byte string, lowercase hex.
std::string sha256_hex(const std::string& bytes);
std::string sha256_file(const std::string& path);

/// "builtin:<name>" or a filesystem path; resolves either to a network and
/// reports the digest of the canonical serialization (builtin) or the file
/// bytes (path).
struct NetworkSource {
  std::string source;

  RouteNetwork load() const;
  std::string digest() const;
};

/// Experiment description as carried by config files and run manifests
/// (schema "unet-config/1").
struct SweepSpec {
  std::string network = "builtin:unet4";
  SweepConfig sweep;
};

SweepSpec parse_sweep_spec(const std::string& json_text);
std::string serialize_sweep_spec(const SweepSpec& spec);

/// Extract the embedded effective config from a run manifest.
SweepSpec sweep_spec_from_manifest(const std::string& manifest_path);

/// CSV writers. All numbers are written with fixed formatting so identical
/// inputs produce byte-identical files.
void write_plans_csv(const std::string& path, const std::vector<FlightPlan>& plans);
void write_timelines_csv(const std::string& path, const ScheduleBook& book);
void write_summary_csv(const std::string& path, const ExperimentReport& report);
void write_per_uav_csv(const std::string& path, const ExperimentReport& report);

/// Run manifest (schema "unet-manifest/1"): tool version, timestamp, input
/// digests, the effective config, and the list of produced files.
void write_manifest(const std::string& path, const std::string& command,
                    const NetworkSource& network_source, const std::string& config_json,
                    const std::vector<std::string>& outputs);

/// Parse a requests CSV (header "k,L_i,L_f,ETA") in FCFS order.
std::vector<UavRequest> read_requests_csv(const std::string& path);

struct SweepOutputs {
  std::string summary_csv;
  std::string per_uav_csv;
  std::string manifest;
};

/// Run a full sweep and write summary.csv, per_uav.csv and manifest.json
/// into out_dir (created if missing).
SweepOutputs run_sweep(const SweepSpec& spec, const std::string& out_dir);

}  // namespace unet

#endif  // UNET_REPORT_HPP
