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

#include "unet/report.hpp"

#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>
#include <openssl/sha.h>

#include "unet/error.hpp"
#include "unet/version.hpp"

namespace unet {

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kConfigSchema = "unet-config/1";
constexpr const char* kManifestSchema = "unet-manifest/1";

std::string fmt(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", value);
  return buf;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::io, "cannot write " + path);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::io, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[SHA256_DIGEST_LENGTH];
  SHA256(reinterpret_cast<const unsigned char*>(bytes.data()), bytes.size(), digest);
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(2 * SHA256_DIGEST_LENGTH);
  for (unsigned char byte : digest) {
    out.push_back(hex[byte >> 4]);
    out.push_back(hex[byte & 0xf]);
  }
  return out;
}

std::string sha256_file(const std::string& path) { return sha256_hex(read_file(path)); }

RouteNetwork NetworkSource::load() const {
  if (source.rfind("builtin:", 0) == 0) return build_builtin(source.substr(8));
  return load_network(source);
}

std::string NetworkSource::digest() const {
  if (source.rfind("builtin:", 0) == 0) return sha256_hex(serialize_network(load()));
  return sha256_file(source);
}

SweepSpec parse_sweep_spec(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& ex) {
    throw Error(ErrorCode::schema, std::string("config is not valid JSON: ") + ex.what());
  }
  if (!doc.is_object()) throw Error(ErrorCode::schema, "config must be a JSON object");
  if (!doc.contains("schema") || doc["schema"] != kConfigSchema)
    throw Error(ErrorCode::schema, std::string("config schema must be ") + kConfigSchema);

  SweepSpec spec;
  try {
    if (doc.contains("network")) spec.network = doc["network"].get<std::string>();
    SweepConfig& s = spec.sweep;
    if (doc.contains("p_a")) s.p_a_values = doc["p_a"].get<std::vector<double>>();
    if (doc.contains("t_min")) s.t_min_values = doc["t_min"].get<std::vector<double>>();
    if (doc.contains("trials")) s.trials = doc["trials"].get<int>();
    if (doc.contains("n_uav")) s.n_uav = doc["n_uav"].get<int>();
    if (doc.contains("tick_seconds")) s.tick_seconds = doc["tick_seconds"].get<double>();
    if (doc.contains("speed")) s.speed = doc["speed"].get<double>();
    if (doc.contains("d_star")) s.d_star = doc["d_star"].get<double>();
    if (doc.contains("seed")) s.seed = doc["seed"].get<std::uint64_t>();
  } catch (const json::exception& ex) {
    throw Error(ErrorCode::schema, std::string("config field has wrong type: ") + ex.what());
  }
  spec.sweep.validate();
  return spec;
}

std::string serialize_sweep_spec(const SweepSpec& spec) {
  json doc;
  doc["schema"] = kConfigSchema;
  doc["network"] = spec.network;
  doc["seed"] = spec.sweep.seed;
  doc["p_a"] = spec.sweep.p_a_values;
  doc["t_min"] = spec.sweep.t_min_values;
  doc["trials"] = spec.sweep.trials;
  doc["n_uav"] = spec.sweep.n_uav;
  doc["tick_seconds"] = spec.sweep.tick_seconds;
  doc["speed"] = spec.sweep.speed;
  doc["d_star"] = spec.sweep.d_star;
  return doc.dump(2) + "\n";
}

SweepSpec sweep_spec_from_manifest(const std::string& manifest_path) {
  json doc;
  try {
    doc = json::parse(read_file(manifest_path));
  } catch (const json::exception& ex) {
    throw Error(ErrorCode::schema, manifest_path + ": not valid JSON: " + ex.what());
  }
  if (!doc.is_object() || !doc.contains("schema") || doc["schema"] != kManifestSchema)
    throw Error(ErrorCode::schema, manifest_path + ": not a " + std::string(kManifestSchema) + " manifest");
  if (!doc.contains("config"))
    throw Error(ErrorCode::schema, manifest_path + ": manifest carries no config");
  return parse_sweep_spec(doc["config"].dump());
}

void write_plans_csv(const std::string& path, const std::vector<FlightPlan>& plans) {
  std::ofstream out = open_out(path);
  out << "k,L_i,L_f,ETA,STA,delay,route\n";
  for (const FlightPlan& p : plans) {
    out << p.request.k << ',' << p.request.origin << ',' << p.request.destination << ','
        << fmt(p.request.eta) << ',' << fmt(p.sta) << ',' << fmt(p.delay()) << ',';
    for (std::size_t i = 0; i < p.route.nodes.size(); ++i) {
      if (i) out << '-';
      out << p.route.nodes[i];
    }
    out << '\n';
  }
}

void write_timelines_csv(const std::string& path, const ScheduleBook& book) {
  std::ofstream out = open_out(path);
  out << "node,neighbor,direction,time,k\n";
  for (const auto& [checkpoint, line] : book.timelines()) {
    for (const auto& [time, k] : line) {
      out << checkpoint.node << ',' << checkpoint.crossing.neighbor << ','
          << (checkpoint.crossing.inbound ? "in" : "out") << ',' << fmt(time) << ',' << k << '\n';
    }
  }
}

void write_summary_csv(const std::string& path, const ExperimentReport& report) {
  std::ofstream out = open_out(path);
  out << "t_min,p_a,trial,seed,max_delay,mean_delay\n";
  for (const TrialCell& cell : report.cells) {
    out << fmt(cell.t_min) << ',' << fmt(cell.p_a) << ',' << cell.trial << ',' << cell.seed << ','
        << fmt(cell.result.max_delay) << ',' << fmt(cell.result.mean_delay) << '\n';
  }
}

void write_per_uav_csv(const std::string& path, const ExperimentReport& report) {
  std::ofstream out = open_out(path);
  out << "t_min,p_a,trial,k,L_i,L_f,ETA,STA,delay,route_length\n";
  for (const TrialCell& cell : report.cells) {
    for (const UavRecord& r : cell.result.records) {
      out << fmt(cell.t_min) << ',' << fmt(cell.p_a) << ',' << cell.trial << ',' << r.k << ','
          << r.origin << ',' << r.destination << ',' << fmt(r.eta) << ',' << fmt(r.sta) << ','
          << fmt(r.delay()) << ',' << fmt(r.route_length) << '\n';
    }
  }
}

void write_manifest(const std::string& path, const std::string& command,
                    const NetworkSource& network_source, const std::string& config_json,
                    const std::vector<std::string>& outputs) {
  json doc;
  doc["schema"] = kManifestSchema;
  doc["tool"] = "unet";
  doc["version"] = UNET_VERSION_STRING;
  doc["created_utc"] = utc_timestamp();
  doc["command"] = command;
  doc["network"] = {{"source", network_source.source}, {"sha256", network_source.digest()}};
  if (!config_json.empty()) {
    try {
      doc["config"] = json::parse(config_json);
    } catch (const json::exception& ex) {
      throw Error(ErrorCode::internal, std::string("manifest config is not JSON: ") + ex.what());
    }
  }
  doc["outputs"] = outputs;
  std::ofstream out = open_out(path);
  out << doc.dump(2) << "\n";
}

std::vector<UavRequest> read_requests_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::io, "cannot open requests file " + path);
  std::string line;
  if (!std::getline(in, line)) throw Error(ErrorCode::schema, path + ": empty requests file");
  if (line.size() && line.back() == '\r') line.pop_back();
  if (line != "k,L_i,L_f,ETA")
    throw Error(ErrorCode::schema, path + ": expected header \"k,L_i,L_f,ETA\", got \"" + line + "\"");

  std::vector<UavRequest> requests;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.size() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    UavRequest r;
    char extra;
    if (std::sscanf(line.c_str(), "%d,%d,%d,%lf%c", &r.k, &r.origin, &r.destination, &r.eta, &extra) != 4)
      throw Error(ErrorCode::schema, path + ":" + std::to_string(line_no) + ": malformed row \"" + line + "\"");
    requests.push_back(r);
  }
  return requests;
}

SweepOutputs run_sweep(const SweepSpec& spec, const std::string& out_dir) {
  spec.sweep.validate();
  const NetworkSource source{spec.network};
  const RouteNetwork network = source.load();
  const ExperimentReport report = run_experiment(spec.sweep, network);

  std::filesystem::create_directories(out_dir);
  SweepOutputs outputs;
  outputs.summary_csv = (std::filesystem::path(out_dir) / "summary.csv").string();
  outputs.per_uav_csv = (std::filesystem::path(out_dir) / "per_uav.csv").string();
  outputs.manifest = (std::filesystem::path(out_dir) / "manifest.json").string();
  write_summary_csv(outputs.summary_csv, report);
  write_per_uav_csv(outputs.per_uav_csv, report);
  write_manifest(outputs.manifest, "sweep", source, serialize_sweep_spec(spec),
                 {"summary.csv", "per_uav.csv"});
  return outputs;
}

}  // namespace unet
