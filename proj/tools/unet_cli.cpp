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

// Command-line front end for the unet shared library. Talks to the library
// exclusively through the C API in unet.h.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "unet.h"

namespace {

using json = nlohmann::ordered_json;

struct NetworkDeleter {
  void operator()(unet_network* n) const { unet_network_free(n); }
};
struct SchedulerDeleter {
  void operator()(unet_scheduler* s) const { unet_scheduler_free(s); }
};
using NetworkHandle = std::unique_ptr<unet_network, NetworkDeleter>;
using SchedulerHandle = std::unique_ptr<unet_scheduler, SchedulerDeleter>;

[[noreturn]] void fail(const std::string& context) {
  std::cerr << "error: " << context;
  const std::string detail = unet_last_error();
  if (!detail.empty()) std::cerr << ": " << detail;
  std::cerr << "\n";
  std::exit(1);
}

NetworkHandle open_network(const std::string& source) {
  unet_network* raw = nullptr;
  unet_status status;
  if (source.rfind("builtin:", 0) == 0)
    status = unet_network_builtin(source.substr(8).c_str(), &raw);
  else
    status = unet_network_load(source.c_str(), &raw);
  if (status != UNET_OK) fail("cannot open network " + source);
  return NetworkHandle(raw);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) values.push_back(std::stod(item));
  }
  return values;
}

int cmd_validate(const std::string& network_path, const unet_params& params) {
  NetworkHandle network = open_network(network_path);
  std::cout << "network: " << network_path << "  nodes=" << unet_network_node_count(network.get())
            << " edges=" << unet_network_edge_count(network.get())
            << " terminals=" << unet_network_terminal_count(network.get()) << "\n";

  char* report = nullptr;
  int ok = 0;
  if (unet_geometry_check(network.get(), &params, &report, &ok) != UNET_OK)
    fail("geometry check failed");
  std::cout << report;
  unet_string_free(report);
  return ok ? 0 : 1;
}

int cmd_schedule(const std::string& network_path, const std::string& requests_path,
                 const unet_params& params, double t_min, const std::string& out_dir) {
  NetworkHandle network = open_network(network_path);
  unet_scheduler* raw = nullptr;
  if (unet_scheduler_new(network.get(), &params, t_min, &raw) != UNET_OK)
    fail("cannot create scheduler");
  SchedulerHandle scheduler(raw);

  // Requests file: header k,L_i,L_f,ETA then one row per request, FCFS order.
  std::ifstream in(requests_path);
  if (!in) fail("cannot open requests file " + requests_path);
  std::string line;
  if (!std::getline(in, line)) fail(requests_path + " is empty");
  if (line.size() && line.back() == '\r') line.pop_back();
  if (line != "k,L_i,L_f,ETA") fail(requests_path + ": expected header k,L_i,L_f,ETA");
  int line_no = 1;
  int scheduled = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.size() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    int k = 0, origin = 0, destination = 0;
    double eta = 0.0;
    if (std::sscanf(line.c_str(), "%d,%d,%d,%lf", &k, &origin, &destination, &eta) != 4)
      fail(requests_path + ":" + std::to_string(line_no) + ": malformed row");
    unet_plan plan;
    if (unet_scheduler_schedule(scheduler.get(), k, origin, destination, eta, &plan) != UNET_OK)
      fail(requests_path + ":" + std::to_string(line_no) + ": cannot schedule request");
    ++scheduled;
  }

  int violations = -1;
  if (unet_scheduler_verify(scheduler.get(), &violations) != UNET_OK) fail("verification failed");

  std::filesystem::create_directories(out_dir);
  const std::string plans_csv = (std::filesystem::path(out_dir) / "plans.csv").string();
  const std::string timelines_csv = (std::filesystem::path(out_dir) / "timelines.csv").string();
  if (unet_scheduler_export_plans_csv(scheduler.get(), plans_csv.c_str()) != UNET_OK)
    fail("cannot write " + plans_csv);
  if (unet_scheduler_export_timelines_csv(scheduler.get(), timelines_csv.c_str()) != UNET_OK)
    fail("cannot write " + timelines_csv);

  std::cout << "scheduled " << scheduled << " request(s), t_min=" << t_min
            << ", timeline violations=" << violations << "\n"
            << "wrote " << plans_csv << " and " << timelines_csv << "\n";
  return violations == 0 ? 0 : 1;
}

int cmd_sweep(const json& config, const std::string& out_dir) {
  const std::string config_text = config.dump(2);
  if (unet_sweep_run(config_text.c_str(), out_dir.c_str()) != UNET_OK) fail("sweep failed");
  std::cout << "wrote " << out_dir << "/summary.csv, " << out_dir << "/per_uav.csv and "
            << out_dir << "/manifest.json\n";
  return 0;
}

int cmd_bundle(const std::string& name, const std::string& out_path) {
  unet_network* raw = nullptr;
  if (unet_network_builtin(name.c_str(), &raw) != UNET_OK) fail("unknown builtin network " + name);
  NetworkHandle network(raw);
  if (unet_network_save(network.get(), out_path.c_str()) != UNET_OK) fail("cannot write " + out_path);
  std::cout << "wrote " << out_path << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"unet: conflict-free UAV route-network scheduling"};
  app.set_version_flag("--version", std::string("unet ") + unet_version());
  app.require_subcommand(1);

  unet_params params = unet_params_default();
  std::string network_path = "builtin:unet4";

  auto add_geometry_flags = [&params](CLI::App* cmd) {
    cmd->add_option("--d-sep", params.d_sep, "minimum vehicle separation [m]");
    cmd->add_option("--phi-star", params.phi_star, "maximum turn angle [rad]");
    cmd->add_option("--speed", params.speed, "cruise speed [m/s]");
    cmd->add_option("--d-star", params.d_star, "node boundary circle radius [m]");
    cmd->add_option("--lane-offset", params.lane_offset, "lane shift at crossings [m]");
  };

  // validate
  auto* validate = app.add_subcommand("validate", "load a network and run the per-node geometry check");
  validate->add_option("--network", network_path, "network file or builtin:<name>")->required();
  add_geometry_flags(validate);

  // schedule
  auto* schedule = app.add_subcommand("schedule", "schedule a requests file FCFS and export plan CSVs");
  std::string requests_path;
  std::string out_dir = "out";
  double t_min = 5.0;
  schedule->add_option("--network", network_path, "network file or builtin:<name>")->required();
  schedule->add_option("--requests", requests_path, "CSV with header k,L_i,L_f,ETA")->required();
  schedule->add_option("--t-min", t_min, "arrival-time separation [s]");
  schedule->add_option("--out-dir", out_dir, "output directory");
  add_geometry_flags(schedule);

  // sweep
  auto* sweep = app.add_subcommand("sweep", "run the Monte Carlo delay experiment");
  std::string config_path, manifest_path;
  std::string p_a_list, t_min_list;
  int trials = -1, n_uav = -1;
  std::uint64_t seed = 0;
  bool seed_set = false;
  sweep->add_option("--network", network_path, "network file or builtin:<name>");
  sweep->add_option("--config", config_path, "unet-config/1 JSON file");
  sweep->add_option("--manifest", manifest_path, "rerun the config embedded in a prior run manifest");
  sweep->add_option("--p-a", p_a_list, "comma list of arrival probabilities");
  sweep->add_option("--t-min", t_min_list, "comma list of t_min values [s]");
  sweep->add_option("--trials", trials, "trials per (t_min, p_a) cell");
  sweep->add_option("--n-uav", n_uav, "vehicles per trial");
  sweep->add_option("--seed", seed, "master seed")->each([&seed_set](const std::string&) { seed_set = true; });
  sweep->add_option("--out-dir", out_dir, "output directory");

  // bundle
  auto* bundle = app.add_subcommand("bundle", "write a builtin network to a file");
  std::string builtin_name = "snet1";
  std::string bundle_out;
  bundle->add_option("--name", builtin_name, "builtin network name (snet1, unet4)");
  bundle->add_option("--out", bundle_out, "output path")->required();

  CLI11_PARSE(app, argc, argv);

  if (validate->parsed()) return cmd_validate(network_path, params);
  if (schedule->parsed()) return cmd_schedule(network_path, requests_path, params, t_min, out_dir);
  if (bundle->parsed()) return cmd_bundle(builtin_name, bundle_out);

  if (sweep->parsed()) {
    // Precedence: builtin defaults < config file (or manifest) < flags.
    json config;
    if (!manifest_path.empty()) {
      json manifest;
      try {
        manifest = json::parse(read_file(manifest_path));
      } catch (const json::exception& ex) {
        fail(manifest_path + ": not valid JSON: " + std::string(ex.what()));
      }
      if (!manifest.contains("config")) fail(manifest_path + " carries no config");
      config = manifest["config"];
    } else if (!config_path.empty()) {
      try {
        config = json::parse(read_file(config_path));
      } catch (const json::exception& ex) {
        fail(config_path + ": not valid JSON: " + std::string(ex.what()));
      }
    } else {
      config = json::object();
      config["schema"] = "unet-config/1";
    }
    if (sweep->count("--network")) config["network"] = network_path;
    if (!config.contains("network")) config["network"] = network_path;
    if (!p_a_list.empty()) config["p_a"] = parse_double_list(p_a_list);
    if (!t_min_list.empty()) config["t_min"] = parse_double_list(t_min_list);
    if (trials > 0) config["trials"] = trials;
    if (n_uav > 0) config["n_uav"] = n_uav;
    if (seed_set) config["seed"] = seed;
    return cmd_sweep(config, out_dir);
  }
  return 0;
}
