#include "jamsim/scenario.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace jamsim {
namespace {

using nlohmann::json;

double json_num(const json& j, const char* key, double fallback, bool required = false) {
  if (!j.contains(key)) {
    if (required) throw ScenarioError(std::string("scenario missing field: ") + key);
    return fallback;
  }
  if (!j.at(key).is_number()) throw ScenarioError(std::string("field must be numeric: ") + key);
  return j.at(key).get<double>();
}

cd parse_gain(const json& j) {
  if (j.is_number()) return cd{j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return cd{j[0].get<double>(), j[1].get<double>()};
  throw ScenarioError("path gain must be a number or [re, im]");
}

std::array<double, 3> parse_vec3(const json& j, const char* what) {
  if (!j.is_array() || j.size() != 3) throw ScenarioError(std::string(what) + " must be [x, y, z]");
  return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

ChannelModel parse_paths(const json& arr, const char* what) {
  if (!arr.is_array() || arr.empty())
    throw ScenarioError(std::string(what) + " must be a non-empty array of paths");
  ChannelModel ch;
  for (const auto& p : arr) {
    Path path;
    path.amplitude = parse_gain(p.at("gain"));
    path.delay_s = json_num(p, "delay_s", 0.0, true);
    path.doppler_hz = json_num(p, "doppler_hz", 0.0);
    ch.paths.push_back(path);
  }
  return ch;
}

void parse_jammer(const json& j, const OfdmConfig& ofdm, ScenarioConfig& sc) {
  JammerConfig jam;
  jam.gain = json_num(j, "gain", 1.0);
  if (j.contains("phantoms")) {
    for (const auto& p : j.at("phantoms")) {
      PhantomTarget ph;
      ph.amplitude = parse_gain(p.at("gain"));
      ph.delay_s = json_num(p, "delay_s", 0.0, true);
      ph.doppler_hz = json_num(p, "doppler_hz", 0.0);
      jam.phantoms.push_back(ph);
    }
  }
  if (j.contains("trajectory")) {
    const auto& t = j.at("trajectory");
    PhantomTrajectory traj;
    traj.amplitude = parse_gain(t.at("gain"));
    traj.initial_delay_s = json_num(t, "initial_delay_s", 0.0, true);
    traj.delay_rate = json_num(t, "delay_rate", 0.0);
    traj.snapshot_period_s = json_num(t, "snapshot_period_s", sc.snapshot_period_s);
    jam.trajectory = traj;
  }
  if (j.contains("timing")) {
    const auto& t = j.at("timing");
    const std::string mode = t.value("mode", "deterministic");
    if (mode == "deterministic") {
      jam.timing.mode = JammerTiming::Mode::Deterministic;
      jam.timing.delta_tau_s = json_num(t, "delta_tau_s", 0.0, true);
    } else if (mode == "random") {
      jam.timing.mode = JammerTiming::Mode::Random;
      jam.timing.center_s = json_num(t, "center_s", 0.0);
      jam.timing.epsilon_max_s = json_num(t, "epsilon_max_s", 0.0, true);
      jam.timing.seed = static_cast<uint64_t>(json_num(t, "seed", 0.0));
    } else {
      throw ScenarioError("jammer timing mode must be deterministic or random");
    }
  }
  jam.validate(ofdm);
  sc.jammer = jam;
}

}  // namespace

void ScenarioConfig::validate() const {
  ofdm.validate();
  if (snapshots < 1) throw ScenarioError("snapshot count must be >= 1");
  if (snapshot_period_s <= 0.0) throw ScenarioError("snapshot period must be positive");
  if (guard_len < 0) throw ScenarioError("guard length must be nonnegative");
  if (noise.power_mw < 0.0) throw ScenarioError("noise power must be nonnegative");
  if (use_geometry) {
    geometry.validate(ofdm);
    if (jammer && !geometry.has_jammer)
      throw ScenarioError("jammer configured but geometry has no jammer position");
  } else {
    stx_paths.validate(ofdm);
    if (jammer) jammer_paths.validate(ofdm);
  }
  if (jammer) jammer->validate(ofdm);
  cfar.validate();
  tracker.validate();
}

ResolvedLinks resolve_links(const ScenarioConfig& sc) {
  ResolvedLinks links;
  if (sc.use_geometry) {
    links.stx = geometry_to_paths(sc.ofdm, sc.geometry, Link::StxToSrx);
    if (sc.jammer) links.jammer = geometry_to_paths(sc.ofdm, sc.geometry, Link::JammerToSrx);
  } else {
    links.stx = sc.stx_paths;
    if (sc.jammer) links.jammer = sc.jammer_paths;
  }
  return links;
}

ScenarioConfig parse_scenario(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ScenarioError(std::string("scenario is not valid JSON: ") + e.what());
  }

  ScenarioConfig sc;
  try {
    if (root.contains("ofdm")) {
      const auto& o = root.at("ofdm");
      sc.ofdm.num_subcarriers = static_cast<int>(json_num(o, "num_subcarriers", 1024));
      sc.ofdm.cp_len = static_cast<int>(json_num(o, "cp_len", 64));
      sc.ofdm.bandwidth_hz = json_num(o, "bandwidth_hz", 80e6);
      sc.ofdm.num_pulses = static_cast<int>(json_num(o, "num_pulses", 128));
      sc.ofdm.pri_s = json_num(o, "pri_s", 2e-3);
      sc.ofdm.carrier_freq_hz = json_num(o, "carrier_freq_hz", 5e9);
    }
    sc.master_seed = static_cast<uint64_t>(json_num(root, "seed", 1));
    sc.snapshots = static_cast<int>(json_num(root, "snapshots", 1));
    sc.snapshot_period_s = json_num(root, "snapshot_period_s", 0.256);
    sc.guard_len = static_cast<int>(json_num(root, "guard_len", 256));
    if (root.contains("intra_pulse_doppler"))
      sc.intra_pulse_doppler = root.at("intra_pulse_doppler").get<bool>();
    if (root.contains("window")) {
      const std::string w = root.at("window").get<std::string>();
      if (w == "rectangular") sc.window = WindowKind::Rectangular;
      else if (w == "hann") sc.window = WindowKind::Hann;
      else throw ScenarioError("window must be rectangular or hann");
    }
    if (root.contains("sltf_file")) sc.sltf_file = root.at("sltf_file").get<std::string>();

    if (root.contains("noise")) {
      const auto& n = root.at("noise");
      if (n.contains("power_mw")) sc.noise.power_mw = json_num(n, "power_mw", 0.0);
      else if (n.contains("power_dbm"))
        sc.noise.power_mw = std::pow(10.0, json_num(n, "power_dbm", 0.0, true) / 10.0);
      else throw ScenarioError("noise block needs power_mw or power_dbm");
      sc.noise.seed = n.contains("seed") ? static_cast<uint64_t>(json_num(n, "seed", 0.0))
                                         : sc.master_seed;
    } else {
      sc.noise.seed = sc.master_seed;
    }

    if (root.contains("geometry")) {
      sc.use_geometry = true;
      const auto& g = root.at("geometry");
      sc.geometry.stx_pos_m = parse_vec3(g.at("stx_pos"), "stx_pos");
      sc.geometry.srx_pos_m = parse_vec3(g.at("srx_pos"), "srx_pos");
      if (g.contains("jammer_pos")) {
        sc.geometry.jammer_pos_m = parse_vec3(g.at("jammer_pos"), "jammer_pos");
        sc.geometry.has_jammer = true;
      }
      sc.geometry.stx_power_dbm = json_num(g, "stx_power_dbm", 23.0);
      sc.geometry.jammer_power_dbm = json_num(g, "jammer_power_dbm", 30.0);
      if (g.contains("targets")) {
        for (const auto& t : g.at("targets")) {
          GeometryTarget tgt;
          tgt.position_m = parse_vec3(t.at("pos"), "target pos");
          if (t.contains("vel")) tgt.velocity_mps = parse_vec3(t.at("vel"), "target vel");
          tgt.rcs_m2 = json_num(t, "rcs_m2", 1.0);
          sc.geometry.targets.push_back(tgt);
        }
      }
    } else if (root.contains("paths")) {
      const auto& p = root.at("paths");
      sc.stx_paths = parse_paths(p.at("stx"), "paths.stx");
      if (p.contains("jammer")) sc.jammer_paths = parse_paths(p.at("jammer"), "paths.jammer");
    } else {
      throw ScenarioError("scenario needs a geometry block or explicit paths");
    }

    if (root.contains("jammer")) parse_jammer(root.at("jammer"), sc.ofdm, sc);
    if (sc.jammer && !sc.use_geometry && sc.jammer_paths.paths.empty())
      throw ScenarioError("jammer configured but paths.jammer missing");

    if (root.contains("cfar")) {
      const auto& c = root.at("cfar");
      sc.cfar.pfa = json_num(c, "pfa", sc.cfar.pfa);
      sc.cfar.guard = static_cast<int>(json_num(c, "guard", sc.cfar.guard));
      sc.cfar.train = static_cast<int>(json_num(c, "train", sc.cfar.train));
      sc.cfar.zero_doppler_exclusion =
          static_cast<int>(json_num(c, "zero_doppler_exclusion", sc.cfar.zero_doppler_exclusion));
      sc.cfar.max_range_gate =
          static_cast<int>(json_num(c, "max_range_gate", sc.cfar.max_range_gate));
    }
    if (root.contains("tracker")) {
      const auto& t = root.at("tracker");
      sc.tracker.gate_radius = json_num(t, "gate_radius", sc.tracker.gate_radius);
      sc.tracker.confirm_hits = static_cast<int>(json_num(t, "confirm_hits", sc.tracker.confirm_hits));
      sc.tracker.confirm_window =
          static_cast<int>(json_num(t, "confirm_window", sc.tracker.confirm_window));
      sc.tracker.miss_limit = static_cast<int>(json_num(t, "miss_limit", sc.tracker.miss_limit));
      sc.tracker.max_init_range_gate =
          static_cast<int>(json_num(t, "max_init_range_gate", sc.tracker.max_init_range_gate));
    }
  } catch (const json::exception& e) {
    throw ScenarioError(std::string("bad scenario structure: ") + e.what());
  }

  sc.validate();
  return sc;
}

ScenarioConfig load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open scenario file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_scenario(ss.str());
}

std::string scenario_summary_json(const ScenarioConfig& sc) {
  json j;
  j["ofdm"] = {{"num_subcarriers", sc.ofdm.num_subcarriers},
               {"cp_len", sc.ofdm.cp_len},
               {"bandwidth_hz", sc.ofdm.bandwidth_hz},
               {"num_pulses", sc.ofdm.num_pulses},
               {"pri_s", sc.ofdm.pri_s},
               {"carrier_freq_hz", sc.ofdm.carrier_freq_hz}};
  j["seed"] = sc.master_seed;
  j["snapshots"] = sc.snapshots;
  j["noise_power_mw"] = sc.noise.power_mw;
  j["jammer_present"] = sc.jammer.has_value();
  if (sc.jammer) j["jammer_gain"] = sc.jammer->gain;
  return j.dump(2);
}

}  // namespace jamsim
