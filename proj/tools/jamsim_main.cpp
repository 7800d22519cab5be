#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "jamsim/export_io.hpp"
#include "jamsim/simulate.hpp"

namespace {

using namespace jamsim;

int cmd_simulate(const std::string& scenario_path, int snapshots_override,
                 long long seed_override, bool no_noise, const std::string& out_dir) {
  ScenarioConfig sc = load_scenario(scenario_path);
  if (snapshots_override > 0) sc.snapshots = snapshots_override;
  if (seed_override >= 0) {
    sc.master_seed = static_cast<uint64_t>(seed_override);
    sc.noise.seed = sc.master_seed;
  }
  if (no_noise) sc.noise.power_mw = 0.0;
  sc.validate();

  const CampaignResult result = run_campaign(sc);
  write_campaign_outputs(sc, result, out_dir);

  for (const auto& snap : result.snapshots) {
    std::printf("snapshot %d: captured_by=%s lag=%ld delta_tau=%.4e s detections=%zu\n",
                snap.snapshot, snap.captured == CapturedBy::Jammer ? "jammer" : "stx",
                snap.corr_lag, snap.delta_tau_s, snap.detections.size());
  }
  int confirmed = 0;
  for (const auto& t : result.tracks)
    if (t.status == TrackStatus::Confirmed) ++confirmed;
  std::printf("tracks: %zu total, %d confirmed\n", result.tracks.size(), confirmed);
  std::printf("outputs written to %s\n", out_dir.c_str());
  return 0;
}

int cmd_detect(const std::string& rdm_path, double pfa, int guard, int train) {
  const Rdm rdm = read_rdm_f32le(rdm_path);
  CfarConfig cfg;
  cfg.pfa = pfa;
  cfg.guard = guard;
  cfg.train = train;
  cfg.validate();
  const auto dets = cfar_2d(rdm, cfg);
  std::printf("range_gate,doppler_gate,power,threshold,range_m,speed_mps\n");
  for (const auto& d : dets)
    std::printf("%d,%d,%.9e,%.9e,%.6f,%.6f\n", d.range_gate, d.doppler_gate, d.power,
                d.threshold, d.range_m, d.speed_mps);
  return 0;
}

int cmd_track(const std::string& detections_dir) {
  namespace fs = std::filesystem;
  std::vector<std::string> files;
  std::error_code ec;
  for (const auto& entry : fs::directory_iterator(detections_dir, ec)) {
    const std::string name = entry.path().filename().string();
    if (name.rfind("detections_", 0) == 0 && name.size() > 4 &&
        name.substr(name.size() - 4) == ".csv")
      files.push_back(entry.path().string());
  }
  if (ec) throw IoError("cannot read directory: " + detections_dir);
  if (files.empty()) throw IoError("no detections_*.csv in " + detections_dir);
  std::sort(files.begin(), files.end());

  TrackerConfig cfg;
  std::vector<Track> tracks;
  int k = 0;
  for (const auto& f : files) {
    int snapshot = -1;
    const auto dets = read_detections_csv(f, &snapshot);
    tracks = associate_and_track(std::move(tracks), dets, snapshot >= 0 ? snapshot : k, cfg);
    ++k;
  }

  std::printf("track_id,status,snapshot,range_gate,doppler_gate,range_rate,doppler_rate\n");
  for (const auto& t : tracks) {
    const char* status = t.status == TrackStatus::Confirmed   ? "confirmed"
                         : t.status == TrackStatus::Tentative ? "tentative"
                                                              : "dead";
    const double rr = track_range_rate_lsq(t);
    const double dr = track_doppler_rate_lsq(t);
    for (const auto& p : t.points)
      std::printf("%d,%s,%d,%.3f,%.3f,%.6f,%.6f\n", t.id, status, p.snapshot,
                  p.range_gate, p.doppler_gate, rr, dr);
  }
  return 0;
}

int cmd_render(const std::string& rdm_path, double dynamic_range) {
  const Rdm rdm = read_rdm_f32le(rdm_path);
  std::filesystem::path out(rdm_path);
  out.replace_extension(".pgm");
  write_rdm_pgm(rdm, out.string(), dynamic_range);
  std::printf("wrote %s\n", out.string().c_str());
  return 0;
}

int cmd_sweep(const std::string& scenario_path, const std::string& param_name,
              const std::vector<double>& values) {
  const ScenarioConfig sc = load_scenario(scenario_path);
  const SweepParam param = sweep_param_from_name(param_name);
  const auto rows = sweep(sc, param, values);

  std::printf(
      "param,value,captured_by,true_row_p2e_db,jam_row_p2e_db,phantom_detected,"
      "jam_los_detected,phantom_track_confirmed,true_target_gate,true_target_shift,"
      "detection_count\n");
  for (const auto& r : rows) {
    const std::string gate = r.true_target_gate ? std::to_string(*r.true_target_gate) : "";
    const std::string shift =
        r.true_target_shift ? std::to_string(*r.true_target_shift) : "";
    std::printf("%s,%.9g,%s,%.3f,%.3f,%d,%d,%d,%s,%s,%d\n", param_name.c_str(), r.value,
                r.captured == CapturedBy::Jammer ? "jammer" : "stx", r.true_row_p2e_db,
                r.jam_row_p2e_db, r.phantom_detected ? 1 : 0, r.jam_los_detected ? 1 : 0,
                r.phantom_track_confirmed ? 1 : 0, gate.c_str(), shift.c_str(),
                r.detection_count);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bistatic OFDM sensing simulator with a deceptive jammer"};
  app.require_subcommand(1);

  std::string scenario_path, rdm_path, detections_dir, out_dir = "out", param_name;
  int snapshots_override = 0, guard = 1, train = 1;
  long long seed_override = -1;
  bool no_noise = false;
  double pfa = 1e-3, dynamic_range = 60.0;
  std::vector<double> values;

  auto* sim = app.add_subcommand("simulate", "Run a scenario and write artifacts");
  sim->add_option("scenario", scenario_path, "Scenario JSON file")->required();
  sim->add_option("--snapshots", snapshots_override, "Override snapshot count");
  sim->add_option("--seed", seed_override, "Override master seed");
  sim->add_flag("--no-noise", no_noise, "Force noiseless run");
  sim->add_option("--out", out_dir, "Output directory (default: out)");

  auto* det = app.add_subcommand("detect", "Run CFAR on an exported range-Doppler map");
  det->add_option("rdm-file", rdm_path, "f32le range-Doppler file")->required();
  det->add_option("--pfa", pfa, "False-alarm probability");
  det->add_option("--guard", guard, "Guard cells per dimension");
  det->add_option("--train", train, "Training cells per dimension");

  auto* trk = app.add_subcommand("track", "Track detections from a directory");
  trk->add_option("detections-dir", detections_dir, "Directory of detections_*.csv")
      ->required();

  auto* ren = app.add_subcommand("render", "Render an exported map to PGM");
  ren->add_option("rdm-file", rdm_path, "f32le range-Doppler file")->required();
  ren->add_option("--dynamic-range", dynamic_range, "Dynamic range in dB (default 60)");

  auto* swp = app.add_subcommand("sweep", "Re-run a scenario across parameter values");
  swp->add_option("scenario", scenario_path, "Scenario JSON file")->required();
  swp->add_option("--param", param_name, "delta_tau | jammer_gain | phantom_speed")
      ->required();
  swp->add_option("--values", values, "Comma-separated values")
      ->required()
      ->delimiter(',');

  CLI11_PARSE(app, argc, argv);

  try {
    if (sim->parsed())
      return cmd_simulate(scenario_path, snapshots_override, seed_override, no_noise,
                          out_dir);
    if (det->parsed()) return cmd_detect(rdm_path, pfa, guard, train);
    if (trk->parsed()) return cmd_track(detections_dir);
    if (ren->parsed()) return cmd_render(rdm_path, dynamic_range);
    if (swp->parsed()) return cmd_sweep(scenario_path, param_name, values);
  } catch (const ScenarioError& e) {
    std::cerr << "scenario error: " << e.what() << '\n';
    return 2;
  } catch (const IoError& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
