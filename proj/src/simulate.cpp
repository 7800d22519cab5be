#include "jamsim/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace jamsim {
namespace {

// The stx path treated as "the true target" by sweep metrics: first mover in
// the list.
const Path* moving_path(const ChannelModel& ch) {
  for (const auto& p : ch.paths)
    if (p.doppler_hz != 0.0) return &p;
  return nullptr;
}

int doppler_row(const OfdmConfig& cfg, double doppler_hz) {
  return static_cast<int>(std::lround(cfg.num_pulses * cfg.pri_s * doppler_hz));
}

bool has_detection_near(const std::vector<Detection>& dets, int gate, int row,
                        int tol = 1) {
  for (const auto& d : dets)
    if (std::abs(d.range_gate - gate) <= tol && std::abs(d.doppler_gate - row) <= tol)
      return true;
  return false;
}

}  // namespace

SnapshotResult run_snapshot(const ScenarioConfig& sc, int snapshot_index) {
  const OfdmConfig& cfg = sc.ofdm;
  const double T = cfg.sample_interval_s();

  const SltfGrid grid = sc.sltf_file.empty() ? make_sltf_grid(cfg, sc.master_seed)
                                             : load_sltf_sequence(cfg, sc.sltf_file);
  const ResolvedLinks links = resolve_links(sc);
  const double tau0 = links.stx.los_delay_s();

  std::vector<IqPulse> stx_pulses;
  stx_pulses.reserve(cfg.num_pulses);
  for (int m = 0; m < cfg.num_pulses; ++m) stx_pulses.push_back(modulate_pulse(cfg, grid, m));

  const bool has_jam = sc.jammer.has_value() && links.jammer.has_value();
  double t_j = 0.0;
  double tau_j0 = 0.0;
  ChannelModel jam_ch;
  std::vector<IqPulse> jam_pulses;
  if (has_jam) {
    tau_j0 = links.jammer->los_delay_s();
    t_j = schedule_transmission(cfg, sc.jammer->timing, tau0, tau_j0, snapshot_index);
    const auto phantoms = phantoms_at_snapshot(cfg, *sc.jammer, snapshot_index);
    jam_pulses = synthesize_jammer_pulses(cfg, grid, phantoms);
    jam_ch = *links.jammer;
    for (auto& p : jam_ch.paths) p.amplitude *= sc.jammer->gain;
  }

  // Earliest arrival decides the pre-roll so nothing lands before the window.
  double min_arrival = 0.0;
  for (const auto& p : links.stx.paths) min_arrival = std::min(min_arrival, p.delay_s / T);
  if (has_jam)
    for (const auto& p : jam_ch.paths)
      min_arrival = std::min(min_arrival, t_j / T + p.delay_s / T);
  const long preroll = -static_cast<long>(std::floor(std::min(0.0, min_arrival)));
  const int guard = sc.guard_len + static_cast<int>(preroll);

  ChannelOptions stx_opts;
  stx_opts.intra_pulse_doppler = sc.intra_pulse_doppler;
  stx_opts.arrival_offset_samples = static_cast<double>(preroll);
  auto windows = apply_channel_to_pulses(cfg, stx_pulses, links.stx, guard, stx_opts);

  if (has_jam) {
    ChannelOptions jam_opts = stx_opts;
    jam_opts.arrival_offset_samples = t_j / T + static_cast<double>(preroll);
    const auto jam_windows = apply_channel_to_pulses(cfg, jam_pulses, jam_ch, guard, jam_opts);
    for (size_t w = 0; w < windows.size(); ++w)
      for (size_t n = 0; n < windows[w].size(); ++n) windows[w][n] += jam_windows[w][n];
  }

  if (sc.noise.power_mw > 0.0)
    add_awgn(windows, sc.noise,
             static_cast<uint64_t>(snapshot_index) * static_cast<uint64_t>(cfg.num_pulses));

  const auto ref = reference_body(cfg, grid);
  const long lag = find_timing_reference(cfg, windows[0], ref);
  const long max_offset =
      static_cast<long>(windows[0].size()) - cfg.cp_len - cfg.num_subcarriers;
  const long demod_offset = std::clamp(lag - cfg.cp_len, 0L, max_offset);

  SnapshotResult r;
  r.snapshot = snapshot_index;
  r.corr_lag = lag;
  r.demod_offset = demod_offset;
  r.preroll_samples = preroll;
  r.delta_tau_s = has_jam ? tau0 - (t_j + tau_j0) : 0.0;

  const long stx_body = std::lround(tau0 / T) + preroll + cfg.cp_len;
  if (has_jam) {
    const long jam_body = std::lround((t_j + tau_j0) / T) + preroll + cfg.cp_len;
    r.captured =
        std::labs(lag - jam_body) < std::labs(lag - stx_body) ? CapturedBy::Jammer
                                                              : CapturedBy::Stx;
  } else {
    r.captured = CapturedBy::Stx;
  }

  r.ctf = estimate_ctf(cfg, windows, demod_offset, grid);
  r.rdm = compute_rdm(cfg, r.ctf, sc.window);
  r.detections = cfar_2d(r.rdm, sc.cfar);
  return r;
}

CampaignResult run_campaign(const ScenarioConfig& sc) {
  CampaignResult out;
  std::vector<Track> tracks;
  for (int k = 0; k < sc.snapshots; ++k) {
    SnapshotResult snap = run_snapshot(sc, k);
    tracks = associate_and_track(std::move(tracks), snap.detections, k, sc.tracker);
    out.snapshots.push_back(std::move(snap));
  }
  out.tracks = std::move(tracks);
  return out;
}

SweepParam sweep_param_from_name(const std::string& name) {
  if (name == "delta_tau") return SweepParam::DeltaTau;
  if (name == "jammer_gain") return SweepParam::JammerGain;
  if (name == "phantom_speed") return SweepParam::PhantomSpeed;
  throw ScenarioError("unknown sweep parameter: " + name);
}

std::string sweep_param_name(SweepParam param) {
  switch (param) {
    case SweepParam::DeltaTau: return "delta_tau";
    case SweepParam::JammerGain: return "jammer_gain";
    case SweepParam::PhantomSpeed: return "phantom_speed";
  }
  return "unknown";
}

std::vector<SweepRow> sweep(const ScenarioConfig& sc, SweepParam param,
                            const std::vector<double>& values) {
  if (!sc.jammer) throw ScenarioError("sweep needs a jammer in the scenario");
  if (values.empty()) throw ScenarioError("sweep needs a non-empty value list");

  std::vector<SweepRow> rows;
  rows.reserve(values.size());
  for (double value : values) {
    ScenarioConfig sc2 = sc;
    JammerConfig& jam = *sc2.jammer;
    switch (param) {
      case SweepParam::DeltaTau:
        jam.timing.mode = JammerTiming::Mode::Deterministic;
        jam.timing.delta_tau_s = value;
        break;
      case SweepParam::JammerGain:
        jam.gain = value;
        break;
      case SweepParam::PhantomSpeed:
        // Apparent radial speed in m/s, monostatic two-way convention:
        // f = 2 v f_c / c, and the matching delay rate for a trajectory.
        if (jam.trajectory) {
          jam.trajectory->delay_rate = -2.0 * value / kSpeedOfLight;
        } else if (!jam.phantoms.empty()) {
          jam.phantoms.front().doppler_hz =
              2.0 * value * sc2.ofdm.carrier_freq_hz / kSpeedOfLight;
        } else {
          throw ScenarioError("phantom_speed sweep needs a phantom");
        }
        break;
    }
    sc2.validate();

    const OfdmConfig& cfg = sc2.ofdm;
    const double T = cfg.sample_interval_s();
    const CampaignResult campaign = run_campaign(sc2);
    const SnapshotResult& snap = campaign.snapshots.front();
    const ResolvedLinks links = resolve_links(sc2);

    const Path* target = moving_path(links.stx);
    if (!target) throw ScenarioError("sweep needs a moving target on the stx link");
    const auto phantoms = phantoms_at_snapshot(cfg, *sc2.jammer, 0);
    if (phantoms.empty()) throw ScenarioError("sweep needs at least one phantom");
    const PhantomTarget& phantom = phantoms.back();
    const Path& jam_los = links.jammer->paths.front();

    const double tau0 = links.stx.los_delay_s();
    const bool jam_captured = snap.captured == CapturedBy::Jammer;
    // Gate predictions relative to whichever LOS the correlator locked onto.
    const double shift_s = jam_captured ? snap.delta_tau_s : 0.0;
    const int unjammed_gate = static_cast<int>(std::lround((target->delay_s - tau0) / T));
    const int target_gate =
        static_cast<int>(std::lround((target->delay_s - tau0 + shift_s) / T));
    const int phantom_gate = static_cast<int>(std::lround(
        jam_captured ? phantom.delay_s / T : (phantom.delay_s - snap.delta_tau_s) / T));
    const int jam_los_gate = static_cast<int>(
        jam_captured ? 0 : std::lround(-snap.delta_tau_s / T));

    const int target_row = doppler_row(cfg, target->doppler_hz);
    const int phantom_row = doppler_row(cfg, phantom.doppler_hz + jam_los.doppler_hz);
    const int jam_los_row = doppler_row(cfg, jam_los.doppler_hz);

    SweepRow row;
    row.value = value;
    row.captured = snap.captured;
    row.true_row_p2e_db =
        range_profile_p2e_db(snap.rdm, target_row, 2, sc2.cfar.max_range_gate).first;
    row.jam_row_p2e_db =
        range_profile_p2e_db(snap.rdm, phantom_row, 2, sc2.cfar.max_range_gate).first;
    row.phantom_detected = has_detection_near(snap.detections, phantom_gate, phantom_row);
    row.jam_los_detected = has_detection_near(snap.detections, jam_los_gate, jam_los_row);
    row.detection_count = static_cast<int>(snap.detections.size());
    for (const auto& d : snap.detections) {
      if (std::abs(d.range_gate - target_gate) <= 1 &&
          std::abs(d.doppler_gate - target_row) <= 1) {
        row.true_target_gate = d.range_gate;
        row.true_target_shift = d.range_gate - unjammed_gate;
      }
    }

    for (const auto& tr : campaign.tracks) {
      if (tr.status != TrackStatus::Confirmed || tr.points.empty()) continue;
      const TrackPoint& last = tr.points.back();
      const int k = last.snapshot;
      const auto phs_k = phantoms_at_snapshot(cfg, *sc2.jammer, k);
      const PhantomTarget& ph_k = phs_k.back();
      const SnapshotResult& snap_k = campaign.snapshots[static_cast<size_t>(k)];
      const bool jc_k = snap_k.captured == CapturedBy::Jammer;
      const double pred_gate =
          (jc_k ? ph_k.delay_s : ph_k.delay_s - snap_k.delta_tau_s) / T;
      const int pred_row = doppler_row(cfg, ph_k.doppler_hz + jam_los.doppler_hz);
      if (std::abs(last.range_gate - pred_gate) <= 3.0 &&
          std::abs(last.doppler_gate - pred_row) <= 2.0)
        row.phantom_track_confirmed = true;
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace jamsim
