#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jamsim/detect.hpp"
#include "jamsim/receiver.hpp"
#include "jamsim/scenario.hpp"
#include "jamsim/tracking.hpp"

namespace jamsim {

// Which transmitter the receiver's timing correlator locked onto.
enum class CapturedBy { Stx, Jammer };

struct SnapshotResult {
  int snapshot = 0;
  Rdm rdm;
  CtfEstimate ctf;
  long corr_lag = 0;        // body-start lag reported by the correlator
  long demod_offset = 0;    // pulse-start offset handed to the demodulator
  long preroll_samples = 0; // samples prepended so early arrivals stay in-window
  CapturedBy captured = CapturedBy::Stx;
  double delta_tau_s = 0.0; // realized LOS arrival gap (stx minus jammer)
  std::vector<Detection> detections;
};

struct CampaignResult {
  std::vector<SnapshotResult> snapshots;
  std::vector<Track> tracks;
};

// Run one coherent processing interval: synthesize both links, time-align,
// estimate the channel and form the range-Doppler map, then run CFAR.
SnapshotResult run_snapshot(const ScenarioConfig& sc, int snapshot_index);

// Run every snapshot and feed the detections through the tracker.
CampaignResult run_campaign(const ScenarioConfig& sc);

enum class SweepParam { DeltaTau, JammerGain, PhantomSpeed };

SweepParam sweep_param_from_name(const std::string& name);
std::string sweep_param_name(SweepParam param);

// Per-value campaign metrics. Gate predictions account for which LOS captured
// the timing, p2e ratios are peak-to-off-peak profile energy at the relevant
// Doppler row of snapshot 0.
struct SweepRow {
  double value = 0.0;
  CapturedBy captured = CapturedBy::Stx;
  double true_row_p2e_db = 0.0;
  double jam_row_p2e_db = 0.0;
  bool phantom_detected = false;
  bool jam_los_detected = false;
  bool phantom_track_confirmed = false;
  std::optional<int> true_target_gate;   // detected gate near the prediction
  std::optional<int> true_target_shift;  // detected gate minus unjammed gate
  int detection_count = 0;
};

std::vector<SweepRow> sweep(const ScenarioConfig& sc, SweepParam param,
                            const std::vector<double>& values);

}  // namespace jamsim
