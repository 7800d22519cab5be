#pragma once

#include <vector>

#include "jamsim/detect.hpp"
#include "jamsim/types.hpp"

namespace jamsim {

struct TrackerConfig {
  double gate_radius = 3.0;  // association gate in (range, Doppler) gate units
  int confirm_hits = 3;      // M of
  int confirm_window = 5;    // N
  int miss_limit = 5;        // consecutive misses before death
  // New tracks are only started below this range gate (<0 disables); distant
  // first-time detections are ignored rather than tracked.
  int max_init_range_gate = -1;

  void validate() const;
};

enum class TrackStatus { Tentative, Confirmed, Dead };

struct TrackPoint {
  int snapshot = 0;
  double range_gate = 0.0;
  double doppler_gate = 0.0;
};

struct Track {
  int id = 0;
  TrackStatus status = TrackStatus::Tentative;
  std::vector<TrackPoint> points;      // associated detections only
  std::vector<char> hit_history;       // one entry per snapshot since birth
  int consecutive_misses = 0;
  double range_rate = 0.0;             // gates per snapshot, from last update
  double doppler_rate = 0.0;

  bool alive() const { return status != TrackStatus::Dead; }
};

/// Greedy global-nearest-neighbor association with constant-velocity
/// prediction, M-of-N confirmation, death after miss_limit consecutive
/// misses. Pure function of (tracks, detections, k); deterministic.
std::vector<Track> associate_and_track(std::vector<Track> tracks,
                                       const std::vector<Detection>& detections, int k,
                                       const TrackerConfig& cfg);

/// Least-squares rate of the track's associated points, gates per snapshot.
double track_range_rate_lsq(const Track& t);
double track_doppler_rate_lsq(const Track& t);

}  // namespace jamsim
