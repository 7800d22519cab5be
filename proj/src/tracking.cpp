#include "jamsim/tracking.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace jamsim {
namespace {

double lsq_rate(const Track& t, bool doppler) {
  const auto& pts = t.points;
  if (pts.size() < 2) return 0.0;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& p : pts) {
    const double x = p.snapshot;
    const double y = doppler ? p.doppler_gate : p.range_gate;
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double n = static_cast<double>(pts.size());
  const double denom = n * sxx - sx * sx;
  if (denom == 0.0) return 0.0;
  return (n * sxy - sx * sy) / denom;
}

void refresh_status(Track& t, const TrackerConfig& cfg) {
  if (t.status == TrackStatus::Dead) return;
  if (t.consecutive_misses >= cfg.miss_limit) {
    t.status = TrackStatus::Dead;
    return;
  }
  if (t.status == TrackStatus::Tentative) {
    const int window = std::min<int>(cfg.confirm_window, t.hit_history.size());
    int hits = 0;
    for (int i = 0; i < window; ++i)
      if (t.hit_history[t.hit_history.size() - 1 - i]) ++hits;
    if (hits >= cfg.confirm_hits) t.status = TrackStatus::Confirmed;
  }
}

}  // namespace

void TrackerConfig::validate() const {
  if (gate_radius < 0.0) throw ScenarioError("tracker gate radius must be nonnegative");
  if (confirm_hits < 1 || confirm_window < confirm_hits)
    throw ScenarioError("tracker confirmation must satisfy 1 <= M <= N");
  if (miss_limit < 1) throw ScenarioError("tracker miss limit must be >= 1");
}

std::vector<Track> associate_and_track(std::vector<Track> tracks,
                                       const std::vector<Detection>& detections, int k,
                                       const TrackerConfig& cfg) {
  cfg.validate();

  struct Candidate {
    double dist;
    size_t track;
    size_t det;
  };
  std::vector<Candidate> candidates;
  std::vector<char> det_used(detections.size(), 0);
  std::vector<char> trk_used(tracks.size(), 0);

  for (size_t ti = 0; ti < tracks.size(); ++ti) {
    const Track& t = tracks[ti];
    if (!t.alive() || t.points.empty()) continue;
    const auto& last = t.points.back();
    const double steps = k - last.snapshot;
    const double pl = last.range_gate + t.range_rate * steps;
    const double pv = last.doppler_gate + t.doppler_rate * steps;
    for (size_t di = 0; di < detections.size(); ++di) {
      const double dl = detections[di].range_gate - pl;
      const double dv = detections[di].doppler_gate - pv;
      const double dist = std::hypot(dl, dv);
      if (dist <= cfg.gate_radius) candidates.push_back({dist, ti, di});
    }
  }
  std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
    if (a.dist != b.dist) return a.dist < b.dist;
    if (a.track != b.track) return a.track < b.track;
    return a.det < b.det;
  });

  for (const auto& c : candidates) {
    if (trk_used[c.track] || det_used[c.det]) continue;
    trk_used[c.track] = 1;
    det_used[c.det] = 1;
    Track& t = tracks[c.track];
    const auto& det = detections[c.det];
    const auto& last = t.points.back();
    const double steps = k - last.snapshot;
    if (steps > 0) {
      t.range_rate = (det.range_gate - last.range_gate) / steps;
      t.doppler_rate = (det.doppler_gate - last.doppler_gate) / steps;
    }
    t.points.push_back({k, static_cast<double>(det.range_gate),
                        static_cast<double>(det.doppler_gate)});
    t.hit_history.push_back(1);
    t.consecutive_misses = 0;
  }

  for (size_t ti = 0; ti < tracks.size(); ++ti) {
    Track& t = tracks[ti];
    if (!t.alive()) continue;
    if (!trk_used[ti]) {
      t.hit_history.push_back(0);
      ++t.consecutive_misses;
    }
    refresh_status(t, cfg);
  }

  int next_id = 0;
  for (const auto& t : tracks) next_id = std::max(next_id, t.id + 1);
  for (size_t di = 0; di < detections.size(); ++di) {
    if (det_used[di]) continue;
    if (cfg.max_init_range_gate >= 0 && detections[di].range_gate > cfg.max_init_range_gate)
      continue;
    Track t;
    t.id = next_id++;
    t.points.push_back({k, static_cast<double>(detections[di].range_gate),
                        static_cast<double>(detections[di].doppler_gate)});
    t.hit_history.push_back(1);
    refresh_status(t, cfg);
    tracks.push_back(std::move(t));
  }
  return tracks;
}

double track_range_rate_lsq(const Track& t) { return lsq_rate(t, false); }
double track_doppler_rate_lsq(const Track& t) { return lsq_rate(t, true); }

}  // namespace jamsim
