#pragma once

#include <string>
#include <vector>

#include "jamsim/detect.hpp"
#include "jamsim/receiver.hpp"
#include "jamsim/simulate.hpp"
#include "jamsim/tracking.hpp"

namespace jamsim {

// All range-Doppler exports carry dB magnitudes, 20 log10 max(|Y|, 1e-30).

// 16-byte little-endian header (magic "RDM0", u32 rows, u32 cols, u32 flags)
// followed by row-major f32 dB values in natural DFT Doppler order.
void write_rdm_f32le(const Rdm& rdm, const std::string& path);

// Reads the f32le format back as linear magnitudes (phase is not stored).
// The file carries no numerology, so physical axes come from cfg.
Rdm read_rdm_f32le(const std::string& path, const OfdmConfig& cfg = {});

// Q rows by M columns of dB, columns in signed Doppler order, no header row.
void write_rdm_csv(const Rdm& rdm, const std::string& path);

// Binary P5, 8 bit, height Q, width M in signed Doppler order; dB mapped
// linearly onto [0,255] over [peak - dynamic_range, peak].
void write_rdm_pgm(const Rdm& rdm, const std::string& path,
                   double dynamic_range_db = 60.0);

void write_detections_csv(const std::vector<Detection>& detections, int snapshot,
                          const std::string& path);
std::vector<Detection> read_detections_csv(const std::string& path,
                                           int* snapshot_out = nullptr);

void write_tracks_csv(const std::vector<Track>& tracks, const std::string& path);

void write_sweep_csv(const std::vector<SweepRow>& rows, SweepParam param,
                     const std::string& path);

// Full artifact set for one campaign: per-snapshot rdm_%04d.f32 and
// detections_%04d.csv, plus tracks.csv and summary.json.
void write_campaign_outputs(const ScenarioConfig& sc, const CampaignResult& result,
                            const std::string& out_dir);

}  // namespace jamsim
