#pragma once

#include <optional>
#include <string>

#include "jamsim/channel.hpp"
#include "jamsim/detect.hpp"
#include "jamsim/jammer.hpp"
#include "jamsim/tracking.hpp"
#include "jamsim/types.hpp"

namespace jamsim {

/// Full experiment description. Links are given either as explicit path lists
/// (stx_paths / jammer_paths) or derived from geometry.
struct ScenarioConfig {
  OfdmConfig ofdm;
  uint64_t master_seed = 1;
  int snapshots = 1;
  double snapshot_period_s = 0.256;
  int guard_len = 256;
  bool intra_pulse_doppler = true;
  WindowKind window = WindowKind::Rectangular;
  NoiseConfig noise;  // power 0 = noiseless

  bool use_geometry = false;
  ScenarioGeometry geometry;
  ChannelModel stx_paths;
  ChannelModel jammer_paths;

  std::optional<JammerConfig> jammer;
  CfarConfig cfar;
  TrackerConfig tracker;
  std::string sltf_file;  // optional fixed S-LTF sequence

  void validate() const;
};

struct ResolvedLinks {
  ChannelModel stx;
  std::optional<ChannelModel> jammer;  // amplitudes without the jammer gain
};

/// Explicit paths pass through; geometry mode derives them per link.
ResolvedLinks resolve_links(const ScenarioConfig& sc);

ScenarioConfig load_scenario(const std::string& path);
ScenarioConfig parse_scenario(const std::string& json_text);
std::string scenario_summary_json(const ScenarioConfig& sc);

}  // namespace jamsim
