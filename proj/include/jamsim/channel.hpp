#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "jamsim/types.hpp"
#include "jamsim/waveform.hpp"

namespace jamsim {

/// One propagation path of the sample-level multipath model.
struct Path {
  cd amplitude;          // complex linear gain, includes carrier phase
  double delay_s = 0.0;  // >= 0, below the unambiguous span Q*T
  double doppler_hz = 0.0;
};

struct ChannelModel {
  std::vector<Path> paths;  // index 0 is the LOS (smallest delay)

  void validate(const OfdmConfig& cfg) const;
  double los_delay_s() const { return paths.front().delay_s; }
};

struct GeometryTarget {
  std::array<double, 3> position_m{};
  std::array<double, 3> velocity_mps{};
  double rcs_m2 = 1.0;
};

/// Physical layout used to derive path lists when the scenario does not give
/// them explicitly. Powers are per transmitter, in dBm.
struct ScenarioGeometry {
  std::array<double, 3> stx_pos_m{};
  std::array<double, 3> srx_pos_m{};
  std::array<double, 3> jammer_pos_m{};
  bool has_jammer = false;
  double stx_power_dbm = 23.0;
  double jammer_power_dbm = 30.0;
  std::vector<GeometryTarget> targets;

  void validate(const OfdmConfig& cfg) const;
};

struct NoiseConfig {
  double power_mw = 0.0;  // variance per complex sample
  uint64_t seed = 0;
};

enum class Link { StxToSrx, JammerToSrx };

/// LOS plus one echo per target: two-leg delay, bistatic Doppler
/// f = -(1/lambda) d(R_tx + R_rx)/dt, Friis / bistatic-radar-equation
/// amplitudes with unit antenna gains, carrier phase e^{-j 2 pi f_c tau}.
ChannelModel geometry_to_paths(const OfdmConfig& cfg, const ScenarioGeometry& geom,
                               Link link);

/// Exact evaluation of the closed-form CTF
///   H[q,m] = sum_p alpha_p e^{-j 2 pi q df (tau_p - tau0)} e^{+j 2 pi m T_i f_p}.
Grid<cd> ctf_analytic(const OfdmConfig& cfg, const ChannelModel& ch, double tau0_s);

struct ChannelOptions {
  bool intra_pulse_doppler = true;
  // Extra arrival delay added to every path (transmit epoch shift plus window
  // pre-roll), in samples. May be fractional.
  double arrival_offset_samples = 0.0;
};

/// Places every pulse in a zero-padded window of cp_len + Q + guard_len
/// samples. Each path contributes an exactly delayed copy (per-subcarrier
/// phase ramp on the pulse's own spectrum, placed on its true support, so
/// fractional delays are sample-exact), scaled by alpha and rotated by the
/// inter-pulse Doppler phase e^{j 2 pi m T_i f}; the intra-pulse rotation
/// e^{j 2 pi n T f} is optional (default on).
std::vector<std::vector<cd>> apply_channel_to_pulses(const OfdmConfig& cfg,
                                                     const std::vector<IqPulse>& pulses,
                                                     const ChannelModel& ch, int guard_len,
                                                     const ChannelOptions& opts = {});

/// Adds circular complex AWGN, variance power_mw per sample. Each window gets
/// its own substream derived from (seed, substream_base + window index) so the
/// result does not depend on processing order.
void add_awgn(std::vector<std::vector<cd>>& windows, const NoiseConfig& noise,
              uint64_t substream_base = 0);

}  // namespace jamsim
