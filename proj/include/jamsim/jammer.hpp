#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "jamsim/types.hpp"
#include "jamsim/waveform.hpp"

namespace jamsim {

/// One fabricated target as seen from the jammer-to-SRx link.
struct PhantomTarget {
  cd amplitude;           // alpha-bar
  double delay_s = 0.0;   // tau-bar > 0 so the phantom has positive range
  double doppler_hz = 0.0;

  void validate(const OfdmConfig& cfg) const;
};

/// Constant-velocity phantom kinematics across snapshots. The Doppler law is
/// tied to the delay rate (f-bar = -f_c * delay_rate) so a tracker sees a
/// self-consistent mover.
struct PhantomTrajectory {
  cd amplitude;
  double initial_delay_s = 0.0;
  double delay_rate = 0.0;        // s/s, negative = closing
  double snapshot_period_s = 0.0;
};

struct JammerTiming {
  enum class Mode { Deterministic, Random };
  Mode mode = Mode::Deterministic;
  // Deterministic: requested arrival difference
  // delta_tau = (STx LOS arrival) - (jammer LOS arrival); positive means the
  // jammer arrives earlier.
  double delta_tau_s = 0.0;
  // Random: delta_tau(k) = center + epsilon(k), epsilon uniform in
  // [-epsilon_max, +epsilon_max] per snapshot.
  double center_s = 0.0;
  double epsilon_max_s = 0.0;
  uint64_t seed = 0;
};

struct JammerConfig {
  double gain = 1.0;  // linear scale on the whole transmission
  std::vector<PhantomTarget> phantoms;
  std::optional<PhantomTrajectory> trajectory;
  JammerTiming timing;

  void validate(const OfdmConfig& cfg) const;
};

/// H-bar[q,m]: sum over phantoms of
///   alpha-bar e^{-j 2 pi q df tau-bar} e^{+j 2 pi m T_i f-bar}.
Grid<cd> artificial_ctf(const OfdmConfig& cfg, const std::vector<PhantomTarget>& phantoms);

/// Pre-modulated jammer pulses: spectrum (1 + H-bar[q,m]) X[q,m] per pulse.
/// The "1 +" keeps an unmodified S-LTF copy embedded as the forced timing
/// reference.
std::vector<IqPulse> synthesize_jammer_pulses(const OfdmConfig& cfg, const SltfGrid& grid,
                                              const std::vector<PhantomTarget>& phantoms);

PhantomTarget phantom_at_snapshot(const OfdmConfig& cfg, const PhantomTrajectory& traj,
                                  int k);

/// All phantoms active at snapshot k (static list plus trajectory sample).
std::vector<PhantomTarget> phantoms_at_snapshot(const OfdmConfig& cfg,
                                                const JammerConfig& jam, int k);

/// Transmit epoch offset t_J (seconds, relative to the STx pulse epoch) that
/// realizes the requested arrival difference: t_J = tau0 - tauJ0 - delta_tau.
/// Fails when the offset would precede the previous PRI slot.
double schedule_transmission(const OfdmConfig& cfg, const JammerTiming& timing,
                             double tau0_s, double tau_j0_s, int k);

}  // namespace jamsim
