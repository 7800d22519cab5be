#include "jamsim/jammer.hpp"

#include <cmath>

#include "jamsim/rng.hpp"

namespace jamsim {

void PhantomTarget::validate(const OfdmConfig& cfg) const {
  if (delay_s <= 0.0) throw ScenarioError("phantom delay must be positive");
  if (std::abs(amplitude) <= 0.0) throw ScenarioError("phantom amplitude must be nonzero");
  if (std::abs(doppler_hz) >= cfg.doppler_unambiguous_hz())
    throw ScenarioError("phantom Doppler beyond unambiguous bound");
}

void JammerConfig::validate(const OfdmConfig& cfg) const {
  if (gain <= 0.0) throw ScenarioError("jammer gain must be positive");
  for (const auto& p : phantoms) p.validate(cfg);
  if (trajectory) {
    if (trajectory->initial_delay_s <= 0.0)
      throw ScenarioError("phantom trajectory must start at positive delay");
    if (trajectory->snapshot_period_s <= 0.0)
      throw ScenarioError("phantom trajectory needs a positive snapshot period");
  }
  if (timing.mode == JammerTiming::Mode::Deterministic &&
      std::abs(timing.delta_tau_s) >= 0.5 * cfg.symbol_duration_s())
    throw ScenarioError("requested |delta_tau| must stay below half a symbol duration");
  if (timing.mode == JammerTiming::Mode::Random && timing.epsilon_max_s < 0.0)
    throw ScenarioError("epsilon_max must be nonnegative");
}

Grid<cd> artificial_ctf(const OfdmConfig& cfg, const std::vector<PhantomTarget>& phantoms) {
  const int q_n = cfg.num_subcarriers;
  const int m_n = cfg.num_pulses;
  const double df = cfg.subcarrier_spacing_hz();
  Grid<cd> h(q_n, m_n);
  for (const auto& ph : phantoms) {
    ph.validate(cfg);
    for (int q = 0; q < q_n; ++q) {
      const cd range_ph = ph.amplitude * std::polar(1.0, -2.0 * kPi * q * df * ph.delay_s);
      cd* row = h.row(q);
      for (int m = 0; m < m_n; ++m)
        row[m] += range_ph * std::polar(1.0, 2.0 * kPi * m * cfg.pri_s * ph.doppler_hz);
    }
  }
  return h;
}

std::vector<IqPulse> synthesize_jammer_pulses(const OfdmConfig& cfg, const SltfGrid& grid,
                                              const std::vector<PhantomTarget>& phantoms) {
  const Grid<cd> hbar = artificial_ctf(cfg, phantoms);
  const int q_n = cfg.num_subcarriers;
  std::vector<IqPulse> pulses;
  pulses.reserve(cfg.num_pulses);
  std::vector<cd> spectrum(q_n);
  for (int m = 0; m < cfg.num_pulses; ++m) {
    for (int q = 0; q < q_n; ++q)
      spectrum[q] = (cd{1.0, 0.0} + hbar.at(q, m)) * grid.at(q, m);
    pulses.push_back(modulate_spectrum(cfg, spectrum, m));
  }
  return pulses;
}

PhantomTarget phantom_at_snapshot(const OfdmConfig& cfg, const PhantomTrajectory& traj,
                                  int k) {
  if (k < 0) throw std::invalid_argument("snapshot index must be nonnegative");
  PhantomTarget ph;
  ph.amplitude = traj.amplitude;
  ph.delay_s = traj.initial_delay_s + k * traj.snapshot_period_s * traj.delay_rate;
  ph.doppler_hz = -cfg.carrier_freq_hz * traj.delay_rate;
  if (ph.delay_s <= 0.0)
    throw ScenarioError("phantom trajectory drives the delay nonpositive");
  ph.validate(cfg);
  return ph;
}

std::vector<PhantomTarget> phantoms_at_snapshot(const OfdmConfig& cfg,
                                                const JammerConfig& jam, int k) {
  std::vector<PhantomTarget> out = jam.phantoms;
  if (jam.trajectory) out.push_back(phantom_at_snapshot(cfg, *jam.trajectory, k));
  return out;
}

double schedule_transmission(const OfdmConfig& cfg, const JammerTiming& timing,
                             double tau0_s, double tau_j0_s, int k) {
  double delta_tau = timing.delta_tau_s;
  if (timing.mode == JammerTiming::Mode::Random) {
    GaussianGen gen(mix_seed(timing.seed, "jam-timing", static_cast<uint64_t>(k)));
    delta_tau = timing.center_s + (2.0 * gen.uniform01() - 1.0) * timing.epsilon_max_s;
  }
  const double t_j = tau0_s - tau_j0_s - delta_tau;
  if (t_j <= -cfg.pri_s)
    throw ScenarioError("requested delta_tau needs a negative transmission time");
  return t_j;
}

}  // namespace jamsim
