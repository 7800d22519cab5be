#include "jamsim/oracle.hpp"

#include <cmath>

namespace jamsim {
namespace {

struct GateContribution {
  cd amplitude;
  double range_gate;    // fractional gates relative to the timing reference
  double doppler_gate;  // fractional Doppler gates
};

Rdm accumulate(const OfdmConfig& cfg, const std::vector<GateContribution>& contribs) {
  const int q_n = cfg.num_subcarriers;
  const int m_n = cfg.num_pulses;
  Rdm rdm;
  rdm.grid = Grid<cd>(q_n, m_n);
  for (const auto& c : contribs) {
    for (int l = 0; l < q_n; ++l) {
      const cd range_k = c.amplitude * dirichlet(q_n, l, c.range_gate);
      cd* row = rdm.grid.row(l);
      for (int v = 0; v < m_n; ++v)
        row[v] += range_k * std::conj(dirichlet(m_n, v, c.doppler_gate));
    }
  }
  const auto axes = rdm_axes(cfg);
  rdm.range_per_gate_m = axes.first;
  rdm.speed_per_gate_mps = axes.second;
  return rdm;
}

}  // namespace

cd dirichlet(int n, double y, double x) {
  if (n < 1) throw std::invalid_argument("dirichlet kernel needs N >= 1");
  const double u = y - x;
  const cd phase = std::polar(1.0, kPi * (n - 1) * u / n);
  const double denom = std::sin(kPi * u / n);
  if (std::abs(denom) < 1e-9) {
    // Limit branch at u = k*N: value N * (-1)^{k(N-1)} * phase, with a
    // negligible O((pi delta)^2) correction inside the branch radius.
    const double k = std::round(u / n);
    const double sign = (std::fmod(std::abs(k * (n - 1)), 2.0) < 0.5) ? 1.0 : -1.0;
    return phase * (sign * n);
  }
  return phase * (std::sin(kPi * u) / denom);
}

Rdm true_rdm_analytic(const OfdmConfig& cfg, const ChannelModel& ch, double tau0_s) {
  const double t_s = cfg.sample_interval_s();
  std::vector<GateContribution> contribs;
  contribs.reserve(ch.paths.size());
  for (const auto& p : ch.paths)
    contribs.push_back({p.amplitude, (p.delay_s - tau0_s) / t_s,
                        cfg.num_pulses * cfg.pri_s * p.doppler_hz});
  return accumulate(cfg, contribs);
}

Rdm jammed_rdm_analytic(const OfdmConfig& cfg, const ChannelModel& true_ch,
                        const ChannelModel& jam_ch,
                        const std::vector<PhantomTarget>& phantoms, double delta_tau_s) {
  const double t_s = cfg.sample_interval_s();
  const double doppler_scale = cfg.num_pulses * cfg.pri_s;
  const double tau0 = true_ch.los_delay_s();
  const double tau_j0 = jam_ch.los_delay_s();

  std::vector<GateContribution> contribs;
  // True links appear shifted by +delta_tau/T because the captured reference
  // sits delta_tau earlier than the STx LOS.
  for (const auto& p : true_ch.paths)
    contribs.push_back({p.amplitude, (p.delay_s - tau0 + delta_tau_s) / t_s,
                        doppler_scale * p.doppler_hz});
  // Jammer link: the embedded clean copy, LOS pinned at gate 0.
  for (const auto& p : jam_ch.paths)
    contribs.push_back({p.amplitude, (p.delay_s - tau_j0) / t_s,
                        doppler_scale * p.doppler_hz});
  // One phantom replica per jammer path per phantom (ghosts via multipath).
  for (const auto& p : jam_ch.paths)
    for (const auto& ph : phantoms)
      contribs.push_back({p.amplitude * ph.amplitude,
                          (p.delay_s - tau_j0 + ph.delay_s) / t_s,
                          doppler_scale * (p.doppler_hz + ph.doppler_hz)});
  return accumulate(cfg, contribs);
}

}  // namespace jamsim
