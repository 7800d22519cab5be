#include "jamsim/channel.hpp"

#include <algorithm>
#include <cmath>

#include "jamsim/fft.hpp"
#include "jamsim/rng.hpp"

namespace jamsim {
namespace {

double norm3(const std::array<double, 3>& a, const std::array<double, 3>& b) {
  const double dx = a[0] - b[0], dy = a[1] - b[1], dz = a[2] - b[2];
  return std::sqrt(dx * dx + dy * dy + dz * dz);
}

// d/dt |tx - (pos + v t)| at t = 0
double range_rate(const std::array<double, 3>& station, const GeometryTarget& tgt) {
  const double r = norm3(station, tgt.position_m);
  if (r == 0.0) return 0.0;
  double dot = 0.0;
  for (int i = 0; i < 3; ++i)
    dot += (tgt.position_m[i] - station[i]) * tgt.velocity_mps[i];
  return dot / r;
}

double dbm_to_mw(double dbm) { return std::pow(10.0, dbm / 10.0); }

}  // namespace

void ChannelModel::validate(const OfdmConfig& cfg) const {
  if (paths.empty()) throw ScenarioError("channel needs at least one path");
  const double span = cfg.num_subcarriers * cfg.sample_interval_s();
  for (const auto& p : paths) {
    if (std::abs(p.amplitude) <= 0.0) throw ScenarioError("path amplitude must be nonzero");
    if (p.delay_s < 0.0) throw ScenarioError("path delay must be nonnegative");
    if (p.delay_s >= span) throw ScenarioError("path delay beyond unambiguous span Q*T");
    if (std::abs(p.doppler_hz) >= cfg.doppler_unambiguous_hz())
      throw ScenarioError("path Doppler beyond unambiguous bound 1/(2*T_i)");
  }
  for (size_t i = 1; i < paths.size(); ++i)
    if (paths[i].delay_s < paths[0].delay_s)
      throw ScenarioError("path 0 must have the smallest delay (LOS)");
}

void ScenarioGeometry::validate(const OfdmConfig& cfg) const {
  if (norm3(stx_pos_m, srx_pos_m) == 0.0)
    throw ScenarioError("STx and SRx positions must be distinct");
  if (has_jammer && (norm3(jammer_pos_m, srx_pos_m) == 0.0 ||
                     norm3(jammer_pos_m, stx_pos_m) == 0.0))
    throw ScenarioError("jammer position must be distinct from STx and SRx");
  const double lambda = kSpeedOfLight / cfg.carrier_freq_hz;
  const double bound = cfg.doppler_unambiguous_hz();
  for (const auto& t : targets) {
    const double speed = std::sqrt(t.velocity_mps[0] * t.velocity_mps[0] +
                                   t.velocity_mps[1] * t.velocity_mps[1] +
                                   t.velocity_mps[2] * t.velocity_mps[2]);
    if (2.0 * speed / lambda >= bound)
      throw ScenarioError("target speed exceeds the Doppler-unambiguous bound");
    if (t.rcs_m2 <= 0.0) throw ScenarioError("target RCS must be positive");
  }
}

ChannelModel geometry_to_paths(const OfdmConfig& cfg, const ScenarioGeometry& geom,
                               Link link) {
  geom.validate(cfg);
  const auto& tx = (link == Link::StxToSrx) ? geom.stx_pos_m : geom.jammer_pos_m;
  if (link == Link::JammerToSrx && !geom.has_jammer)
    throw ScenarioError("geometry has no jammer");
  const double power_mw =
      dbm_to_mw(link == Link::StxToSrx ? geom.stx_power_dbm : geom.jammer_power_dbm);
  const double lambda = kSpeedOfLight / cfg.carrier_freq_hz;
  // Transmit power is spread uniformly over the Q subcarriers, so the
  // per-symbol grid amplitude is sqrt(P/Q) and grid-domain path gains carry
  // the whole link budget.
  const double amp_tx = std::sqrt(power_mw / cfg.num_subcarriers);

  ChannelModel ch;
  {
    const double r = norm3(tx, geom.srx_pos_m);
    const double tau = r / kSpeedOfLight;
    const double friis = lambda / (4.0 * kPi * r);
    const cd phase = std::polar(1.0, -2.0 * kPi * cfg.carrier_freq_hz * tau);
    ch.paths.push_back({amp_tx * friis * phase, tau, 0.0});
  }
  for (const auto& t : geom.targets) {
    const double r1 = norm3(tx, t.position_m);
    const double r2 = norm3(t.position_m, geom.srx_pos_m);
    const double tau = (r1 + r2) / kSpeedOfLight;
    const double gain = std::sqrt(lambda * lambda * t.rcs_m2 /
                                  (std::pow(4.0 * kPi, 3) * r1 * r1 * r2 * r2));
    const double doppler = -(range_rate(tx, t) + range_rate(geom.srx_pos_m, t)) / lambda;
    const cd phase = std::polar(1.0, -2.0 * kPi * cfg.carrier_freq_hz * tau);
    ch.paths.push_back({amp_tx * gain * phase, tau, doppler});
  }
  std::stable_sort(ch.paths.begin(), ch.paths.end(),
                   [](const Path& a, const Path& b) { return a.delay_s < b.delay_s; });
  ch.validate(cfg);
  return ch;
}

Grid<cd> ctf_analytic(const OfdmConfig& cfg, const ChannelModel& ch, double tau0_s) {
  const int q_n = cfg.num_subcarriers;
  const int m_n = cfg.num_pulses;
  const double df = cfg.subcarrier_spacing_hz();
  Grid<cd> h(q_n, m_n);
  for (const auto& p : ch.paths) {
    const double dtau = p.delay_s - tau0_s;
    for (int q = 0; q < q_n; ++q) {
      const cd range_ph = p.amplitude * std::polar(1.0, -2.0 * kPi * q * df * dtau);
      cd* row = h.row(q);
      for (int m = 0; m < m_n; ++m)
        row[m] += range_ph * std::polar(1.0, 2.0 * kPi * m * cfg.pri_s * p.doppler_hz);
    }
  }
  return h;
}

std::vector<std::vector<cd>> apply_channel_to_pulses(const OfdmConfig& cfg,
                                                     const std::vector<IqPulse>& pulses,
                                                     const ChannelModel& ch, int guard_len,
                                                     const ChannelOptions& opts) {
  const int q_n = cfg.num_subcarriers;
  const int cp = cfg.cp_len;
  const int pulse_len = cp + q_n;
  const long window_len = pulse_len + guard_len;
  const double t_s = cfg.sample_interval_s();

  for (const auto& p : ch.paths) {
    const double arrival = p.delay_s / t_s + opts.arrival_offset_samples;
    if (arrival < 0.0)
      throw ScenarioError("path arrival before window start; enlarge pre-roll");
    if (std::ceil(arrival) + pulse_len > window_len)
      throw ScenarioError("guard window too small for the largest path delay");
  }

  std::vector<std::vector<cd>> windows;
  windows.reserve(pulses.size());
  std::vector<cd> spectrum(q_n), delayed(q_n);

  for (const auto& pulse : pulses) {
    if (static_cast<int>(pulse.samples.size()) != pulse_len)
      throw std::invalid_argument("pulse length does not match configuration");
    std::vector<cd> window(window_len, cd{0.0, 0.0});

    // Per-pulse spectrum of the body; exact for any pulse content.
    std::copy(pulse.samples.begin() + cp, pulse.samples.end(), spectrum.begin());
    fft::forward_inplace(spectrum);
    const double inv_q = 1.0 / q_n;
    for (auto& s : spectrum) s *= inv_q;

    for (const auto& p : ch.paths) {
      const double d = p.delay_s / t_s + opts.arrival_offset_samples;
      // Ramp the spectrum so the periodic extension of the body, sampled on
      // the window grid, carries the exact fractional delay; the CP start
      // lands at sample d.
      for (int q = 0; q < q_n; ++q)
        delayed[q] = spectrum[q] * std::polar(1.0, -2.0 * kPi * q * (d + cp) / q_n);
      fft::backward_inplace(delayed);

      const cd inter = p.amplitude *
                       std::polar(1.0, 2.0 * kPi * pulse.pulse_index * cfg.pri_s * p.doppler_hz);
      const long n_begin = static_cast<long>(std::ceil(d));
      const long n_end = n_begin + pulse_len;
      if (opts.intra_pulse_doppler && p.doppler_hz != 0.0) {
        for (long n = n_begin; n < n_end; ++n)
          window[n] += inter * std::polar(1.0, 2.0 * kPi * p.doppler_hz * n * t_s) *
                       delayed[n % q_n];
      } else {
        for (long n = n_begin; n < n_end; ++n) window[n] += inter * delayed[n % q_n];
      }
    }
    windows.push_back(std::move(window));
  }
  return windows;
}

void add_awgn(std::vector<std::vector<cd>>& windows, const NoiseConfig& noise,
              uint64_t substream_base) {
  if (noise.power_mw < 0.0) throw ScenarioError("noise power must be nonnegative");
  if (noise.power_mw == 0.0) return;
  for (size_t w = 0; w < windows.size(); ++w) {
    GaussianGen gen(mix_seed(noise.seed, "awgn", substream_base + w));
    for (auto& s : windows[w]) s += gen.complex_normal(noise.power_mw);
  }
}

}  // namespace jamsim
