#include "jamsim/receiver.hpp"

#include <cmath>

#include "jamsim/fft.hpp"

namespace jamsim {

long find_timing_reference(const OfdmConfig& cfg, std::span<const cd> window,
                           std::span<const cd> reference) {
  (void)cfg;
  if (window.size() < reference.size())
    throw std::invalid_argument("window shorter than the correlation reference");
  const long lags = static_cast<long>(window.size() - reference.size()) + 1;
  long best_lag = 0;
  double best_mag = -1.0;
  for (long lag = 0; lag < lags; ++lag) {
    cd acc{0.0, 0.0};
    const cd* w = window.data() + lag;
    for (size_t i = 0; i < reference.size(); ++i) acc += std::conj(reference[i]) * w[i];
    const double mag = std::norm(acc);
    if (mag > best_mag) {  // strict: ties keep the smallest lag
      best_mag = mag;
      best_lag = lag;
    }
  }
  return best_lag;
}

CtfEstimate estimate_ctf(const OfdmConfig& cfg, const std::vector<std::vector<cd>>& windows,
                         long offset, const SltfGrid& grid) {
  const int q_n = cfg.num_subcarriers;
  const int m_n = static_cast<int>(windows.size());
  CtfEstimate est;
  est.timing_offset_used = offset;
  est.grid = Grid<cd>(q_n, m_n);
  for (int m = 0; m < m_n; ++m) {
    const auto spectrum = demodulate_pulse(cfg, windows[m], offset);
    for (int q = 0; q < q_n; ++q) est.grid.at(q, m) = spectrum[q] / grid.at(q, m);
  }
  return est;
}

Rdm compute_rdm(const OfdmConfig& cfg, const CtfEstimate& ctf, WindowKind window) {
  const int q_n = ctf.grid.rows();
  const int m_n = ctf.grid.cols();

  Grid<cd> y = ctf.grid;
  if (window == WindowKind::Hann) {
    for (int q = 0; q < q_n; ++q) {
      const double wq = 0.5 * (1.0 - std::cos(2.0 * kPi * q / (q_n - 1)));
      cd* row = y.row(q);
      for (int m = 0; m < m_n; ++m) {
        const double wm = 0.5 * (1.0 - std::cos(2.0 * kPi * m / (m_n - 1)));
        row[m] *= wq * wm;
      }
    }
  }

  // IDFT along subcarriers (columns are strided; gather/scatter).
  std::vector<cd> col(q_n);
  for (int m = 0; m < m_n; ++m) {
    for (int q = 0; q < q_n; ++q) col[q] = y.at(q, m);
    fft::backward_inplace(col);
    for (int q = 0; q < q_n; ++q) y.at(q, m) = col[q];
  }
  // DFT along pulses (rows are contiguous).
  for (int l = 0; l < q_n; ++l) fft::forward_inplace(y.row(l), m_n);

  Rdm rdm;
  rdm.grid = std::move(y);
  const auto axes = rdm_axes(cfg);
  rdm.range_per_gate_m = axes.first;
  rdm.speed_per_gate_mps = axes.second;
  rdm.window = window;
  return rdm;
}

std::pair<double, double> rdm_axes(const OfdmConfig& cfg) {
  const double range = kSpeedOfLight * cfg.sample_interval_s() / 2.0;
  const double speed =
      (kSpeedOfLight / cfg.carrier_freq_hz) / (2.0 * cfg.num_pulses * cfg.pri_s);
  return {range, speed};
}

}  // namespace jamsim
