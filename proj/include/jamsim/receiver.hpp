#pragma once

#include <span>
#include <utility>
#include <vector>

#include "jamsim/channel.hpp"
#include "jamsim/types.hpp"
#include "jamsim/waveform.hpp"

namespace jamsim {

struct CtfEstimate {
  Grid<cd> grid;               // Q x M
  long timing_offset_used = 0; // pulse-start offset passed to demodulation
};

enum class WindowKind { Rectangular, Hann };

struct Rdm {
  Grid<cd> grid;  // Q range gates x M Doppler gates, natural DFT order
  double range_per_gate_m = 0.0;
  double speed_per_gate_mps = 0.0;
  WindowKind window = WindowKind::Rectangular;

  int num_range_gates() const { return grid.rows(); }
  int num_doppler_gates() const { return grid.cols(); }
  // Natural gate v mapped to the signed Doppler gate (v >= M/2 reads negative).
  int signed_doppler(int v) const {
    return v >= grid.cols() / 2 ? v - grid.cols() : v;
  }
  int natural_doppler(int signed_v) const {
    return signed_v < 0 ? signed_v + grid.cols() : signed_v;
  }
};

/// Lag maximizing |cross-correlation| of the clean reference body against the
/// window (the located lag is the body start). Ties break toward the smallest
/// lag. A stronger jammer LOS wins this argmax, which is exactly the capture
/// mechanism.
long find_timing_reference(const OfdmConfig& cfg, std::span<const cd> window,
                           std::span<const cd> reference);

/// H-hat[q,m] = demodulate(window_m, offset)[q] / X[q,m]. The offset is the
/// pulse start (demodulation itself skips the CP).
CtfEstimate estimate_ctf(const OfdmConfig& cfg, const std::vector<std::vector<cd>>& windows,
                         long offset, const SltfGrid& grid);

/// Y-hat[l,v] = sum_q sum_m w_q w_m H[q,m] e^{+j2pi ql/Q} e^{-j2pi mv/M}.
Rdm compute_rdm(const OfdmConfig& cfg, const CtfEstimate& ctf,
                WindowKind window = WindowKind::Rectangular);

/// (range per gate, speed per gate): c*T/2 and (c/f_c)/(2*M*T_i).
std::pair<double, double> rdm_axes(const OfdmConfig& cfg);

}  // namespace jamsim
