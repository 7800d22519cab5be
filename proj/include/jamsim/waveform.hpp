#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "jamsim/types.hpp"

namespace jamsim {

/// S-LTF symbol grid X[q,m]: unit-magnitude BPSK, identical across pulses.
struct SltfGrid {
  int num_subcarriers = 0;
  int num_pulses = 0;
  std::vector<cd> column;  // shared by every pulse

  cd at(int q, int /*m*/) const { return column[q]; }
};

/// One baseband S-LTF pulse: cp_len + Q samples at rate B.
struct IqPulse {
  std::vector<cd> samples;
  int pulse_index = 0;
};

SltfGrid make_sltf_grid(const OfdmConfig& cfg, uint64_t seed);

/// Loads a +/-1 sequence, one value per line, exactly Q lines.
SltfGrid load_sltf_sequence(const OfdmConfig& cfg, const std::string& path);

/// Unscaled IDFT of grid column m, cyclic prefix prepended.
IqPulse modulate_pulse(const OfdmConfig& cfg, const SltfGrid& grid, int m);

/// Builds a pulse from an arbitrary per-subcarrier spectrum (used by the jammer).
IqPulse modulate_spectrum(const OfdmConfig& cfg, const std::vector<cd>& spectrum, int m);

/// Clean time-domain body (no CP) of the reference symbol, for the correlator.
std::vector<cd> reference_body(const OfdmConfig& cfg, const SltfGrid& grid);

/// DFT/Q of the Q-sample body taken at start_offset + cp_len. No misalignment
/// correction: ISI/ICI from a bad offset is deliberately kept.
std::vector<cd> demodulate_pulse(const OfdmConfig& cfg, std::span<const cd> window,
                                 long start_offset);

}  // namespace jamsim
