#include "jamsim/waveform.hpp"

#include <fstream>
#include <random>
#include <sstream>

#include "jamsim/fft.hpp"
#include "jamsim/rng.hpp"

namespace jamsim {

SltfGrid make_sltf_grid(const OfdmConfig& cfg, uint64_t seed) {
  cfg.validate();
  SltfGrid grid;
  grid.num_subcarriers = cfg.num_subcarriers;
  grid.num_pulses = cfg.num_pulses;
  grid.column.resize(cfg.num_subcarriers);
  std::mt19937_64 eng(mix_seed(seed, "sltf", 0));
  for (int q = 0; q < cfg.num_subcarriers; ++q)
    grid.column[q] = (eng() & 1) ? cd{1.0, 0.0} : cd{-1.0, 0.0};
  return grid;
}

SltfGrid load_sltf_sequence(const OfdmConfig& cfg, const std::string& path) {
  cfg.validate();
  std::ifstream in(path);
  if (!in) throw IoError("cannot open S-LTF sequence file: " + path);
  SltfGrid grid;
  grid.num_subcarriers = cfg.num_subcarriers;
  grid.num_pulses = cfg.num_pulses;
  grid.column.reserve(cfg.num_subcarriers);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    double v = 0;
    std::istringstream(line) >> v;
    if (v != 1.0 && v != -1.0)
      throw IoError("S-LTF sequence entries must be +1 or -1: " + path);
    grid.column.emplace_back(v, 0.0);
  }
  if (static_cast<int>(grid.column.size()) != cfg.num_subcarriers)
    throw IoError("S-LTF sequence must have exactly Q lines: " + path);
  return grid;
}

IqPulse modulate_spectrum(const OfdmConfig& cfg, const std::vector<cd>& spectrum, int m) {
  const int q = cfg.num_subcarriers;
  if (static_cast<int>(spectrum.size()) != q)
    throw std::invalid_argument("spectrum length must equal num_subcarriers");
  std::vector<cd> body = spectrum;
  fft::backward_inplace(body);

  IqPulse pulse;
  pulse.pulse_index = m;
  pulse.samples.resize(cfg.cp_len + q);
  for (int n = 0; n < cfg.cp_len; ++n) pulse.samples[n] = body[q - cfg.cp_len + n];
  for (int n = 0; n < q; ++n) pulse.samples[cfg.cp_len + n] = body[n];
  return pulse;
}

IqPulse modulate_pulse(const OfdmConfig& cfg, const SltfGrid& grid, int m) {
  if (m < 0 || m >= cfg.num_pulses) throw std::invalid_argument("pulse index out of range");
  return modulate_spectrum(cfg, grid.column, m);
}

std::vector<cd> reference_body(const OfdmConfig&, const SltfGrid& grid) {
  std::vector<cd> body = grid.column;
  fft::backward_inplace(body);
  return body;
}

std::vector<cd> demodulate_pulse(const OfdmConfig& cfg, std::span<const cd> window,
                                 long start_offset) {
  const int q = cfg.num_subcarriers;
  const long begin = start_offset + cfg.cp_len;
  if (begin < 0 || begin + q > static_cast<long>(window.size()))
    throw std::invalid_argument("window too short for demodulation at this offset");
  std::vector<cd> spectrum(window.begin() + begin, window.begin() + begin + q);
  fft::forward_inplace(spectrum);
  const double inv_q = 1.0 / q;
  for (auto& s : spectrum) s *= inv_q;
  return spectrum;
}

}  // namespace jamsim
