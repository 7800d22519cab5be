#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace jamsim {

using cd = std::complex<double>;

inline constexpr double kSpeedOfLight = 299792458.0;
inline constexpr double kPi = 3.14159265358979323846;

/// Scenario configuration problems (bad parameters, impossible timing).
/// The CLI maps these to exit code 2.
class ScenarioError : public std::runtime_error {
 public:
  explicit ScenarioError(const std::string& what) : std::runtime_error(what) {}
};

/// File read/write problems. The CLI maps these to exit code 3.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

/// Dense row-major matrix, rows indexed first. Used for Q x M grids
/// (subcarrier/range gate on rows, pulse/Doppler gate on columns).
template <typename T>
class Grid {
 public:
  Grid() = default;
  Grid(int rows, int cols, T fill = T{})
      : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, fill) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  T& at(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
  const T& at(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }
  T* row(int r) { return data_.data() + static_cast<size_t>(r) * cols_; }
  const T* row(int r) const { return data_.data() + static_cast<size_t>(r) * cols_; }
  std::vector<T>& data() { return data_; }
  const std::vector<T>& data() const { return data_; }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> data_;
};

/// OFDM numerology for the sensing waveform. One S-LTF symbol per PRI.
struct OfdmConfig {
  int num_subcarriers = 1024;   // Q
  int cp_len = 64;              // Q_cp, samples
  double bandwidth_hz = 80e6;   // B
  int num_pulses = 128;         // M per snapshot
  double pri_s = 2e-3;          // T_i
  double carrier_freq_hz = 5e9; // f_c

  double sample_interval_s() const { return 1.0 / bandwidth_hz; }
  double subcarrier_spacing_hz() const { return bandwidth_hz / num_subcarriers; }
  double symbol_duration_s() const {
    return (num_subcarriers + cp_len) * sample_interval_s();
  }
  double doppler_unambiguous_hz() const { return 0.5 / pri_s; }

  void validate() const;
};

inline void OfdmConfig::validate() const {
  if (num_subcarriers < 2 || (num_subcarriers & (num_subcarriers - 1)) != 0)
    throw ScenarioError("num_subcarriers must be a power of two");
  if (cp_len <= 0 || cp_len >= num_subcarriers)
    throw ScenarioError("cp_len must satisfy 0 < cp_len < num_subcarriers");
  if (bandwidth_hz <= 0) throw ScenarioError("bandwidth must be positive");
  if (num_pulses < 1) throw ScenarioError("num_pulses must be >= 1");
  if (carrier_freq_hz <= 0) throw ScenarioError("carrier frequency must be positive");
  if (pri_s < symbol_duration_s())
    throw ScenarioError("pri must be at least one symbol duration");
  // The PRI must land on the sample grid so pulse epochs are exact.
  const double samples = pri_s * bandwidth_hz;
  if (std::abs(samples - std::round(samples)) > 1e-6)
    throw ScenarioError("pri must be an integer number of samples");
}

}  // namespace jamsim
