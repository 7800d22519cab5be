#pragma once

#include <optional>
#include <vector>

#include "jamsim/receiver.hpp"
#include "jamsim/types.hpp"

namespace jamsim {

struct CfarConfig {
  int guard = 1;                  // guard cells per dimension
  int train = 1;                  // training cells per dimension
  double pfa = 1e-3;
  int zero_doppler_exclusion = 1; // half-width in gates; <0 disables
  // Detection region of interest on the range axis. Gates above it are
  // negative-delay aliases wrapped to the far end and are not scanned.
  // <0 means the full axis.
  int max_range_gate = -1;

  void validate() const;
};

struct Detection {
  int range_gate = 0;
  int doppler_gate = 0;  // signed, negative = closing
  double power = 0.0;    // linear |Y|^2
  double threshold = 0.0;
  double range_m = 0.0;
  double speed_mps = 0.0;
};

/// alpha = N_t (P_fa^{-1/N_t} - 1): cell-averaging threshold multiplier for
/// exponentially distributed cells.
double cfar_threshold_factor(double pfa, int n_train);

/// Cell-averaging CFAR on |Y|^2 with toroidal wrap on the Doppler axis,
/// clipping at range edges (per-cell alpha from the live training count),
/// local-max suppression over the guard neighborhood, and an optional
/// zero-Doppler exclusion band that removes candidates only.
std::vector<Detection> cfar_2d(const Rdm& rdm, const CfarConfig& cfg);

/// Range-profile peak to off-peak profile energy, in dB, at one signed
/// Doppler row. The denominator excludes peak_excl gates on each side of the
/// peak, making this a peak-to-smear measure; max_gate limits the profile to
/// the detection region (<0 = full axis). Returns (ratio dB, peak gate).
std::pair<double, int> range_profile_p2e_db(const Rdm& rdm, int signed_doppler_row,
                                            int peak_excl = 2, int max_gate = -1);

}  // namespace jamsim
