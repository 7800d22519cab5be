#include "jamsim/detect.hpp"

#include <cmath>
#include <limits>

namespace jamsim {

void CfarConfig::validate() const {
  if (train < 1) throw ScenarioError("CFAR needs at least one training cell per dimension");
  if (guard < 0) throw ScenarioError("CFAR guard must be nonnegative");
  if (pfa <= 0.0 || pfa >= 1.0) throw ScenarioError("CFAR P_fa must lie in (0, 1)");
}

double cfar_threshold_factor(double pfa, int n_train) {
  return n_train * (std::pow(pfa, -1.0 / n_train) - 1.0);
}

std::vector<Detection> cfar_2d(const Rdm& rdm, const CfarConfig& cfg) {
  cfg.validate();
  const int q_n = rdm.num_range_gates();
  const int m_n = rdm.num_doppler_gates();
  const int reach = cfg.guard + cfg.train;
  if (2 * reach + 1 > m_n) throw ScenarioError("CFAR window does not fit the Doppler axis");
  if (2 * reach + 1 > q_n) throw ScenarioError("CFAR window does not fit the range axis");

  Grid<double> power(q_n, m_n);
  for (int l = 0; l < q_n; ++l)
    for (int v = 0; v < m_n; ++v) power.at(l, v) = std::norm(rdm.grid.at(l, v));

  const int l_max = (cfg.max_range_gate >= 0 && cfg.max_range_gate < q_n)
                        ? cfg.max_range_gate
                        : q_n - 1;
  std::vector<Detection> detections;

  for (int l = 0; l <= l_max; ++l) {
    for (int v = 0; v < m_n; ++v) {
      const int sv = rdm.signed_doppler(v);
      if (cfg.zero_doppler_exclusion >= 0 && std::abs(sv) <= cfg.zero_doppler_exclusion)
        continue;
      const double cell = power.at(l, v);
      if (cell <= 0.0) continue;

      double acc = 0.0;
      int n_train = 0;
      for (int dl = -reach; dl <= reach; ++dl) {
        const int ll = l + dl;
        if (ll < 0 || ll >= q_n) continue;  // clip at range edges
        for (int dv = -reach; dv <= reach; ++dv) {
          if (std::abs(dl) <= cfg.guard && std::abs(dv) <= cfg.guard) continue;
          const int vv = ((v + dv) % m_n + m_n) % m_n;  // wrap on Doppler
          acc += power.at(ll, vv);
          ++n_train;
        }
      }
      if (n_train == 0) continue;
      const double threshold = cfar_threshold_factor(cfg.pfa, n_train) * (acc / n_train);
      if (cell <= threshold) continue;

      bool is_local_max = true;
      for (int dl = -cfg.guard; dl <= cfg.guard && is_local_max; ++dl) {
        const int ll = l + dl;
        if (ll < 0 || ll >= q_n) continue;
        for (int dv = -cfg.guard; dv <= cfg.guard; ++dv) {
          const int vv = ((v + dv) % m_n + m_n) % m_n;
          if (power.at(ll, vv) > cell) {
            is_local_max = false;
            break;
          }
        }
      }
      if (!is_local_max) continue;

      Detection det;
      det.range_gate = l;
      det.doppler_gate = sv;
      det.power = cell;
      det.threshold = threshold;
      det.range_m = l * rdm.range_per_gate_m;
      det.speed_mps = sv * rdm.speed_per_gate_mps;
      detections.push_back(det);
    }
  }
  return detections;
}

std::pair<double, int> range_profile_p2e_db(const Rdm& rdm, int signed_doppler_row,
                                            int peak_excl, int max_gate) {
  const int q_n = rdm.num_range_gates();
  const int v = rdm.natural_doppler(signed_doppler_row);
  const int l_max = (max_gate >= 0 && max_gate < q_n) ? max_gate : q_n - 1;

  int peak_gate = 0;
  double peak = -1.0;
  for (int l = 0; l <= l_max; ++l) {
    const double p = std::norm(rdm.grid.at(l, v));
    if (p > peak) {
      peak = p;
      peak_gate = l;
    }
  }
  double off_energy = 0.0;
  for (int l = 0; l <= l_max; ++l) {
    if (std::abs(l - peak_gate) <= peak_excl) continue;
    off_energy += std::norm(rdm.grid.at(l, v));
  }
  if (off_energy <= 0.0) return {std::numeric_limits<double>::infinity(), peak_gate};
  return {10.0 * std::log10(peak / off_energy), peak_gate};
}

}  // namespace jamsim
