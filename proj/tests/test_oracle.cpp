#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "doctest.h"
#include "jamsim/channel.hpp"
#include "jamsim/jammer.hpp"
#include "jamsim/oracle.hpp"
#include "jamsim/receiver.hpp"
#include "jamsim/waveform.hpp"
#include "test_helpers.hpp"

using namespace jamsim;
using test::rel_frobenius;
using test::small_cfg;

namespace {

// Direct evaluation of the defining sum, the independent reference.
cd dirichlet_sum(int n, double u) {
  cd acc{0.0, 0.0};
  for (int k = 0; k < n; ++k) acc += std::polar(1.0, 2.0 * kPi * k * u / n);
  return acc;
}

}  // namespace

TEST_CASE("dirichlet kernel spot values") {
  CHECK(std::abs(dirichlet(1024, 5.0, 5.0) - cd{1024.0, 0.0}) < 1e-9);
  CHECK(std::abs(dirichlet(8, 3.0, 1.0)) < 1e-12);

  const double want = std::sin(kPi * 0.5) / std::sin(kPi * 0.5 / 8.0);
  CHECK(std::abs(dirichlet(8, 0.5, 0.0)) == doctest::Approx(want).epsilon(1e-12));
  CHECK(std::abs(dirichlet(8, 0.5, 0.0)) == doctest::Approx(5.1258).epsilon(1e-4));
}

TEST_CASE("dirichlet kernel equals the explicit exponential sum") {
  std::mt19937_64 eng(2024);
  std::uniform_real_distribution<double> frac(0.0, 1.0);
  for (int n : {1, 2, 4, 8, 16, 64}) {
    std::uniform_int_distribution<int> gate(-2 * n, 2 * n);
    for (int trial = 0; trial < 400; ++trial) {
      const double u = gate(eng) + frac(eng);
      CHECK(std::abs(dirichlet(n, u, 0.0) - dirichlet_sum(n, u)) < 1e-9);
    }
  }
}

TEST_CASE("dirichlet kernel depends only on the difference and is periodic") {
  std::mt19937_64 eng(7);
  std::uniform_real_distribution<double> draw(-20.0, 20.0);
  for (int trial = 0; trial < 200; ++trial) {
    const double y = draw(eng), x = draw(eng);
    const cd base = dirichlet(16, y, x);
    CHECK(std::abs(dirichlet(16, y + 1.0, x + 1.0) - base) < 1e-9);
    CHECK(std::abs(dirichlet(16, y + 16.0, x) - base) < 1e-9);
    CHECK(std::abs(base) <= 16.0 + 1e-9);
  }
}

TEST_CASE("dirichlet kernel limit branch near the singular points") {
  for (int n : {8, 64, 1024}) {
    for (double k : {0.0, 1.0, -1.0, 2.0}) {
      for (double delta : {0.0, 1e-12, -1e-12}) {
        const double u = k * n + delta;
        const cd got = dirichlet(n, u, 0.0);
        CHECK(std::abs(got - dirichlet_sum(n, u)) < 1e-6 * n);
        CHECK(std::abs(got) == doctest::Approx(static_cast<double>(n)).epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("true rdm oracle puts a los-referenced channel at the origin") {
  const auto cfg = small_cfg(64, 8, 16);
  const cd amp{0.8, 0.3};
  const double tau0 = 12.0 * cfg.sample_interval_s();
  ChannelModel ch{{Path{amp, tau0, 0.0}}};
  const auto rdm = true_rdm_analytic(cfg, ch, tau0);

  const double qm = 64.0 * 16.0;
  CHECK(std::abs(rdm.grid.at(0, 0) - amp * qm) < 1e-9 * qm);
  double off = 0.0;
  for (int l = 0; l < 64; ++l)
    for (int v = 0; v < 16; ++v)
      if (l != 0 || v != 0) off = std::max(off, std::abs(rdm.grid.at(l, v)));
  CHECK(off < 1e-9 * qm);
}

TEST_CASE("true rdm oracle places delay and doppler on their gates") {
  const auto cfg = small_cfg(64, 8, 16);
  const double t_samp = cfg.sample_interval_s();
  const double f5 = 5.0 / (cfg.num_pulses * cfg.pri_s);
  ChannelModel ch{{Path{cd{1.0, 0.0}, 10.0 * t_samp, 0.0},
                   Path{cd{0.1, 0.0}, 13.0 * t_samp, f5}}};
  const auto rdm = true_rdm_analytic(cfg, ch, 10.0 * t_samp);

  const double qm = 64.0 * 16.0;
  CHECK(std::abs(rdm.grid.at(0, 0) - cd{qm, 0.0}) < 1e-9 * qm);
  CHECK(std::abs(rdm.grid.at(3, 5) - cd{0.1 * qm, 0.0}) < 1e-9 * qm);
}

TEST_CASE("true rdm oracle is linear in the path list") {
  const auto cfg = small_cfg(32, 4, 8);
  const double t_samp = cfg.sample_interval_s();
  const Path a{cd{0.7, -0.2}, 4.3 * t_samp, 31.0};
  const Path b{cd{-0.1, 0.5}, 9.8 * t_samp, -77.0};
  const double tau0 = 4.3 * t_samp;

  const auto ra = true_rdm_analytic(cfg, ChannelModel{{a}}, tau0);
  const auto rb = true_rdm_analytic(cfg, ChannelModel{{b}}, tau0);
  const auto rab = true_rdm_analytic(cfg, ChannelModel{{a, b}}, tau0);
  double worst = 0.0;
  for (size_t i = 0; i < rab.grid.data().size(); ++i)
    worst = std::max(worst, std::abs(rab.grid.data()[i] - ra.grid.data()[i] -
                                     rb.grid.data()[i]));
  CHECK(worst < 1e-9);
}

TEST_CASE("jammed rdm oracle with a silent jammer reduces to the shifted true rdm") {
  const auto cfg = small_cfg(64, 8, 16);
  const double t_samp = cfg.sample_interval_s();
  const double delta_tau = 4.0 * t_samp;
  ChannelModel true_ch{{Path{cd{1.0, 0.0}, 20.0 * t_samp, 0.0},
                        Path{cd{0.05, 0.0}, 27.5 * t_samp, 60.0}}};
  ChannelModel silent_jam{{Path{cd{0.0, 0.0}, 8.0 * t_samp, 0.0}}};

  const auto jammed = jammed_rdm_analytic(cfg, true_ch, silent_jam, {}, delta_tau);
  const auto shifted = true_rdm_analytic(cfg, true_ch, 20.0 * t_samp - delta_tau);
  CHECK(rel_frobenius(jammed.grid, shifted.grid) < 1e-12);
}

TEST_CASE("jammed rdm oracle spawns one phantom replica per jammer path") {
  const auto cfg = small_cfg(64, 8, 16);
  const double t_samp = cfg.sample_interval_s();
  const double qm = 64.0 * 16.0;

  ChannelModel true_ch{{Path{cd{1.0, 0.0}, 20.0 * t_samp, 0.0}}};
  const cd g{2.0, 0.0}, g2{0.25, 0.0};
  ChannelModel jam_ch{{Path{g, 8.0 * t_samp, 0.0}, Path{g2, 13.0 * t_samp, 0.0}}};
  PhantomTarget ph;
  ph.amplitude = cd{0.4, 0.0};
  ph.delay_s = 8.0 * t_samp;
  const double delta_tau = 2.0 * t_samp;

  const auto rdm = jammed_rdm_analytic(cfg, true_ch, jam_ch, {ph}, delta_tau);

  // Cells: true los shifted to gate 2, jam los at 0, jam echo at 5, and the
  // phantom through each jammer path at 8 and 13.
  Grid<cd> want(64, 16);
  want.at(2, 0) = qm;
  want.at(0, 0) = g * qm;
  want.at(5, 0) = g2 * qm;
  want.at(8, 0) = g * ph.amplitude * qm;
  want.at(13, 0) = g2 * ph.amplitude * qm;
  CHECK(rel_frobenius(rdm.grid, want) < 1e-9);
}

TEST_CASE("phantom replicas inherit the jammer path doppler") {
  const auto cfg = small_cfg(64, 8, 16);
  const double t_samp = cfg.sample_interval_s();
  const double gate_hz = 1.0 / (cfg.num_pulses * cfg.pri_s);
  const double qm = 64.0 * 16.0;

  ChannelModel true_ch{{Path{cd{1.0, 0.0}, 20.0 * t_samp, 0.0}}};
  ChannelModel jam_ch{{Path{cd{1.0, 0.0}, 8.0 * t_samp, 0.0},
                       Path{cd{0.5, 0.0}, 14.0 * t_samp, 2.0 * gate_hz}}};
  PhantomTarget ph;
  ph.amplitude = cd{0.4, 0.0};
  ph.delay_s = 8.0 * t_samp;
  ph.doppler_hz = 3.0 * gate_hz;

  const auto rdm = jammed_rdm_analytic(cfg, true_ch, jam_ch, {ph}, 0.0);
  // Replica through the echo path: range 6 + 8, doppler 2 + 3.
  CHECK(std::abs(rdm.grid.at(14, 5) - cd{0.5 * 0.4 * qm, 0.0}) < 1e-9 * qm);
  // Replica through the los path: range 8, doppler 3.
  CHECK(std::abs(rdm.grid.at(8, 3) - cd{0.4 * qm, 0.0}) < 1e-9 * qm);
}

TEST_CASE("simulated jammer-only capture matches the jammed rdm oracle") {
  const auto cfg = small_cfg(128, 16, 8);
  const double t_samp = cfg.sample_interval_s();
  const auto grid = make_sltf_grid(cfg, 31);

  PhantomTarget ph;
  ph.amplitude = cd{0.4, 0.0};
  ph.delay_s = 8.0 * t_samp;
  ph.doppler_hz = 2.0 / (cfg.num_pulses * cfg.pri_s);

  const auto pulses = synthesize_jammer_pulses(cfg, grid, {ph});
  ChannelModel jam_ch{{Path{cd{1.0, 0.0}, 10.0 * t_samp, 0.0}}};
  ChannelOptions opts;
  opts.intra_pulse_doppler = false;
  const auto windows = apply_channel_to_pulses(cfg, pulses, jam_ch, 64, opts);

  const auto ref = reference_body(cfg, grid);
  const long lag = find_timing_reference(cfg, windows[0], ref);
  CHECK(lag == 10 + cfg.cp_len);
  const auto est = estimate_ctf(cfg, windows, lag - cfg.cp_len, grid);
  const auto rdm = compute_rdm(cfg, est);

  ChannelModel true_silent{{Path{cd{0.0, 0.0}, 10.0 * t_samp, 0.0}}};
  const auto want = jammed_rdm_analytic(cfg, true_silent, jam_ch, {ph}, 0.0);
  CHECK(rel_frobenius(rdm.grid, want.grid) < 1e-6);
}
