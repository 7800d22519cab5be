#pragma once

#include <vector>

#include "jamsim/channel.hpp"
#include "jamsim/jammer.hpp"
#include "jamsim/receiver.hpp"
#include "jamsim/types.hpp"

namespace jamsim {

/// Dirichlet kernel
///   D_N(y, x) = e^{j pi (N-1)(y-x)/N} sin(pi (y-x)) / sin(pi (y-x)/N)
///             = sum_{n=0}^{N-1} e^{j 2 pi n (y-x)/N},
/// with the removable singularities at (y-x) = 0 mod N evaluated by their
/// limit. This is the exact point response of the range/Doppler transforms.
cd dirichlet(int n, double y, double x);

/// Closed-form noiseless RDM of a true channel demodulated at reference
/// delay tau0:
///   Y[l,v] = sum_p alpha_p D_Q(l, l_p) conj(D_M(v, v_p)),
/// l_p = (tau_p - tau0)/T, v_p = M T_i f_p.
Rdm true_rdm_analytic(const OfdmConfig& cfg, const ChannelModel& ch, double tau0_s);

/// Closed-form jammed RDM for the jammer-captured-timing regime. Three sums:
/// the true RDM shifted by +delta_tau/T gates, the jammer link's own paths
/// (the clean timing-reference copy, LOS at gate 0), and one phantom replica
/// per jammer path per phantom at (tau'_rho - tau'_0 + tau_bar)/T.
/// jam_ch amplitudes must already include the jammer transmit gain.
Rdm jammed_rdm_analytic(const OfdmConfig& cfg, const ChannelModel& true_ch,
                        const ChannelModel& jam_ch,
                        const std::vector<PhantomTarget>& phantoms, double delta_tau_s);

}  // namespace jamsim
