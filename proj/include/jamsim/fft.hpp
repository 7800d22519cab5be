#pragma once

#include <vector>

#include "jamsim/types.hpp"

namespace jamsim::fft {

// Unscaled transforms (plain geometric sums, no 1/N anywhere):
//   forward :  X[k] = sum_n x[n] e^{-j 2 pi n k / N}
//   backward:  x[n] = sum_k X[k] e^{+j 2 pi n k / N}
// Backed by FFTW3 with cached FFTW_ESTIMATE plans; ESTIMATE keeps planning
// deterministic so repeated runs are bit-identical.
void forward_inplace(cd* data, int n);
void backward_inplace(cd* data, int n);
void forward_inplace(std::vector<cd>& v);
void backward_inplace(std::vector<cd>& v);

}  // namespace jamsim::fft
