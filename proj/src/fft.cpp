#include "jamsim/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>

namespace jamsim::fft {
namespace {

std::mutex plan_mutex;
std::map<std::pair<int, int>, fftw_plan> plan_cache;

fftw_plan get_plan(int n, int sign) {
  std::lock_guard<std::mutex> lock(plan_mutex);
  auto key = std::make_pair(n, sign);
  auto it = plan_cache.find(key);
  if (it != plan_cache.end()) return it->second;
  // FFTW_UNALIGNED lets the new-array execute run on arbitrary vectors.
  std::vector<cd> dummy(n);
  fftw_plan p = fftw_plan_dft_1d(n, reinterpret_cast<fftw_complex*>(dummy.data()),
                                 reinterpret_cast<fftw_complex*>(dummy.data()), sign,
                                 FFTW_ESTIMATE | FFTW_UNALIGNED);
  plan_cache.emplace(key, p);
  return p;
}

void execute(cd* data, int n, int sign) {
  fftw_plan p = get_plan(n, sign);
  auto* raw = reinterpret_cast<fftw_complex*>(data);
  fftw_execute_dft(p, raw, raw);
}

}  // namespace

void forward_inplace(cd* data, int n) { execute(data, n, FFTW_FORWARD); }
void backward_inplace(cd* data, int n) { execute(data, n, FFTW_BACKWARD); }
void forward_inplace(std::vector<cd>& v) { forward_inplace(v.data(), static_cast<int>(v.size())); }
void backward_inplace(std::vector<cd>& v) { backward_inplace(v.data(), static_cast<int>(v.size())); }

}  // namespace jamsim::fft
