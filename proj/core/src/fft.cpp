#include "fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <utility>

#include "csdelay/error.hpp"
#include "csdelay/version.hpp"

namespace csdelay::detail {

namespace {

class PlanCache {
 public:
  ~PlanCache() {
    for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
  }

  // Planning is not thread-safe in FFTW; execution of an existing plan on
  // other arrays through the new-array interface is.
  fftw_plan get(int n, int sign) {
    std::lock_guard lock(mutex_);
    auto it = plans_.find({n, sign});
    if (it != plans_.end()) return it->second;
    std::vector<std::complex<double>> scratch(static_cast<std::size_t>(n));
    auto* p = reinterpret_cast<fftw_complex*>(scratch.data());
    fftw_plan plan = fftw_plan_dft_1d(n, p, p, sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
    if (plan == nullptr) throw Error("fftw: failed to create plan");
    plans_.emplace(std::make_pair(n, sign), plan);
    return plan;
  }

 private:
  std::mutex mutex_;
  std::map<std::pair<int, int>, fftw_plan> plans_;
};

PlanCache& cache() {
  static PlanCache c;
  return c;
}

}  // namespace

void fft_inplace(std::vector<std::complex<double>>& data, FftSign sign) {
  const int n = static_cast<int>(data.size());
  fftw_plan plan = cache().get(n, sign == FftSign::forward ? FFTW_FORWARD : FFTW_BACKWARD);
  auto* p = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(plan, p, p);
}

}  // namespace csdelay::detail

const char* csdelay::fft_library_version() { return fftw_version; }
