// Serial vs parallel timings for the data-parallel kernels. Each case runs
// three times per policy and reports the best wall time.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "betawt/cltsim.hpp"
#include "betawt/energy.hpp"
#include "betawt/spectral.hpp"
#include "betawt/transform.hpp"

namespace {

using betawt::Exec;
using Clock = std::chrono::steady_clock;

double best_of_three(const std::function<void()>& fn) {
  double best = 1e300;
  for (int rep = 0; rep < 3; ++rep) {
    const auto t0 = Clock::now();
    fn();
    const std::chrono::duration<double> dt = Clock::now() - t0;
    if (dt.count() < best) best = dt.count();
  }
  return best;
}

void report(const std::string& name, const std::function<void(Exec)>& fn) {
  const double ts = best_of_three([&] { fn(Exec::Serial); });
  const double tp = best_of_three([&] { fn(Exec::Parallel); });
  std::printf("%-34s %10.4f s %10.4f s %8.2fx\n", name.c_str(), ts, tp, ts / tp);
}

}  // namespace

int main() {
  using namespace betawt;

  const std::vector<int> bits{0, 1, 0, 1, 0, 1, 0, 1};
  const auto fsk = transform::make_fsk_signal(8.0, 16.0, bits, 512, 512.0);
  const wavelet::WaveletSpec spec{{3.0, 3.0}, 1};
  const wavelet::WaveletSpec spec2{{3.0, 3.0}, 2};

  transform::ScaleShiftGrid grid;
  grid.scales.resize(16);
  for (int i = 0; i < 16; ++i)
    grid.scales[i] = 0.004 * std::pow(0.06 / 0.004, i / 15.0);
  grid.shifts.resize(128);
  const double t_end = (fsk.samples.size() - 1.0) / fsk.sample_rate;
  for (int i = 0; i < 128; ++i) grid.shifts[i] = t_end * i / 127.0;

  const double T = density::standardize(spec.params).T;
  const double h = grid.scales.front() * T / 64.0;

  std::vector<double> omegas(1024);
  for (int i = 0; i < 1024; ++i) omegas[i] = 40.0 * i / 1023.0 / T;

  const auto u = cltsim::make_uniform(2048);

#ifdef _OPENMP
  std::printf("OpenMP threads: %d\n\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP; both columns run serial code\n\n");
#endif
  std::printf("%-34s %12s %12s %9s\n", "kernel", "serial", "parallel", "speedup");

  report("cwt_direct 4096x(16x128) N=1",
         [&](Exec e) { transform::cwt_direct(fsk, spec, grid, e); });
  report("cwt_blur_derivative N=2",
         [&](Exec e) { transform::cwt_blur_derivative(fsk, spec2, grid, h, e); });
  report("self_convolve uniform(2048) n=8",
         [&](Exec e) { cltsim::self_convolve(u, 8, e); });
  report("spectrum_grid 1024 points",
         [&](Exec e) { spectral::spectrum_grid(spec, omegas, spectral::default_config(), e); });
  report("admissibility integral",
         [&](Exec e) { energy::admissibility(spec.params, 500.0 / T, {}, e); });
  return 0;
}
