#include "betawt/transform.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace betawt::transform {

void validate(const Signal& f) {
  if (!std::isfinite(f.sample_rate) || !(f.sample_rate > 0.0))
    throw std::domain_error("signal: sample rate must be positive");
  if (f.samples.size() < 8) throw std::domain_error("signal: need at least 8 samples");
  for (double v : f.samples)
    if (!std::isfinite(v)) throw std::domain_error("signal: samples must be finite");
}

void validate(const ScaleShiftGrid& grid) {
  if (grid.scales.empty() || grid.shifts.empty())
    throw std::domain_error("grid: scales and shifts must be non-empty");
  double prev = 0.0;
  for (double s : grid.scales) {
    if (!std::isfinite(s) || !(s > prev))
      throw std::domain_error("grid: scales must be positive and strictly increasing");
    prev = s;
  }
  for (std::size_t i = 1; i < grid.shifts.size(); ++i)
    if (!(grid.shifts[i] > grid.shifts[i - 1]))
      throw std::domain_error("grid: shifts must be strictly increasing");
  for (double t : grid.shifts)
    if (!std::isfinite(t)) throw std::domain_error("grid: shifts must be finite");
}

namespace {

// Riemann sum of f against w((t - shift)/scale)/sqrt(scale) over the samples
// inside the scaled support [scale*lo + shift, scale*hi + shift].
template <typename F>
double support_sum(const Signal& f, double lo, double hi, double scale, double shift,
                   const F& w) {
  const double dt = 1.0 / f.sample_rate;
  const double t_lo = scale * lo + shift;
  const double t_hi = scale * hi + shift;
  std::int64_t i0 = static_cast<std::int64_t>(std::ceil(t_lo / dt));
  std::int64_t i1 = static_cast<std::int64_t>(std::floor(t_hi / dt));
  if (i0 < 0) i0 = 0;
  const std::int64_t last = static_cast<std::int64_t>(f.samples.size()) - 1;
  if (i1 > last) i1 = last;
  double acc = 0.0;
  for (std::int64_t i = i0; i <= i1; ++i)
    acc += f.samples[static_cast<std::size_t>(i)] * w((i * dt - shift) / scale);
  return acc * dt / std::sqrt(scale);
}

Scalogram empty_like(const ScaleShiftGrid& grid) {
  Scalogram out;
  out.grid = grid;
  out.coefficients.assign(grid.scales.size(),
                          std::vector<double>(grid.shifts.size(), 0.0));
  out.validity_mask.assign(grid.scales.size(),
                           std::vector<std::uint8_t>(grid.shifts.size(), 0));
  return out;
}

// Runs body(i) over [0, n), serial or OpenMP-parallel. Each index owns its
// output slots, so the two policies produce identical bits.
template <typename Body>
void for_each_index(std::int64_t n, Exec exec, const Body& body) {
  if (exec == Exec::Parallel) {
    std::exception_ptr eptr = nullptr;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (std::int64_t i = 0; i < n; ++i) {
      try {
        body(i);
      } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
        if (!eptr) eptr = std::current_exception();
      }
    }
    if (eptr) std::rethrow_exception(eptr);
  } else {
    for (std::int64_t i = 0; i < n; ++i) body(i);
  }
}

}  // namespace

Scalogram cwt_direct(const Signal& f, const wavelet::WaveletSpec& spec,
                     const ScaleShiftGrid& grid, Exec exec) {
  validate(f);
  validate(grid);
  wavelet::validate(spec);
  const auto g = density::standardize(spec.params);
  Scalogram out = empty_like(grid);
  const double t_end = (static_cast<double>(f.samples.size()) - 1.0) / f.sample_rate;
  const std::int64_t nt = static_cast<std::int64_t>(grid.shifts.size());

  for_each_index(static_cast<std::int64_t>(grid.scales.size()) * nt, exec, [&](std::int64_t idx) {
    const std::size_t si = static_cast<std::size_t>(idx / nt);
    const std::size_t ti = static_cast<std::size_t>(idx % nt);
    const double s = grid.scales[si];
    const double tau = grid.shifts[ti];
    out.coefficients[si][ti] = support_sum(
        f, g.a, g.b, s, tau, [&](double x) { return wavelet::wavelet(spec, x); });
    out.validity_mask[si][ti] =
        (s * g.a + tau >= 0.0 && s * g.b + tau <= t_end) ? 1 : 0;
  });
  return out;
}

double blur(const Signal& f, const density::BetaParams& p, double scale, double shift) {
  validate(f);
  density::validate_positive(p);
  if (!std::isfinite(scale) || !(scale > 0.0))
    throw std::domain_error("blur: scale must be positive");
  const auto g = density::standardize(p);
  return support_sum(f, g.a, g.b, scale, shift,
                     [&](double x) { return density::std_pdf(p, x); });
}

Scalogram cwt_blur_derivative(const Signal& f, const wavelet::WaveletSpec& spec,
                              const ScaleShiftGrid& grid, double fd_step, Exec exec) {
  validate(f);
  validate(grid);
  wavelet::validate(spec);
  if (!std::isfinite(fd_step) || !(fd_step > 0.0))
    throw std::domain_error("cwt_blur_derivative: fd_step must be positive");

  const auto g = density::standardize(spec.params);
  const int N = spec.order;
  const double t_end = (static_cast<double>(f.samples.size()) - 1.0) / f.sample_rate;

  // central difference: sum_k (-1)^k C(N,k) blur(tau + (N/2 - k) h) / h^N,
  // then the s^N prefactor that turns the shift-derivative of the blur into
  // the transform. Every stencil point is summed over one shared sample
  // window, the one belonging to the central shift: were each stencil point
  // given its own window, a sample hopping in or out as the window slides by
  // h would inject a jump that, divided by h^N, can exceed the coefficient
  // itself at small scales.
  auto coefficient = [&](double s, double tau, double h) {
    const double dt = 1.0 / f.sample_rate;
    std::int64_t i0 = static_cast<std::int64_t>(std::ceil((s * g.a + tau) / dt));
    std::int64_t i1 = static_cast<std::int64_t>(std::floor((s * g.b + tau) / dt));
    if (i0 < 0) i0 = 0;
    const std::int64_t last = static_cast<std::int64_t>(f.samples.size()) - 1;
    if (i1 > last) i1 = last;

    double acc = 0.0;
    double binom = 1.0;
    for (int k = 0; k <= N; ++k) {
      const double shift = tau + (0.5 * N - k) * h;
      double b = 0.0;
      for (std::int64_t i = i0; i <= i1; ++i)
        b += f.samples[static_cast<std::size_t>(i)] *
             density::std_pdf(spec.params, (i * dt - shift) / s);
      b *= dt / std::sqrt(s);
      acc += (k % 2 == 0) ? binom * b : -binom * b;
      binom = binom * (N - k) / (k + 1);
    }
    return std::pow(s, N) * acc / std::pow(h, N);
  };

  Scalogram out = empty_like(grid);
  const std::int64_t nt = static_cast<std::int64_t>(grid.shifts.size());
  for_each_index(static_cast<std::int64_t>(grid.scales.size()) * nt, exec, [&](std::int64_t idx) {
    const std::size_t si = static_cast<std::size_t>(idx / nt);
    const std::size_t ti = static_cast<std::size_t>(idx % nt);
    const double s = grid.scales[si];
    const double tau = grid.shifts[ti];
    out.coefficients[si][ti] = coefficient(s, tau, fd_step);
    // the stencil reaches (N/2) fd_step beyond the scaled support on each side
    out.validity_mask[si][ti] = (s * g.a + tau - 0.5 * N * fd_step >= 0.0 &&
                                 s * g.b + tau + 0.5 * N * fd_step <= t_end)
                                    ? 1
                                    : 0;
  });

  // Richardson probe at the largest coefficient: halving the step shifts a
  // second-order-accurate stencil by 3x its remaining error.
  double peak = 0.0;
  std::size_t psi = 0, pti = 0;
  for (std::size_t si = 0; si < out.coefficients.size(); ++si)
    for (std::size_t ti = 0; ti < out.coefficients[si].size(); ++ti)
      if (std::fabs(out.coefficients[si][ti]) > peak) {
        peak = std::fabs(out.coefficients[si][ti]);
        psi = si;
        pti = ti;
      }
  if (peak > 0.0) {
    const double refined =
        coefficient(grid.scales[psi], grid.shifts[pti], 0.5 * fd_step);
    const double est_err = std::fabs(refined - out.coefficients[psi][pti]) / 3.0;
    out.fd_warning = est_err > 0.01 * std::fabs(refined);
  }
  return out;
}

Scalogram cwt_blur_derivative(const Signal& f, const wavelet::WaveletSpec& spec,
                              const ScaleShiftGrid& grid, Exec exec) {
  validate(grid);
  const double T = density::standardize(spec.params).T;
  return cwt_blur_derivative(f, spec, grid, grid.scales.front() * T / 64.0, exec);
}

Signal make_fsk_signal(double f0, double f1, const std::vector<int>& bits,
                       int samples_per_bit, double sample_rate) {
  if (!std::isfinite(sample_rate) || !(sample_rate > 0.0))
    throw std::domain_error("make_fsk_signal: sample rate must be positive");
  if (!(f0 > 0.0) || !(f1 > 0.0) || f0 >= 0.5 * sample_rate || f1 >= 0.5 * sample_rate)
    throw std::domain_error("make_fsk_signal: carriers must lie in (0, sample_rate/2)");
  if (samples_per_bit < 8)
    throw std::domain_error("make_fsk_signal: need at least 8 samples per bit");
  if (bits.empty()) throw std::domain_error("make_fsk_signal: need at least one bit");
  for (int b : bits)
    if (b != 0 && b != 1) throw std::domain_error("make_fsk_signal: bits must be 0 or 1");

  Signal out;
  out.sample_rate = sample_rate;
  out.samples.reserve(bits.size() * static_cast<std::size_t>(samples_per_bit));
  const double dphi0 = 2.0 * M_PI * f0 / sample_rate;
  const double dphi1 = 2.0 * M_PI * f1 / sample_rate;
  double phase = 0.0;  // carried across bit boundaries
  for (int b : bits) {
    const double dphi = b ? dphi1 : dphi0;
    for (int i = 0; i < samples_per_bit; ++i) {
      out.samples.push_back(std::sin(phase));
      phase += dphi;
    }
  }
  return out;
}

}  // namespace betawt::transform
