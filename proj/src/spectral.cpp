#include "betawt/spectral.hpp"

#include <cmath>
#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace betawt::spectral {

special::QuadratureConfig default_config() { return {1e-12, 1e-12, 4000}; }

std::complex<double> spectrum_closed(const wavelet::WaveletSpec& spec, double omega,
                                     const special::QuadratureConfig& cfg) {
  wavelet::validate(spec);
  if (!std::isfinite(omega)) throw std::domain_error("spectrum_closed: omega must be finite");
  if (omega == 0.0) return {0.0, 0.0};
  const auto g = density::standardize(spec.params);
  const auto m = special::kummer_m_imag(spec.params.alpha, spec.params.beta, -omega * g.T, cfg);
  // e^{-i omega a}: the phase carried by the left support endpoint
  const std::complex<double> phase{std::cos(omega * g.a), -std::sin(omega * g.a)};
  const std::complex<double> miw{0.0, -omega};
  std::complex<double> deriv{1.0, 0.0};
  for (int k = 0; k < spec.order; ++k) deriv *= miw;
  return deriv * m * phase;
}

std::complex<double> spectrum_dft(const wavelet::SampledWaveform& w, double omega) {
  if (w.values.size() < 2 || !(w.dt > 0.0))
    throw std::domain_error("spectrum_dft: waveform needs dt > 0 and at least 2 samples");
  std::complex<double> acc{0.0, 0.0};
  for (std::size_t i = 0; i < w.values.size(); ++i) {
    const double t = w.t0 + w.dt * static_cast<double>(i);
    acc += w.values[i] * std::complex<double>{std::cos(omega * t), -std::sin(omega * t)};
  }
  return acc * w.dt;
}

std::vector<SpectrumSample> spectrum_grid(const wavelet::WaveletSpec& spec,
                                          const std::vector<double>& omegas,
                                          const special::QuadratureConfig& cfg, Exec exec) {
  wavelet::validate(spec);
  std::vector<SpectrumSample> out(omegas.size());
  const std::int64_t n = static_cast<std::int64_t>(omegas.size());
  if (exec == Exec::Parallel) {
    std::exception_ptr eptr = nullptr;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (std::int64_t i = 0; i < n; ++i) {
      try {
        out[i] = {omegas[i], spectrum_closed(spec, omegas[i], cfg)};
      } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
        if (!eptr) eptr = std::current_exception();
      }
    }
    if (eptr) std::rethrow_exception(eptr);
  } else {
    for (std::int64_t i = 0; i < n; ++i)
      out[i] = {omegas[i], spectrum_closed(spec, omegas[i], cfg)};
  }
  return out;
}

std::complex<double> centered_char(const density::BetaParams& p, double nu,
                                   const special::QuadratureConfig& cfg) {
  density::validate_positive(p);
  const auto m = special::kummer_m_imag(p.alpha, p.beta, nu, cfg);
  return std::complex<double>{std::cos(0.5 * nu), -std::sin(0.5 * nu)} * m;
}

std::optional<NormalizedFrequency> find_first_null(const density::BetaParams& p,
                                                   double search_hi_nu, double tol,
                                                   const special::QuadratureConfig& cfg) {
  density::validate_positive(p);
  if (!(search_hi_nu > 0.0))
    throw std::domain_error("find_first_null: search range must be positive");
  if (!(tol > 0.0)) throw std::domain_error("find_first_null: tol must be positive");

  auto g = [&](double nu) { return centered_char(p, nu, cfg).real(); };

  const double step = 0.25;
  double lo = 0.0;
  double glo = 1.0;  // the characteristic function is 1 at nu = 0
  while (lo < search_hi_nu) {
    const double hi = std::min(lo + step, search_hi_nu);
    const double ghi = g(hi);
    if ((glo > 0.0) != (ghi > 0.0)) {
      double bl = lo, bh = hi, gl = glo;
      while (bh - bl > tol) {
        const double mid = 0.5 * (bl + bh);
        const double gm = g(mid);
        if ((gl > 0.0) == (gm > 0.0)) {
          bl = mid;
          gl = gm;
        } else {
          bh = mid;
        }
      }
      const double root = 0.5 * (bl + bh);
      // A sign change of the centred characteristic function is a spectral
      // null only if the magnitude itself vanishes there. For alpha != beta
      // the real part crosses zero with plenty of imaginary part left, so
      // such roots are rejected and the scan continues.
      if (std::abs(special::kummer_m_imag(p.alpha, p.beta, root, cfg)) < 1e-6)
        return NormalizedFrequency{root};
    }
    lo = hi;
    glo = ghi;
  }
  return std::nullopt;
}

}  // namespace betawt::spectral
