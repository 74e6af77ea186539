#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "betawt/exec.hpp"
#include "betawt/wavelet.hpp"

namespace betawt::spectral {

struct SpectrumSample {
  double omega;                // rad/s
  std::complex<double> value;
};

// nu = omega * T, the dimensionless frequency all the spectral landmarks are
// quoted in.
struct NormalizedFrequency {
  double nu;
};

// Spectra feed 1e-9-level magnitude comparisons, so the Kummer evaluations
// here run tighter than the library-wide default.
special::QuadratureConfig default_config();

// Fourier transform of the order-N wavelet under the convention
// Psi(omega) = int psi(t) e^{-i omega t} dt, which evaluates to
//   (-i omega)^N M(alpha, alpha+beta, -i omega T) e^{-i omega a}.
// Psi(0) is exactly 0.
std::complex<double> spectrum_closed(const wavelet::WaveletSpec& spec, double omega,
                                     const special::QuadratureConfig& cfg = default_config());

// Riemann-sum transform of a sampled waveform, sum w_k e^{-i omega t_k} dt.
// O(dt^2) accurate; used as the independent oracle for spectrum_closed.
std::complex<double> spectrum_dft(const wavelet::SampledWaveform& w, double omega);

// spectrum_closed evaluated over a frequency grid; rows are independent, so
// Exec::Parallel distributes them across threads.
std::vector<SpectrumSample> spectrum_grid(const wavelet::WaveletSpec& spec,
                                          const std::vector<double>& omegas,
                                          const special::QuadratureConfig& cfg = default_config(),
                                          Exec exec = Exec::Parallel);

// e^{-i nu/2} M(alpha, alpha+beta, i nu): the characteristic function of the
// density recentred to mean 1/2. Real-valued when alpha = beta, which is what
// makes spectral nulls bracketable by sign changes.
std::complex<double> centered_char(const density::BetaParams& p, double nu,
                                   const special::QuadratureConfig& cfg = default_config());

// Smallest nu in (0, search_hi_nu] where |Psi| vanishes, located by sign
// change of the centred characteristic function and bisected to tol. Only
// symmetric (alpha = beta) spectra have true nulls; a sign change whose
// magnitude does not actually vanish is rejected, so asymmetric parameters
// return nullopt.
std::optional<NormalizedFrequency> find_first_null(
    const density::BetaParams& p, double search_hi_nu, double tol,
    const special::QuadratureConfig& cfg = default_config());

}  // namespace betawt::spectral
