#pragma once

#include <cstdint>
#include <vector>

#include "betawt/exec.hpp"
#include "betawt/wavelet.hpp"

namespace betawt::transform {

// Uniformly sampled real signal; sample k sits at t = k / sample_rate.
struct Signal {
  std::vector<double> samples;
  double sample_rate;  // Hz
};

// Analysis grid. "scale" is the dilation, "shift" the translation of the
// wavelet, both in the signal's time units.
struct ScaleShiftGrid {
  std::vector<double> scales;  // strictly positive, strictly increasing
  std::vector<double> shifts;  // strictly increasing
};

struct Scalogram {
  ScaleShiftGrid grid;
  std::vector<std::vector<double>> coefficients;        // [scale][shift]
  std::vector<std::vector<std::uint8_t>> validity_mask; // 1 where the scaled support fits the window
  // Set by the blur-derivative path when a Richardson probe at the peak
  // coefficient estimates the finite-difference error above 1% of it.
  bool fd_warning = false;
};

void validate(const Signal& f);
void validate(const ScaleShiftGrid& grid);

// The transform from its definition:
//   CWT(s, tau) = int f(t) (1/sqrt(s)) psi((t - tau)/s) dt,
// as a Riemann sum over the signal's sample instants. Compact support is
// exploited: only samples inside [s a + tau, s b + tau] contribute.
// Coefficients whose scaled support sticks out of the signal window are
// computed from the truncated sum and flagged 0 in the validity mask.
Scalogram cwt_direct(const Signal& f, const wavelet::WaveletSpec& spec,
                     const ScaleShiftGrid& grid, Exec exec = Exec::Parallel);

// Low-pass value of the signal under the scaled, shifted density:
//   int f(t) (1/sqrt(scale)) P((t - shift)/scale) dt
// with P the standardized density of p.
double blur(const Signal& f, const density::BetaParams& p, double scale, double shift);

// Same scalogram through the smoothing route: the order-N shift-derivative
// of the blur, times s^N, equals the transform. The derivative is taken with
// an (N+1)-point central difference of step fd_step, every stencil point
// summed over the sample window of the central shift. The overload without
// fd_step uses min(scales) * T / 64.
//
// Accuracy near support endpoints depends on the density's edge exponent
// min(alpha, beta) - 1 - N: when a sample lands within fd_step of a scaled
// endpoint the stencil straddles the cutoff, and the resulting error shrinks
// like fd_step^exponent. At the existence bound N = min(alpha, beta) - 1 the
// differenced kernel jumps at the endpoints and that error stays O(1) no
// matter the step; keep the exponent >= 3 where tight agreement with
// cwt_direct matters.
Scalogram cwt_blur_derivative(const Signal& f, const wavelet::WaveletSpec& spec,
                              const ScaleShiftGrid& grid, double fd_step,
                              Exec exec = Exec::Parallel);
Scalogram cwt_blur_derivative(const Signal& f, const wavelet::WaveletSpec& spec,
                              const ScaleShiftGrid& grid, Exec exec = Exec::Parallel);

// Phase-continuous binary FSK: f0 during 0-bits, f1 during 1-bits, unit
// amplitude. Both carriers must lie below the Nyquist frequency.
Signal make_fsk_signal(double f0, double f1, const std::vector<int>& bits,
                       int samples_per_bit, double sample_rate);

}  // namespace betawt::transform
