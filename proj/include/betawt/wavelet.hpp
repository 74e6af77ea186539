#pragma once

#include <vector>

#include "betawt/density.hpp"

namespace betawt::wavelet {

// One member of the wavelet family: density parameters plus derivative order.
// Valid when alpha > 1, beta > 1, and 1 <= order <= min(alpha, beta) - 1.
struct WaveletSpec {
  density::BetaParams params;
  int order;
};

struct SampledWaveform {
  double t0;                  // time of the first sample
  double dt;                  // sample spacing
  std::vector<double> values;
};

enum class Part { Scale, Wavelet };

enum class SmoothnessClass {
  ContinuousEverywhere,
  EndpointDiscontinuousDerivOrValue,
};

void validate(const WaveletSpec& spec);

// The scale function: the standardized beta density, compact on [a, b].
double scale_fn(const WaveletSpec& spec, double t);

// Order-N wavelet, defined as (-1)^N times the N-th derivative of the scale
// function. Evaluated in closed form from the Leibniz expansion of
// d^N/dt^N [(t-a)^{alpha-1} (b-t)^{beta-1}].
double wavelet(const WaveletSpec& spec, double t);

// Closed form of the symmetric (alpha = beta) first-order wavelet,
//   K(alpha) t [t^2 - (2 alpha + 1)]^{alpha-2}.
// The bracket is negative on the support, so the power is real only for
// integer alpha; non-integer input throws. Kept as a cross-check of
// wavelet(), which covers every case.
double symmetric_wavelet(double alpha, double t);

// Support of the wavelet (same as the scale function's).
density::SupportGeometry geometry(const WaveletSpec& spec);

// Ratio of causal to non-causal support length, b/|a| = beta/alpha.
double cyclic_balance(const density::BetaParams& p);

// Zero crossing of the first-order wavelet (the mode of the standardized
// density). Needs alpha > 1 and beta > 1.
double zero_cross(const density::BetaParams& p);

// ContinuousEverywhere iff alpha > 2 and beta > 2; otherwise the waveform or
// its derivative can jump at a support endpoint.
SmoothnessClass smoothness_class(const density::BetaParams& p);

// n uniform samples of the chosen function over [a, b], endpoints included.
SampledWaveform sample(const WaveletSpec& spec, int n, Part which);

}  // namespace betawt::wavelet
