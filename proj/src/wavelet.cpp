#include "betawt/wavelet.hpp"

#include <algorithm>
#include <cmath>

namespace betawt::wavelet {

void validate(const WaveletSpec& spec) {
  density::validate_positive(spec.params);
  if (spec.params.alpha <= 1.0 || spec.params.beta <= 1.0)
    throw std::domain_error("wavelet spec: needs alpha > 1 and beta > 1");
  if (spec.order < 1) throw std::domain_error("wavelet spec: order must be at least 1");
  if (spec.order > std::min(spec.params.alpha, spec.params.beta) - 1.0)
    throw std::domain_error("wavelet spec: order must not exceed min(alpha, beta) - 1");
}

double scale_fn(const WaveletSpec& spec, double t) {
  validate(spec);
  return density::std_pdf(spec.params, t);
}

double wavelet(const WaveletSpec& spec, double t) {
  validate(spec);
  const auto g = density::standardize(spec.params);
  if (t < g.a || t > g.b) return 0.0;

  const double alpha = spec.params.alpha;
  const double beta = spec.params.beta;
  const int N = spec.order;
  const double u = t - g.a;
  const double v = g.b - t;
  const double lnC =
      -special::ln_beta(alpha, beta) - (alpha + beta - 1.0) * std::log(g.T);

  // Leibniz expansion of d^N/dt^N [u^{alpha-1} v^{beta-1}] with the (-1)^N of
  // the wavelet definition folded in; the k-th term ends up with sign (-1)^k:
  //   sum_k (-1)^k C(N,k) (alpha-1)...(alpha-k) u^{alpha-1-k}
  //                        (beta-1)...(beta-(N-k)) v^{beta-1-(N-k)}.
  // Order validity (N <= min(alpha,beta) - 1) keeps every exponent >= 0.
  double sum = 0.0;
  double binom = 1.0;
  for (int k = 0; k <= N; ++k) {
    double fu = 1.0;
    for (int i = 0; i < k; ++i) fu *= alpha - 1.0 - i;
    double fv = 1.0;
    for (int i = 0; i < N - k; ++i) fv *= beta - 1.0 - i;
    const double term =
        binom * fu * fv * std::pow(u, alpha - 1.0 - k) * std::pow(v, beta - 1.0 - (N - k));
    sum += (k % 2 == 0) ? term : -term;
    binom = binom * (N - k) / (k + 1);
  }
  return std::exp(lnC) * sum;
}

double symmetric_wavelet(double alpha, double t) {
  if (!std::isfinite(alpha) || alpha <= 1.0)
    throw std::domain_error("symmetric_wavelet: alpha must be greater than 1");
  if (std::fabs(alpha - std::round(alpha)) > 1e-9)
    throw std::domain_error(
        "symmetric_wavelet: the closed form is real only for integer alpha; "
        "use wavelet() for the general case");
  const double n = std::round(alpha);
  const double edge = std::sqrt(2.0 * n + 1.0);
  if (t < -edge || t > edge) return 0.0;
  const double K = std::cos(M_PI * n) * (2.0 * n - 2.0) /
                   std::pow(2.0 * edge, 2.0 * n - 1.0) *
                   std::exp(special::ln_gamma(2.0 * n) - 2.0 * special::ln_gamma(n));
  // the bracket is negative on the support; the exponent is an integer here
  return K * t * std::pow(t * t - (2.0 * n + 1.0), n - 2.0);
}

density::SupportGeometry geometry(const WaveletSpec& spec) {
  validate(spec);
  return density::standardize(spec.params);
}

double cyclic_balance(const density::BetaParams& p) {
  density::validate_positive(p);
  return p.beta / p.alpha;
}

double zero_cross(const density::BetaParams& p) {
  density::validate_positive(p);
  if (p.alpha <= 1.0 || p.beta <= 1.0)
    throw std::domain_error("zero_cross: needs alpha > 1 and beta > 1");
  return (p.alpha - p.beta) / (p.alpha + p.beta - 2.0) *
         std::sqrt((p.alpha + p.beta + 1.0) / (p.alpha * p.beta));
}

SmoothnessClass smoothness_class(const density::BetaParams& p) {
  density::validate_positive(p);
  return (p.alpha > 2.0 && p.beta > 2.0) ? SmoothnessClass::ContinuousEverywhere
                                         : SmoothnessClass::EndpointDiscontinuousDerivOrValue;
}

SampledWaveform sample(const WaveletSpec& spec, int n, Part which) {
  validate(spec);
  if (n < 2) throw std::domain_error("sample: need at least 2 samples");
  const auto g = density::standardize(spec.params);
  SampledWaveform w;
  w.t0 = g.a;
  w.dt = (g.b - g.a) / (n - 1);
  w.values.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    // affine blend rather than t0 + i*dt: endpoints land on a and b exactly,
    // and the midpoint of a symmetric support lands on 0 exactly
    const double theta = static_cast<double>(i) / (n - 1);
    const double t = g.a * (1.0 - theta) + g.b * theta;
    w.values[static_cast<std::size_t>(i)] =
        (which == Part::Scale) ? scale_fn(spec, t) : wavelet(spec, t);
  }
  return w;
}

}  // namespace betawt::wavelet
