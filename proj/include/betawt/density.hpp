#pragma once

#include <optional>

#include "betawt/special.hpp"

namespace betawt::density {

// Parameters of the beta density t^{alpha-1} (1-t)^{beta-1} / B(alpha, beta)
// on [0, 1].
struct BetaParams {
  double alpha;
  double beta;
};

struct DistributionStats {
  double mean;
  std::optional<double> mode;  // interior mode; present only for alpha, beta > 1
  double variance;
};

// Support of the standardized (zero-mean, unit-variance) density.
struct SupportGeometry {
  double a;  // left endpoint, negative
  double b;  // right endpoint, positive
  double T;  // support length b - a
  double m;  // mean of the unit-interval density, alpha / (alpha + beta)
};

// Throws std::domain_error unless alpha and beta are finite and positive.
void validate_positive(const BetaParams& p);

// Additionally requires alpha >= 1 and beta >= 1, the range in which the
// density is bounded and the wavelet machinery applies.
void validate(const BetaParams& p);

// Density value; total over the reals (0 outside [0, 1]). Endpoints take the
// limit value: 0 when the local exponent is positive, 1/B when it is zero,
// +inf when it is negative (possible only for alpha or beta below 1).
double pdf(const BetaParams& p, double t);

DistributionStats stats(const BetaParams& p);

// n-th raw moment, B(alpha + n, beta) / B(alpha, beta).
double moment(const BetaParams& p, int n);

// d/dt of pdf, for alpha > 1 and beta > 1. At t = 0 or 1 returns the
// one-sided limit when it is finite (alpha >= 2, resp. beta >= 2) and throws
// std::domain_error when the limit diverges.
double pdf_derivative(const BetaParams& p, double t);

// Affine map of the density to zero mean and unit variance:
//   T = (alpha+beta) sqrt((alpha+beta+1)/(alpha beta)),
//   a = -sqrt(alpha/beta) sqrt(alpha+beta+1),  b = sqrt(beta/alpha) sqrt(alpha+beta+1).
// Satisfies a = -m T and b = (1 - m) T.
SupportGeometry standardize(const BetaParams& p);

// The standardized density itself:
//   (t-a)^{alpha-1} (b-t)^{beta-1} / (B(alpha,beta) T^{alpha+beta-1})
// on [a, b], 0 outside. Powers are evaluated in the log domain.
double std_pdf(const BetaParams& p, double t);

// Moment matching: the unique beta parameters whose density has the given
// mean and variance. Requires 0 < mean < 1 and 0 < variance < mean(1-mean).
BetaParams clt_fit(double mean, double variance);

}  // namespace betawt::density
