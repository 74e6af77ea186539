#pragma once

#include <complex>
#include <functional>
#include <stdexcept>

namespace betawt::special {

struct QuadratureConfig {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  int max_subdivisions = 2000;
};

// Thrown when adaptive subdivision exhausts max_subdivisions before the
// requested tolerance is met.
class convergence_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown when an integrand produces NaN or Inf at a quadrature node.
class nonfinite_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ln Gamma(x) for x > 0. Lanczos approximation, reflection below 0.5.
double ln_gamma(double x);

// ln B(a, b) = ln Gamma(a) + ln Gamma(b) - ln Gamma(a + b).
double ln_beta(double a, double b);

// B(a, b), evaluated in the log domain and exponentiated at the end.
double beta_fn(double a, double b);

// Adaptive Gauss-Kronrod (G7, K15) quadrature of f over [lo, hi]. Panels are
// bisected until the embedded error estimate fits a width-proportional share
// of the tolerance. initial_panels > 1 pre-splits the interval; use it for
// oscillatory integrands so one panel never spans several periods.
double integrate(const std::function<double(double)>& f, double lo, double hi,
                 const QuadratureConfig& cfg = {}, int initial_panels = 1);

// M(alpha, alpha + beta, i*nu): the characteristic function of the
// beta(alpha, beta) density,
//   (1/B(alpha, beta)) * int_0^1 e^{i nu t} t^{alpha-1} (1-t)^{beta-1} dt,
// computed by adaptive quadrature on the real and imaginary parts. The
// absolute error of each part is bounded by cfg.abs_tol.
std::complex<double> kummer_m_imag(double alpha, double beta, double nu,
                                   const QuadratureConfig& cfg = {});

}  // namespace betawt::special
