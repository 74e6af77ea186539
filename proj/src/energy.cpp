#include "betawt/energy.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "betawt/spectral.hpp"
#include "betawt/wavelet.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace betawt::energy {

namespace {

// Long oscillatory line integrals: split into fixed panels no wider than
// panel_width, integrate each panel independently (optionally across
// threads), then sum in index order so the result is identical for any
// thread count.
double panel_integral(const std::function<double(double)>& f, double lo, double hi,
                      double panel_width, const special::QuadratureConfig& cfg, Exec exec) {
  const int panels = std::max(1, static_cast<int>(std::ceil((hi - lo) / panel_width)));
  special::QuadratureConfig local = cfg;
  local.abs_tol = cfg.abs_tol / panels;
  const double w = (hi - lo) / panels;

  std::vector<double> parts(static_cast<std::size_t>(panels), 0.0);
  std::exception_ptr eptr = nullptr;
  if (exec == Exec::Parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int i = 0; i < panels; ++i) {
      try {
        parts[static_cast<std::size_t>(i)] =
            special::integrate(f, lo + w * i, i + 1 == panels ? hi : lo + w * (i + 1), local);
      } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
        if (!eptr) eptr = std::current_exception();
      }
    }
    if (eptr) std::rethrow_exception(eptr);
  } else {
    for (int i = 0; i < panels; ++i)
      parts[static_cast<std::size_t>(i)] =
          special::integrate(f, lo + w * i, i + 1 == panels ? hi : lo + w * (i + 1), local);
  }
  return std::accumulate(parts.begin(), parts.end(), 0.0);
}

}  // namespace

double lambda0(const density::BetaParams& p) {
  density::validate_positive(p);
  if (p.alpha <= 0.5 || p.beta <= 0.5)
    throw std::domain_error("lambda0: needs alpha > 1/2 and beta > 1/2");
  return std::exp(special::ln_beta(2.0 * p.alpha - 1.0, 2.0 * p.beta - 1.0) -
                  2.0 * special::ln_beta(p.alpha, p.beta));
}

double square_closure_check(const density::BetaParams& p) {
  const double lam = lambda0(p);
  const density::BetaParams q{2.0 * p.alpha - 1.0, 2.0 * p.beta - 1.0};
  double dev = 0.0;
  for (int i = 0; i < 50; ++i) {
    const double t = (i + 0.5) / 50.0;
    const double f = density::pdf(p, t);
    dev = std::max(dev, std::fabs(f * f - lam * density::pdf(q, t)));
  }
  return dev;
}

double square_closure_lambda_std(const density::BetaParams& p) {
  const double lam = lambda0(p);
  const density::BetaParams q{2.0 * p.alpha - 1.0, 2.0 * p.beta - 1.0};
  const double Tp = density::standardize(p).T;
  const double Tq = density::standardize(q).T;
  return lam * Tq / (Tp * Tp);
}

double chi(const density::BetaParams& p) {
  density::validate_positive(p);
  if (p.alpha <= 1.5 || p.beta <= 1.5)
    throw std::domain_error("chi: needs alpha > 3/2 and beta > 3/2");
  const double a = p.alpha;
  const double b = p.beta;
  const double lnB2 = 2.0 * special::ln_beta(a, b);
  // three distinct beta arguments: expanding [(a-1) - (a+b-2) t]^2 against
  // t^{2a-4} (1-t)^{2b-4} shifts the first argument by 0, 1, 2
  return (a - 1.0) * (a - 1.0) * std::exp(special::ln_beta(2 * a - 3, 2 * b - 3) - lnB2) -
         2.0 * (a - 1.0) * (a + b - 2.0) * std::exp(special::ln_beta(2 * a - 2, 2 * b - 3) - lnB2) +
         (a + b - 2.0) * (a + b - 2.0) * std::exp(special::ln_beta(2 * a - 1, 2 * b - 3) - lnB2);
}

std::pair<double, double> energies(const density::BetaParams& p) {
  const double T = density::standardize(p).T;
  return {lambda0(p) / T, chi(p) / (T * T * T)};
}

std::pair<double, double> parseval_m_check(const density::BetaParams& p, double nu_max,
                                           const special::QuadratureConfig& cfg, Exec exec) {
  const double rhs = lambda0(p);
  if (!(nu_max > 0.0)) throw std::domain_error("parseval_m_check: nu_max must be positive");
  auto f = [&](double nu) { return std::norm(special::kummer_m_imag(p.alpha, p.beta, nu, cfg)); };
  // |M|^2 is even, so integrate the half line and fold the 1/(2 pi)
  const double lhs = panel_integral(f, 0.0, nu_max, 4.0, cfg, exec) / M_PI;
  return {lhs, rhs};
}

double parseval_tail_bound(const density::BetaParams& p, double nu_max) {
  density::validate_positive(p);
  if (!(nu_max > 0.0)) throw std::domain_error("parseval_tail_bound: nu_max must be positive");
  const auto st = density::stats(p);
  // peak of the unit-interval density; alpha = beta = 1 has no interior mode
  const double peak = st.mode ? density::pdf(p, *st.mode) : 1.0;
  return 4.0 * peak * peak / (M_PI * nu_max);
}

std::pair<double, double> admissibility(const density::BetaParams& p, double omega_max,
                                        const special::QuadratureConfig& cfg, Exec exec) {
  density::validate_positive(p);
  if (p.alpha <= 1.0 || p.beta <= 1.0)
    throw std::domain_error("admissibility: needs alpha > 1 and beta > 1");
  if (!(omega_max > 0.0)) throw std::domain_error("admissibility: omega_max must be positive");

  const auto g = density::standardize(p);
  const double closed = 2.0 * M_PI * lambda0(p) / g.T;

  const wavelet::WaveletSpec spec{p, 1};
  auto f = [&](double w) {
    if (w == 0.0) return 0.0;  // |Psi|^2/omega vanishes linearly at the origin
    return std::norm(spectral::spectrum_closed(spec, w, cfg)) / w;
  };
  const double half = panel_integral(f, 0.0, omega_max, 4.0 / g.T, cfg, exec);
  // the integrand is even in omega, so the full-line value is twice the half line
  return {closed, 2.0 * half};
}

EnergyReport report(const density::BetaParams& p, double nu_max, Exec exec) {
  EnergyReport r;
  r.alpha = p.alpha;
  r.beta = p.beta;
  const auto g = density::standardize(p);
  r.T = g.T;
  r.lambda0 = lambda0(p);
  r.chi = chi(p);
  std::tie(r.energy_scale, r.energy_wavelet) = energies(p);
  const auto adm = admissibility(p, nu_max / g.T, {}, exec);
  r.admissibility_closed = adm.first;
  r.admissibility_numeric = adm.second;
  return r;
}

}  // namespace betawt::energy
