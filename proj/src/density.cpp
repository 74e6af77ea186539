#include "betawt/density.hpp"

#include <cmath>

namespace betawt::density {

void validate_positive(const BetaParams& p) {
  if (!std::isfinite(p.alpha) || !std::isfinite(p.beta) || p.alpha <= 0.0 || p.beta <= 0.0)
    throw std::domain_error("beta params: alpha and beta must be finite and positive");
}

void validate(const BetaParams& p) {
  validate_positive(p);
  if (p.alpha < 1.0 || p.beta < 1.0)
    throw std::domain_error("beta params: alpha and beta must be at least 1");
}

double pdf(const BetaParams& p, double t) {
  validate_positive(p);
  if (!(t >= 0.0) || t > 1.0) return 0.0;
  const double ea = p.alpha - 1.0;
  const double eb = p.beta - 1.0;
  const double lnB = special::ln_beta(p.alpha, p.beta);
  if (t == 0.0) {
    if (ea > 0.0) return 0.0;
    if (ea == 0.0) return std::exp(-lnB);
    return HUGE_VAL;  // exponent below zero, the density diverges here
  }
  if (t == 1.0) {
    if (eb > 0.0) return 0.0;
    if (eb == 0.0) return std::exp(-lnB);
    return HUGE_VAL;
  }
  return std::exp(ea * std::log(t) + eb * std::log1p(-t) - lnB);
}

DistributionStats stats(const BetaParams& p) {
  validate_positive(p);
  const double ab = p.alpha + p.beta;
  DistributionStats s;
  s.mean = p.alpha / ab;
  s.variance = p.alpha * p.beta / (ab * ab * (ab + 1.0));
  if (p.alpha > 1.0 && p.beta > 1.0) s.mode = (p.alpha - 1.0) / (ab - 2.0);
  return s;
}

double moment(const BetaParams& p, int n) {
  validate_positive(p);
  if (n < 0) throw std::domain_error("moment: order must be non-negative");
  if (n == 0) return 1.0;
  return std::exp(special::ln_beta(p.alpha + n, p.beta) - special::ln_beta(p.alpha, p.beta));
}

double pdf_derivative(const BetaParams& p, double t) {
  validate_positive(p);
  if (p.alpha <= 1.0 || p.beta <= 1.0)
    throw std::domain_error("pdf_derivative: needs alpha > 1 and beta > 1");
  if (!(t >= 0.0) || t > 1.0) return 0.0;
  if (t == 0.0) {
    // d/dt [t^{a-1}(1-t)^{b-1}]/B -> (a-1) t^{a-2}/B as t -> 0+
    if (p.alpha > 2.0) return 0.0;
    if (p.alpha == 2.0) return std::exp(-special::ln_beta(p.alpha, p.beta));
    throw std::domain_error("pdf_derivative: one-sided limit at t=0 is infinite");
  }
  if (t == 1.0) {
    if (p.beta > 2.0) return 0.0;
    if (p.beta == 2.0) return -std::exp(-special::ln_beta(p.alpha, p.beta));
    throw std::domain_error("pdf_derivative: one-sided limit at t=1 is infinite");
  }
  return ((p.alpha - 1.0) / t - (p.beta - 1.0) / (1.0 - t)) * pdf(p, t);
}

SupportGeometry standardize(const BetaParams& p) {
  validate_positive(p);
  const double ab = p.alpha + p.beta;
  const double s = std::sqrt(ab + 1.0);
  SupportGeometry g;
  g.a = -std::sqrt(p.alpha / p.beta) * s;
  g.b = std::sqrt(p.beta / p.alpha) * s;
  g.T = ab * std::sqrt((ab + 1.0) / (p.alpha * p.beta));
  g.m = p.alpha / ab;
  return g;
}

double std_pdf(const BetaParams& p, double t) {
  validate_positive(p);
  const SupportGeometry g = standardize(p);
  if (t < g.a || t > g.b) return 0.0;
  const double ea = p.alpha - 1.0;
  const double eb = p.beta - 1.0;
  const double lnC =
      -special::ln_beta(p.alpha, p.beta) - (p.alpha + p.beta - 1.0) * std::log(g.T);
  const double u = t - g.a;
  const double v = g.b - t;
  if (u == 0.0) {
    if (ea > 0.0) return 0.0;
    if (ea == 0.0) return std::exp(lnC + eb * std::log(v));
    return HUGE_VAL;
  }
  if (v == 0.0) {
    if (eb > 0.0) return 0.0;
    if (eb == 0.0) return std::exp(lnC + ea * std::log(u));
    return HUGE_VAL;
  }
  return std::exp(lnC + ea * std::log(u) + eb * std::log(v));
}

BetaParams clt_fit(double mean, double variance) {
  if (!std::isfinite(mean) || !(mean > 0.0) || !(mean < 1.0))
    throw std::domain_error("clt_fit: mean must lie in (0, 1)");
  const double cap = mean * (1.0 - mean);
  if (!std::isfinite(variance) || !(variance > 0.0) || !(variance < cap))
    throw std::domain_error("clt_fit: variance must lie in (0, mean*(1-mean))");
  const double nu = cap / variance - 1.0;
  return {mean * nu, (1.0 - mean) * nu};
}

}  // namespace betawt::density
