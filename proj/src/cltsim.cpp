#include "betawt/cltsim.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace betawt::cltsim {

GriddedDensity make_uniform(int n) {
  if (n < 2) throw std::domain_error("make_uniform: need at least 2 grid points");
  GriddedDensity p;
  p.lo = 0.0;
  p.hi = 1.0;
  p.dx = 1.0 / (n - 1);
  p.values.assign(static_cast<std::size_t>(n), 1.0);
  const double m = mass(p);
  for (double& v : p.values) v /= m;
  return p;
}

double mass(const GriddedDensity& p) {
  double acc = 0.0;
  for (double v : p.values) acc += v;
  return acc * p.dx;
}

double grid_mean(const GriddedDensity& p) {
  double acc = 0.0;
  for (std::size_t i = 0; i < p.values.size(); ++i)
    acc += (p.lo + static_cast<double>(i) * p.dx) * p.values[i];
  return acc * p.dx;
}

double grid_variance(const GriddedDensity& p) {
  const double m = grid_mean(p);
  double acc = 0.0;
  for (std::size_t i = 0; i < p.values.size(); ++i) {
    const double d = p.lo + static_cast<double>(i) * p.dx - m;
    acc += d * d * p.values[i];
  }
  return acc * p.dx;
}

GriddedDensity convolve(const GriddedDensity& p, const GriddedDensity& q, Exec exec) {
  if (p.values.size() < 2 || q.values.size() < 2)
    throw std::invalid_argument("convolve: operands need at least 2 points");
  const double ref = std::max(p.dx, q.dx);
  if (std::fabs(p.dx - q.dx) > 1e-12 * ref)
    throw std::invalid_argument("convolve: grid spacings differ");

  GriddedDensity out;
  out.dx = p.dx;
  out.lo = p.lo + q.lo;
  const std::int64_t np = static_cast<std::int64_t>(p.values.size());
  const std::int64_t nq = static_cast<std::int64_t>(q.values.size());
  const std::int64_t n = np + nq - 1;
  out.hi = out.lo + static_cast<double>(n - 1) * out.dx;
  out.values.assign(static_cast<std::size_t>(n), 0.0);

  auto one = [&](std::int64_t k) {
    const std::int64_t i_lo = std::max<std::int64_t>(0, k - nq + 1);
    const std::int64_t i_hi = std::min<std::int64_t>(np - 1, k);
    double acc = 0.0;
    for (std::int64_t i = i_lo; i <= i_hi; ++i)
      acc += p.values[static_cast<std::size_t>(i)] *
             q.values[static_cast<std::size_t>(k - i)];
    out.values[static_cast<std::size_t>(k)] = acc * out.dx;
  };

  if (exec == Exec::Parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (std::int64_t k = 0; k < n; ++k) one(k);
  } else {
    for (std::int64_t k = 0; k < n; ++k) one(k);
  }

  // the Riemann product loses a bit of mass at the ends; rescale so each
  // fold hands a unit-mass density to the next
  const double m = mass(out);
  if (!(m > 0.0)) throw std::invalid_argument("convolve: degenerate result");
  for (double& v : out.values) v /= m;
  return out;
}

GriddedDensity self_convolve(const GriddedDensity& p, int n, Exec exec) {
  if (n < 1) throw std::domain_error("self_convolve: need n >= 1");
  GriddedDensity out = p;
  for (int i = 1; i < n; ++i) out = convolve(out, p, exec);
  return out;
}

GriddedDensity normalize_unit(const GriddedDensity& p) {
  const double L = p.hi - p.lo;
  if (!(L > 0.0)) throw std::invalid_argument("normalize_unit: degenerate support");
  GriddedDensity out;
  out.lo = 0.0;
  out.hi = 1.0;
  out.dx = p.dx / L;
  out.values.resize(p.values.size());
  for (std::size_t i = 0; i < p.values.size(); ++i) out.values[i] = p.values[i] * L;
  const double m = mass(out);
  for (double& v : out.values) v /= m;
  return out;
}

std::pair<density::BetaParams, double> fit_and_distance(const GriddedDensity& p) {
  if (std::fabs(p.lo) > 1e-9 || std::fabs(p.hi - 1.0) > 1e-9)
    throw std::invalid_argument("fit_and_distance: density must live on [0, 1]");
  const auto fit = density::clt_fit(grid_mean(p), grid_variance(p));
  // endpoints excluded: a fitted shape parameter slightly below 1 makes the
  // beta pdf diverge at the matching endpoint while the grid value is finite
  double acc = 0.0;
  for (std::size_t i = 1; i + 1 < p.values.size(); ++i) {
    const double t = p.lo + static_cast<double>(i) * p.dx;
    const double d = p.values[i] - density::pdf(fit, t);
    acc += d * d;
  }
  return {fit, std::sqrt(acc * p.dx)};
}

}  // namespace betawt::cltsim
