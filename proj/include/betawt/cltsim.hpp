#pragma once

#include <utility>
#include <vector>

#include "betawt/density.hpp"
#include "betawt/exec.hpp"

namespace betawt::cltsim {

// Density sampled on a uniform grid with both endpoints included;
// dx = (hi - lo) / (len - 1). Mass is the plain Riemann sum sum(values)*dx.
struct GriddedDensity {
  double lo;
  double hi;
  std::vector<double> values;
  double dx;
};

// Uniform density on [0, 1] with n grid points, normalized to unit mass.
GriddedDensity make_uniform(int n);

double mass(const GriddedDensity& p);
double grid_mean(const GriddedDensity& p);
double grid_variance(const GriddedDensity& p);

// Direct discrete convolution scaled by dx, renormalized to unit mass.
// Supports add: [p.lo + q.lo, p.hi + q.hi]. The grids must share dx.
GriddedDensity convolve(const GriddedDensity& p, const GriddedDensity& q,
                        Exec exec = Exec::Parallel);

// n-fold convolution power of p (n = 1 returns p unchanged).
GriddedDensity self_convolve(const GriddedDensity& p, int n, Exec exec = Exec::Parallel);

// Affine rescale of the support to [0, 1] with the Jacobian folded into the
// values; mass stays 1.
GriddedDensity normalize_unit(const GriddedDensity& p);

// Moment-matched beta fit of a [0, 1] density plus the L2 distance
// sqrt(int (p - fit)^2 dt) from it, summed over interior grid points (the
// fitted density can diverge at the endpoints when a fitted exponent dips
// below 1).
std::pair<density::BetaParams, double> fit_and_distance(const GriddedDensity& p);

}  // namespace betawt::cltsim
