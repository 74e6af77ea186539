#pragma once

#include <utility>

#include "betawt/density.hpp"
#include "betawt/exec.hpp"

namespace betawt::energy {

// Closed-form constants of one parameter pair, each backed by a quadrature
// oracle in the tests. Serializes to a flat JSON object.
struct EnergyReport {
  double alpha = 0.0;
  double beta = 0.0;
  double T = 0.0;
  double lambda0 = 0.0;
  double chi = 0.0;
  double energy_scale = 0.0;
  double energy_wavelet = 0.0;
  double admissibility_closed = 0.0;
  double admissibility_numeric = 0.0;
};

// L2 norm of the unit-interval density: B(2a-1, 2b-1) / B(a, b)^2.
// Requires alpha > 1/2 and beta > 1/2.
double lambda0(const density::BetaParams& p);

// The squared density is proportional to the (2a-1, 2b-1) density; returns
// the max pointwise deviation |pdf^2 - lambda0 * pdf_(2a-1,2b-1)| over a
// 50-point grid on (0, 1). Zero up to rounding.
double square_closure_check(const density::BetaParams& p);

// The same closure on standardized supports needs an affine map between the
// two (different-length) supports; this is its proportionality constant,
//   lambda0 * T(2a-1, 2b-1) / T(a, b)^2.
double square_closure_lambda_std(const density::BetaParams& p);

// L2 norm of the unit-interval density's derivative,
//   [ (a-1)^2 B(2a-3,2b-3) - 2(a-1)(a+b-2) B(2a-2,2b-3)
//     + (a+b-2)^2 B(2a-1,2b-3) ] / B(a,b)^2.
// Requires alpha > 3/2 and beta > 3/2.
double chi(const density::BetaParams& p);

// Energies of the standardized density and of its first-order wavelet:
// (lambda0 / T, chi / T^3).
std::pair<double, double> energies(const density::BetaParams& p);

// Truncated Parseval check on the characteristic function:
// lhs = (1/2pi) int_{-nu_max}^{nu_max} |M|^2 dnu, rhs = lambda0.
std::pair<double, double> parseval_m_check(const density::BetaParams& p, double nu_max,
                                           const special::QuadratureConfig& cfg = {},
                                           Exec exec = Exec::Parallel);

// Bound on the truncation tail above: |M(i nu)| <= 2 max(pdf) / nu gives
// tail <= 4 max(pdf)^2 / (pi nu_max).
double parseval_tail_bound(const density::BetaParams& p, double nu_max);

// first: 2 pi lambda0 / T, the closed-form constant quoted for the
// admissibility integral. second: the definition itself,
// int_R |Psi(omega)|^2 / |omega| domega (first-order wavelet), truncated at
// |omega| <= omega_max. The two are deliberately reported side by side and
// are not equal; tests only pin finiteness and stability of the numeric one.
std::pair<double, double> admissibility(const density::BetaParams& p, double omega_max,
                                        const special::QuadratureConfig& cfg = {},
                                        Exec exec = Exec::Parallel);

// Assembles the full report; truncations run at nu_max (admissibility at
// omega_max = nu_max / T).
EnergyReport report(const density::BetaParams& p, double nu_max = 500.0,
                    Exec exec = Exec::Parallel);

}  // namespace betawt::energy
