// Acceptance gate: one self-contained check per shipping requirement, each
// printed as a single PASS/FAIL line. Exit status is the number of failures.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "betawt/cltsim.hpp"
#include "betawt/energy.hpp"
#include "betawt/spectral.hpp"
#include "betawt/transform.hpp"

namespace {

using namespace betawt;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof(buf), f, ap);
  va_end(ap);
  return buf;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<double> geometric(double lo, double hi, int n) {
  std::vector<double> s(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) s[i] = lo * std::pow(hi / lo, i / (n - 1.0));
  return s;
}

std::vector<double> uniform(double lo, double hi, int n) {
  std::vector<double> s(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) s[i] = lo + (hi - lo) * i / (n - 1.0);
  return s;
}

transform::Signal make_chirp(double f_lo, double f_hi, int n, double fs) {
  transform::Signal sig;
  sig.sample_rate = fs;
  sig.samples.resize(static_cast<std::size_t>(n));
  const double span = n / fs;
  const double rate = (f_hi - f_lo) / span;  // Hz per second
  for (int i = 0; i < n; ++i) {
    const double t = i / fs;
    sig.samples[i] = std::sin(2.0 * M_PI * (f_lo * t + 0.5 * rate * t * t));
  }
  return sig;
}

// ---------------------------------------------------------------------------

Outcome check_first_null() {
  const auto t0 = Clock::now();
  const auto r = spectral::find_first_null({3.0, 3.0}, 40.0, 1e-9);
  const double secs = seconds_since(t0);
  if (!r) return {false, "no null located in (0, 40]"};
  const double diff = std::fabs(r->nu - 11.526918406);
  return {diff <= 1e-6 && secs < 5.0,
          fmt("nu = %.10f, |diff| = %.2e (tol 1e-6), %.2f s (limit 5)", r->nu, diff, secs)};
}

Outcome check_haar_proximity() {
  const auto r = spectral::find_first_null({3.0, 3.0}, 40.0, 1e-9);
  if (!r) return {false, "no null located"};
  const double ref = 4.0 * M_PI;
  const double rel = std::fabs(r->nu - ref) / ref;
  return {rel <= 0.15, fmt("nu = %.6f vs 4*pi = %.6f, off by %.1f%% (limit 15%%)",
                           r->nu, ref, 100.0 * rel)};
}

Outcome check_parameter_symmetry() {
  const std::pair<double, double> pairs[] = {{2.0, 3.0}, {3.0, 5.0}, {4.0, 2.5}};
  double worst = 0.0;
  for (const auto& [a, b] : pairs) {
    const double T = density::standardize({a, b}).T;
    std::vector<double> omegas(257);
    for (int i = 0; i < 257; ++i) omegas[i] = 40.0 * i / 256.0 / T;
    const auto g1 = spectral::spectrum_grid({{a, b}, 1}, omegas);
    const auto g2 = spectral::spectrum_grid({{b, a}, 1}, omegas);
    double peak = 0.0, diff = 0.0;
    for (int i = 0; i < 257; ++i) {
      peak = std::max(peak, std::abs(g1[i].value));
      diff = std::max(diff, std::fabs(std::abs(g1[i].value) - std::abs(g2[i].value)));
    }
    worst = std::max(worst, diff / peak);
  }
  return {worst <= 1e-9, fmt("worst ||Psi(a,b)|-|Psi(b,a)|| = %.2e of peak (tol 1e-9)", worst)};
}

Outcome check_spectrum_vs_dft() {
  const wavelet::WaveletSpec specs[] = {{{3.0, 3.0}, 1}, {{5.0, 7.0}, 3}};
  const int n_samples = 16384;
  double worst = 0.0;
  for (const auto& spec : specs) {
    const auto w = wavelet::sample(spec, n_samples, wavelet::Part::Wavelet);
    const double T = wavelet::geometry(spec).T;
    std::vector<double> omegas(257);
    for (int i = 0; i < 257; ++i) omegas[i] = 40.0 * i / 256.0 / T;
    const auto closed = spectral::spectrum_grid(spec, omegas);
    double peak = 0.0;
    for (const auto& s : closed) peak = std::max(peak, std::abs(s.value));
    for (int i = 0; i < 257; ++i) {
      const double mag = std::abs(closed[i].value);
      if (mag < 1e-3 * peak) continue;
      const auto dft = spectral::spectrum_dft(w, omegas[i]);
      worst = std::max(worst, std::abs(closed[i].value - dft) / mag);
    }
  }
  return {worst <= 1e-4,
          fmt("worst rel diff = %.2e at %d samples (tol 1e-4)", worst, n_samples)};
}

Outcome check_standardization() {
  const double vals[] = {1.5, 2.0, 2.5, 3.0, 5.0, 8.0};
  const special::QuadratureConfig cfg{1e-11, 1e-11, 4000};
  double worst_mean = 0.0, worst_var = 0.0;
  for (double a : vals)
    for (double b : vals) {
      const density::BetaParams p{a, b};
      const auto g = density::standardize(p);
      const double m1 = special::integrate(
          [&](double t) { return t * density::std_pdf(p, t); }, g.a, g.b, cfg, 8);
      const double m2 = special::integrate(
          [&](double t) { return t * t * density::std_pdf(p, t); }, g.a, g.b, cfg, 8);
      worst_mean = std::max(worst_mean, std::fabs(m1));
      worst_var = std::max(worst_var, std::fabs(m2 - m1 * m1 - 1.0));
    }
  return {worst_mean <= 1e-8 && worst_var <= 1e-8,
          fmt("6x6 grid: worst |mean| = %.2e, worst |var - 1| = %.2e (tol 1e-8)",
              worst_mean, worst_var)};
}

Outcome check_wavelet_derivative_identity() {
  const wavelet::WaveletSpec specs[] = {
      {{3.0, 3.0}, 1}, {{4.0, 2.0}, 1}, {{5.0, 7.0}, 3}, {{8.0, 11.0}, 5}};
  double worst = 0.0;
  for (const auto& spec : specs) {
    const auto g = wavelet::geometry(spec);
    const int N = spec.order;
    // N-th central finite difference of the scale function, step h
    auto fd = [&](double t, double h) {
      double acc = 0.0, binom = 1.0;
      for (int k = 0; k <= N; ++k) {
        const double v = wavelet::scale_fn(spec, t + (0.5 * N - k) * h);
        acc += (k % 2 == 0) ? binom * v : -binom * v;
        binom = binom * (N - k) / (k + 1);
      }
      return acc / std::pow(h, N);
    };
    const double h = g.T / 40.0;
    for (int k = 0; k < 20; ++k) {
      const double t = g.a + g.T * (0.12 + 0.76 * (k + 0.371) / 20.0);
      const double f1 = fd(t, h), f2 = fd(t, h / 2.0), f4 = fd(t, h / 4.0);
      const double r1a = (4.0 * f2 - f1) / 3.0;
      const double r1b = (4.0 * f4 - f2) / 3.0;
      const double r2 = (16.0 * r1b - r1a) / 15.0;
      const double est = (N % 2 == 0) ? r2 : -r2;
      const double ref = wavelet::wavelet(spec, t);
      worst = std::max(worst, std::fabs(ref - est) / std::fabs(ref));
    }
  }
  return {worst <= 1e-4, fmt("worst rel diff = %.2e over 4 specs x 20 points (tol 1e-4)",
                             worst)};
}

Outcome check_vanishing_moments() {
  const wavelet::WaveletSpec specs[] = {
      {{2.5, 3.0}, 1}, {{3.0, 3.0}, 1}, {{3.0, 5.0}, 1}, {{5.0, 8.0}, 1},
      {{3.5, 4.0}, 2}, {{4.0, 4.0}, 2}, {{5.0, 7.0}, 2},
      {{4.5, 5.0}, 3}, {{5.0, 7.0}, 3}, {{6.0, 8.0}, 3},
      {{6.5, 7.0}, 5}, {{8.0, 11.0}, 5}};
  const special::QuadratureConfig cfg{1e-9, 1e-15, 8000};
  double worst = 0.0;
  for (const auto& spec : specs) {
    const auto g = wavelet::geometry(spec);
    for (int k = 0; k < spec.order; ++k) {
      const double I = special::integrate(
          [&](double t) { return std::pow(t, k) * wavelet::wavelet(spec, t); }, g.a,
          g.b, cfg, 8);
      worst = std::max(worst, std::fabs(I));
    }
  }
  return {worst <= 1e-7,
          fmt("worst |integral t^k psi| = %.2e over 12 specs (tol 1e-7)", worst)};
}

Outcome check_energy_constants() {
  const double l22 = energy::lambda0({2.0, 2.0});
  const double c22 = energy::chi({2.0, 2.0});
  const bool hand_ok = std::fabs(l22 - 1.2) <= 1e-10 && std::fabs(c22 - 12.0) <= 1e-10;

  const double vals[] = {2.0, 2.5, 3.0, 5.0};
  const special::QuadratureConfig cfg{1e-11, 1e-11, 4000};
  double worst = 0.0;
  for (double a : vals)
    for (double b : vals) {
      const density::BetaParams p{a, b};
      const auto [e_scale, e_wav] = energy::energies(p);
      const auto g = density::standardize(p);
      const double q_scale = special::integrate(
          [&](double t) {
            const double v = density::std_pdf(p, t);
            return v * v;
          },
          g.a, g.b, cfg, 4);
      const double q_wav = special::integrate(
          [&](double t) {
            const double v = wavelet::wavelet({p, 1}, t);
            return v * v;
          },
          g.a, g.b, cfg, 4);
      worst = std::max(worst, std::fabs(e_scale - q_scale) / q_scale);
      worst = std::max(worst, std::fabs(e_wav - q_wav) / q_wav);
    }
  return {hand_ok && worst <= 1e-7,
          fmt("lambda0(2,2) = %.12f, chi(2,2) = %.12f; worst energy rel diff = %.2e "
              "(tol 1e-7)",
              l22, c22, worst)};
}

Outcome check_parseval() {
  bool ok = true;
  std::string detail;
  for (const auto& p : {density::BetaParams{2.0, 2.0}, density::BetaParams{3.0, 3.0}}) {
    const auto [lhs, rhs] = energy::parseval_m_check(p, 500.0);
    const double bound = energy::parseval_tail_bound(p, 500.0);
    const double diff = std::fabs(lhs - rhs);
    ok = ok && diff <= bound + 1e-6;
    if (!detail.empty()) detail += "; ";
    detail += fmt("(%g,%g): |diff| = %.2e, bound = %.2e", p.alpha, p.beta, diff, bound);
  }
  return {ok, detail};
}

Outcome check_admissibility() {
  bool ok = true;
  std::string detail;
  for (const auto& p : {density::BetaParams{2.0, 2.0}, density::BetaParams{3.0, 3.0}}) {
    const double T = density::standardize(p).T;
    const auto [closed, n1] = energy::admissibility(p, 500.0 / T);
    const auto n2 = energy::admissibility(p, 1000.0 / T).second;
    ok = ok && std::isfinite(n1) && std::isfinite(n2) && std::isfinite(closed) &&
         std::fabs(n2 - n1) <= 1e-3 * n1;
    if (!detail.empty()) detail += "; ";
    detail += fmt("(%g,%g): numeric %.6f -> %.6f on doubling, closed form %.6f",
                  p.alpha, p.beta, n1, n2, closed);
  }
  return {ok, detail};
}

Outcome check_cwt_equivalence() {
  // The blur-derivative route differences the density across the scaled
  // support endpoints, so cells whose stencil straddles an endpoint are only
  // accurate when the density's edge exponent min(alpha,beta)-1-N is >= 3.
  // (6,6) is the smallest symmetric pair satisfying that for both orders
  // tested here; at (3,3) the order-2 kernel jumps at the endpoints and no
  // step size bounds the worst masked cell below ~1e0.
  const auto t0 = Clock::now();
  const double fs = 512.0;
  const auto chirp = make_chirp(4.0, 40.0, 4096, fs);
  const auto fsk =
      transform::make_fsk_signal(8.0, 16.0, {0, 1, 0, 1, 0, 1, 0, 1}, 512, fs);
  const double t_end = 4095.0 / fs;
  const double T = density::standardize({6.0, 6.0}).T;

  struct Case {
    const char* name;
    const transform::Signal* sig;
    double s_lo, s_hi;
  };
  const Case cases[] = {{"chirp", &chirp, 0.003, 0.05}, {"fsk", &fsk, 0.004, 0.06}};

  double worst = 0.0;
  for (const auto& c : cases) {
    transform::ScaleShiftGrid grid;
    grid.scales = geometric(c.s_lo, c.s_hi, 16);
    grid.shifts = uniform(0.0, t_end, 128);
    for (int N : {1, 2}) {
      const wavelet::WaveletSpec spec{{6.0, 6.0}, N};
      const auto direct = transform::cwt_direct(*c.sig, spec, grid);
      const double h = grid.scales.front() * T / 256.0;
      const auto blurred = transform::cwt_blur_derivative(*c.sig, spec, grid, h);
      double peak = 0.0;
      for (std::size_t si = 0; si < grid.scales.size(); ++si)
        for (std::size_t ti = 0; ti < grid.shifts.size(); ++ti)
          if (direct.validity_mask[si][ti] && blurred.validity_mask[si][ti])
            peak = std::max(peak, std::fabs(direct.coefficients[si][ti]));
      for (std::size_t si = 0; si < grid.scales.size(); ++si)
        for (std::size_t ti = 0; ti < grid.shifts.size(); ++ti) {
          if (!direct.validity_mask[si][ti] || !blurred.validity_mask[si][ti]) continue;
          const double d = direct.coefficients[si][ti];
          if (std::fabs(d) < 1e-2 * peak) continue;
          worst = std::max(worst,
                           std::fabs(d - blurred.coefficients[si][ti]) / std::fabs(d));
        }
    }
  }
  const double secs = seconds_since(t0);
  return {worst <= 1e-3 && secs < 60.0,
          fmt("worst rel diff = %.2e over chirp+fsk, (6,6) N in {1,2} (tol 1e-3), "
              "%.1f s (limit 60)",
              worst, secs)};
}

Outcome check_clt_convergence() {
  const auto t0 = Clock::now();
  const auto u = cltsim::make_uniform(2048);
  std::vector<double> l2s;
  for (int n : {2, 4, 8, 16}) {
    const auto folded = cltsim::normalize_unit(cltsim::self_convolve(u, n));
    l2s.push_back(cltsim::fit_and_distance(folded).second);
  }
  const double secs = seconds_since(t0);
  const bool decreasing = l2s[1] < l2s[0] && l2s[2] < l2s[1] && l2s[3] < l2s[2];
  const bool strong = l2s[3] < l2s[0] / 3.0;
  return {decreasing && strong && secs < 10.0,
          fmt("l2 = %.5f, %.5f, %.5f, %.5f for n = 2,4,8,16; %.1f s (limit 10)", l2s[0],
              l2s[1], l2s[2], l2s[3], secs)};
}

Outcome check_fsk_discrimination() {
  const std::vector<int> bits{0, 1, 0, 1, 0, 1, 0, 1};
  const double fs = 512.0;
  const auto sig = transform::make_fsk_signal(8.0, 16.0, bits, 512, fs);
  transform::ScaleShiftGrid grid;
  grid.scales = geometric(0.004, 0.06, 16);
  grid.shifts = uniform(0.0, 4095.0 / fs, 128);
  const auto sg = transform::cwt_direct(sig, {{3.0, 3.0}, 1}, grid);

  // mean |coefficient| per scale over the middle half of each bit interval
  const std::size_t ns = grid.scales.size();
  std::vector<double> resp0(ns, 0.0), resp1(ns, 0.0);
  std::vector<int> cnt0(ns, 0), cnt1(ns, 0);
  for (std::size_t ti = 0; ti < grid.shifts.size(); ++ti) {
    const double tau = grid.shifts[ti];
    const auto j = static_cast<std::size_t>(tau);  // 1 s per bit
    if (j >= bits.size()) continue;
    const double frac = tau - static_cast<double>(j);
    if (frac < 0.25 || frac > 0.75) continue;
    for (std::size_t si = 0; si < ns; ++si) {
      if (!sg.validity_mask[si][ti]) continue;
      (bits[j] ? resp1 : resp0)[si] += std::fabs(sg.coefficients[si][ti]);
      ++(bits[j] ? cnt1 : cnt0)[si];
    }
  }
  auto argmax_scale = [&](const std::vector<double>& r, const std::vector<int>& c) {
    double best = -1.0;
    std::size_t bi = 0;
    for (std::size_t si = 0; si < ns; ++si)
      if (c[si] > 0 && r[si] / c[si] > best) {
        best = r[si] / c[si];
        bi = si;
      }
    return grid.scales[bi];
  };
  const double s0 = argmax_scale(resp0, cnt0);
  const double s1 = argmax_scale(resp1, cnt1);
  return {s1 < s0, fmt("peak scale %.5f during 1-bits (16 Hz) vs %.5f during 0-bits "
                       "(8 Hz)",
                       s1, s0)};
}

}  // namespace

int main() {
  struct Check {
    const char* label;
    std::function<Outcome()> fn;
  };
  const Check checks[] = {
      {"first spectral null of (3,3)", check_first_null},
      {"proximity of the (3,3) null to 4*pi", check_haar_proximity},
      {"spectrum magnitude symmetric under parameter swap", check_parameter_symmetry},
      {"closed-form spectrum matches sampled transform", check_spectrum_vs_dft},
      {"standardized density has mean 0, variance 1", check_standardization},
      {"wavelet equals signed derivative of scale function", check_wavelet_derivative_identity},
      {"vanishing moments below the wavelet order", check_vanishing_moments},
      {"energy constants match quadrature", check_energy_constants},
      {"truncated Parseval sum within tail bound", check_parseval},
      {"admissibility integral finite and stable", check_admissibility},
      {"direct and blur-derivative transforms agree", check_cwt_equivalence},
      {"self-convolved uniform converges to beta fit", check_clt_convergence},
      {"FSK peak-response scale discriminates carriers", check_fsk_discrimination},
  };

  int failures = 0;
  const int total = static_cast<int>(std::size(checks));
  for (int i = 0; i < total; ++i) {
    const auto t0 = Clock::now();
    Outcome oc;
    try {
      oc = checks[i].fn();
    } catch (const std::exception& e) {
      oc = {false, std::string("exception: ") + e.what()};
    }
    std::printf("[%2d/%d] %s %s: %s (%.2f s)\n", i + 1, total,
                oc.pass ? "PASS" : "FAIL", checks[i].label, oc.detail.c_str(),
                seconds_since(t0));
    std::fflush(stdout);
    if (!oc.pass) ++failures;
  }
  if (failures == 0)
    std::printf("all %d checks passed\n", total);
  else
    std::printf("%d of %d checks FAILED\n", failures, total);
  return failures;
}
