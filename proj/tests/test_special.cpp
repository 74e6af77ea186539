#include <doctest.h>

#include <cmath>
#include <complex>
#include <limits>
#include <random>

#include "betawt/special.hpp"

using namespace betawt;

namespace {

// Power series of M(a, a+b, i nu), truncated when terms drop below 1e-14.
// Independent of the quadrature route the library takes.
std::complex<double> kummer_series(double a, double b, double nu) {
  const std::complex<double> z{0.0, nu};
  std::complex<double> term{1.0, 0.0};
  std::complex<double> acc{1.0, 0.0};
  for (int k = 0; k < 500 && std::abs(term) > 1e-14; ++k) {
    term *= (a + k) / (a + b + k) * z / static_cast<double>(k + 1);
    acc += term;
  }
  return acc;
}

}  // namespace

TEST_SUITE("special") {

TEST_CASE("ln_gamma hits anchor values") {
  CHECK(std::fabs(special::ln_gamma(1.0)) < 1e-14);
  CHECK(std::fabs(special::ln_gamma(2.0)) < 1e-14);
  CHECK(special::ln_gamma(0.5) == doctest::Approx(0.5 * std::log(M_PI)).epsilon(1e-14));
  CHECK(special::ln_gamma(5.0) == doctest::Approx(std::log(24.0)).epsilon(1e-14));
}

TEST_CASE("ln_gamma agrees with the standard library") {
  for (double x : {0.07, 0.3, 0.9, 1.5, 3.7, 8.2, 15.5, 42.0, 123.4}) {
    const double ref = std::lgamma(x);
    CHECK(std::fabs(special::ln_gamma(x) - ref) <= 1e-12 * std::max(1.0, std::fabs(ref)));
  }
}

TEST_CASE("ln_gamma satisfies the recurrence ln G(x+1) = ln G(x) + ln x") {
  std::mt19937 rng(42);
  std::uniform_real_distribution<double> dist(0.51, 25.0);
  for (int i = 0; i < 200; ++i) {
    const double x = dist(rng);
    const double lhs = special::ln_gamma(x + 1.0);
    const double rhs = special::ln_gamma(x) + std::log(x);
    CHECK(std::fabs(lhs - rhs) <= 1e-12 * std::max(1.0, std::fabs(lhs)));
  }
}

TEST_CASE("ln_gamma rejects non-positive input") {
  CHECK_THROWS_AS(special::ln_gamma(0.0), std::domain_error);
  CHECK_THROWS_AS(special::ln_gamma(-3.0), std::domain_error);
  CHECK_THROWS_AS(special::ln_gamma(std::numeric_limits<double>::quiet_NaN()),
                  std::domain_error);
}

TEST_CASE("beta function identities") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> dist(0.2, 12.0);
  for (int i = 0; i < 100; ++i) {
    const double a = dist(rng), b = dist(rng);
    CHECK(special::ln_beta(a, b) == doctest::Approx(special::ln_beta(b, a)).epsilon(1e-13));
    // B(a+1, b) = B(a, b) * a / (a + b)
    CHECK(special::beta_fn(a + 1.0, b) ==
          doctest::Approx(special::beta_fn(a, b) * a / (a + b)).epsilon(1e-12));
  }
  for (double a : {0.7, 2.0, 9.25})
    CHECK(special::beta_fn(a, 1.0) == doctest::Approx(1.0 / a).epsilon(1e-13));
  CHECK(special::beta_fn(2.2, 3.3) ==
        doctest::Approx(0.0564856913732825668).epsilon(1e-13));
  CHECK_THROWS_AS(special::ln_beta(0.0, 1.0), std::domain_error);
}

TEST_CASE("quadrature reproduces known integrals") {
  CHECK(special::integrate([](double t) { return t * t * t * t * t; }, 0.0, 1.0) ==
        doctest::Approx(1.0 / 6.0).epsilon(1e-14));
  CHECK(special::integrate([](double t) { return std::sin(t); }, 0.0, M_PI) ==
        doctest::Approx(2.0).epsilon(1e-12));
  // the beta integral with non-integer exponents
  CHECK(special::integrate(
            [](double t) { return std::pow(t, 1.2) * std::pow(1.0 - t, 2.3); }, 0.0,
            1.0) == doctest::Approx(0.0564856913732825668).epsilon(1e-10));
}

TEST_CASE("quadrature is linear") {
  auto f = [](double t) { return std::exp(t); };
  auto g = [](double t) { return std::cos(t); };
  const double combo =
      special::integrate([&](double t) { return 2.0 * f(t) + 3.0 * g(t); }, 0.0, 2.0);
  const double parts =
      2.0 * special::integrate(f, 0.0, 2.0) + 3.0 * special::integrate(g, 0.0, 2.0);
  CHECK(combo == doctest::Approx(parts).epsilon(1e-12));
}

TEST_CASE("seeded panels handle a fast oscillation") {
  const double got = special::integrate([](double t) { return std::sin(50.0 * t); },
                                        0.0, 20.0, {1e-11, 1e-11, 4000}, 160);
  const double exact = (1.0 - std::cos(1000.0)) / 50.0;
  CHECK(std::fabs(got - exact) < 1e-9);
}

TEST_CASE("quadrature failure modes") {
  CHECK_THROWS_AS(special::integrate([](double t) { return std::sin(50.0 * t); }, 0.0,
                                     20.0, {1e-12, 1e-12, 1}),
                  special::convergence_error);
  CHECK_THROWS_AS(special::integrate(
                      [](double t) {
                        return t < 0.5 ? std::numeric_limits<double>::quiet_NaN() : 1.0;
                      },
                      0.0, 1.0),
                  special::nonfinite_error);
  CHECK_THROWS_AS(special::integrate([](double) { return 1.0; }, 1.0, 0.0),
                  std::domain_error);
  CHECK_THROWS_AS(special::integrate([](double) { return 1.0; }, 0.0, 1.0,
                                     {0.0, 1e-10, 100}),
                  std::domain_error);
}

TEST_CASE("kummer function matches its power series") {
  struct Probe {
    double alpha, beta, nu;
  };
  for (const auto& pr : {Probe{3.0, 3.0, 1.0}, Probe{2.0, 2.0, 0.5},
                         Probe{2.5, 3.5, 3.0}, Probe{4.0, 2.0, 7.25}}) {
    const auto got = special::kummer_m_imag(pr.alpha, pr.beta, pr.nu);
    const auto ref = kummer_series(pr.alpha, pr.beta, pr.nu);
    CHECK(std::abs(got - ref) < 1e-12);
  }
}

TEST_CASE("kummer function hits frozen anchors") {
  const auto m1 = special::kummer_m_imag(3.0, 3.0, 1.0);
  CHECK(m1.real() == doctest::Approx(0.862019860681396126).epsilon(1e-12));
  CHECK(m1.imag() == doctest::Approx(0.470923596185044120).epsilon(1e-12));
  const auto m2 = special::kummer_m_imag(2.0, 2.0, 0.5);
  CHECK(m2.real() == doctest::Approx(0.962870220634542839).epsilon(1e-12));
  CHECK(m2.imag() == doctest::Approx(0.245861132023347246).epsilon(1e-12));
  const auto m3 = special::kummer_m_imag(2.5, 3.5, 3.0);
  CHECK(m3.real() == doctest::Approx(0.274590108785473198).epsilon(1e-12));
  CHECK(m3.imag() == doctest::Approx(0.807800427058235965).epsilon(1e-12));
}

TEST_CASE("kummer function basic structure") {
  // characteristic function at zero frequency is exactly the density's mass
  const auto m0 = special::kummer_m_imag(2.7, 4.1, 0.0);
  CHECK(m0.real() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::fabs(m0.imag()) < 1e-14);

  // negating nu conjugates
  const auto plus = special::kummer_m_imag(3.0, 5.0, 2.25);
  const auto minus = special::kummer_m_imag(3.0, 5.0, -2.25);
  CHECK(minus.real() == doctest::Approx(plus.real()).epsilon(1e-14));
  CHECK(minus.imag() == doctest::Approx(-plus.imag()).epsilon(1e-14));

  // swapping the parameters preserves the magnitude (Kummer transformation)
  for (double nu : {1.0, 4.5, 13.0}) {
    const double m_ab = std::abs(special::kummer_m_imag(2.0, 5.0, nu));
    const double m_ba = std::abs(special::kummer_m_imag(5.0, 2.0, nu));
    CHECK(m_ab == doctest::Approx(m_ba).epsilon(1e-12));
  }
}

TEST_CASE("kummer function stays accurate at large nu") {
  const auto m = special::kummer_m_imag(3.0, 3.0, 200.0);
  CHECK(std::isfinite(m.real()));
  CHECK(std::isfinite(m.imag()));
  // |M(i nu)| <= 2 max(pdf) / nu = 2 * 1.875 / 200
  CHECK(std::abs(m) < 0.02);
  CHECK_THROWS_AS(special::kummer_m_imag(-1.0, 2.0, 1.0), std::domain_error);
}

}  // TEST_SUITE
