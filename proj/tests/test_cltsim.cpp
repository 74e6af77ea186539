#include <doctest.h>

#include <cmath>
#include <vector>

#include "betawt/cltsim.hpp"
#include "betawt/density.hpp"

using namespace betawt;

TEST_SUITE("cltsim") {

TEST_CASE("uniform start density") {
  const auto u = cltsim::make_uniform(101);
  CHECK(u.lo == 0.0);
  CHECK(u.hi == 1.0);
  REQUIRE(u.values.size() == 101);
  CHECK(cltsim::mass(u) == doctest::Approx(1.0).epsilon(1e-14));
  for (double v : u.values) CHECK(v == u.values.front());
  CHECK(cltsim::grid_mean(u) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(cltsim::grid_variance(u) ==
        doctest::Approx(102.0 / (12.0 * 100.0)).epsilon(1e-12));
  CHECK_THROWS_AS(cltsim::make_uniform(1), std::domain_error);
}

TEST_CASE("convolving with a grid delta reproduces the density") {
  const auto p = cltsim::make_uniform(101);
  cltsim::GriddedDensity q;
  q.lo = 0.0;
  q.hi = 0.1;
  q.dx = 0.01;
  q.values.assign(11, 0.0);
  q.values[0] = 100.0;  // unit mass concentrated in the first cell

  const auto c = cltsim::convolve(p, q);
  CHECK(c.lo == 0.0);
  CHECK(c.hi == doctest::Approx(1.1).epsilon(1e-12));
  REQUIRE(c.values.size() == 111);
  for (std::size_t i = 0; i < 101; ++i)
    CHECK(c.values[i] == doctest::Approx(p.values[i]).epsilon(1e-13));
  for (std::size_t i = 101; i < 111; ++i) CHECK(std::fabs(c.values[i]) < 1e-15);
}

TEST_CASE("two uniforms convolve to an exact discrete triangle") {
  const auto u = cltsim::make_uniform(64);
  const auto t = cltsim::convolve(u, u);
  REQUIRE(t.values.size() == 127);
  CHECK(t.lo == 0.0);
  CHECK(t.hi == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(cltsim::mass(t) == doctest::Approx(1.0).epsilon(1e-13));
  for (std::size_t k = 0; k < 64; ++k)
    CHECK(t.values[k] / t.values[0] ==
          doctest::Approx(static_cast<double>(k + 1)).epsilon(1e-12));
  // mirror halves see the same count of identical products, so the symmetry
  // is exact down to the bit
  for (std::size_t k = 0; k < 127; ++k) CHECK(t.values[k] == t.values[126 - k]);
}

TEST_CASE("single fold is the identity") {
  const auto u = cltsim::make_uniform(64);
  const auto same = cltsim::self_convolve(u, 1);
  CHECK(same.lo == u.lo);
  CHECK(same.hi == u.hi);
  REQUIRE(same.values.size() == u.values.size());
  for (std::size_t i = 0; i < u.values.size(); ++i)
    CHECK(same.values[i] == u.values[i]);
  CHECK_THROWS_AS(cltsim::self_convolve(u, 0), std::domain_error);
}

TEST_CASE("means and variances add under convolution") {
  const auto u = cltsim::make_uniform(256);
  const auto t = cltsim::convolve(u, u);
  const auto w = cltsim::convolve(t, u);
  CHECK(cltsim::grid_mean(w) ==
        doctest::Approx(cltsim::grid_mean(t) + cltsim::grid_mean(u)).epsilon(1e-12));
  CHECK(cltsim::grid_variance(w) ==
        doctest::Approx(cltsim::grid_variance(t) + cltsim::grid_variance(u))
            .epsilon(1e-12));
}

TEST_CASE("mismatched spacings are rejected") {
  const auto p = cltsim::make_uniform(101);
  const auto q = cltsim::make_uniform(51);
  CHECK_THROWS_AS(cltsim::convolve(p, q), std::invalid_argument);
}

TEST_CASE("support normalization") {
  const auto u = cltsim::make_uniform(64);
  const auto t = cltsim::convolve(u, u);
  const auto z = cltsim::normalize_unit(t);
  CHECK(z.lo == 0.0);
  CHECK(z.hi == 1.0);
  CHECK(cltsim::mass(z) == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(cltsim::grid_variance(z) ==
        doctest::Approx(cltsim::grid_variance(t) / 4.0).epsilon(1e-12));
}

TEST_CASE("fitting the uniform grid recovers a near-flat beta") {
  const auto [fit, l2] = cltsim::fit_and_distance(cltsim::make_uniform(2048));
  CHECK(fit.alpha == doctest::Approx(0.9985358712).epsilon(1e-6));
  CHECK(fit.beta == doctest::Approx(fit.alpha).epsilon(1e-9));
  CHECK(l2 == doctest::Approx(0.0013040994).epsilon(1e-6));
}

TEST_CASE("fitting a sampled beta density recovers its parameters") {
  cltsim::GriddedDensity p;
  p.lo = 0.0;
  p.hi = 1.0;
  p.dx = 1.0 / 2000.0;
  p.values.resize(2001);
  for (std::size_t i = 0; i < p.values.size(); ++i)
    p.values[i] = density::pdf({2.0, 3.0}, static_cast<double>(i) * p.dx);
  const auto [fit, l2] = cltsim::fit_and_distance(p);
  CHECK(fit.alpha == doctest::Approx(2.0).epsilon(1e-2));
  CHECK(fit.beta == doctest::Approx(3.0).epsilon(1e-2));
  CHECK(l2 < 0.01);

  cltsim::GriddedDensity off = p;
  off.hi = 1.5;
  CHECK_THROWS_AS(cltsim::fit_and_distance(off), std::invalid_argument);
}

TEST_CASE("fold count drives the fitted shape up and the misfit down") {
  const auto u = cltsim::make_uniform(512);
  const double want_l2[] = {0.095105407659, 0.034557095953, 0.018938123062,
                            0.010929123740};
  const double want_alpha[] = {2.4883040936, 5.4766081871, 11.4532163743,
                               23.4064327485};
  double prev = 1e9;
  int idx = 0;
  double first = 0.0, last = 0.0;
  for (int n : {2, 4, 8, 16}) {
    const auto z = cltsim::normalize_unit(cltsim::self_convolve(u, n));
    const auto [fit, l2] = cltsim::fit_and_distance(z);
    CHECK(l2 == doctest::Approx(want_l2[idx]).epsilon(1e-8));
    CHECK(fit.alpha == doctest::Approx(want_alpha[idx]).epsilon(1e-8));
    CHECK(fit.beta == doctest::Approx(fit.alpha).epsilon(1e-9));
    CHECK(l2 < prev);
    prev = l2;
    if (idx == 0) first = l2;
    last = l2;
    ++idx;
  }
  CHECK(last < first / 3.0);
}

TEST_CASE("convolution is identical serial and parallel") {
  const auto u = cltsim::make_uniform(512);
  const auto s = cltsim::convolve(u, u, Exec::Serial);
  const auto p = cltsim::convolve(u, u, Exec::Parallel);
  REQUIRE(s.values.size() == p.values.size());
  for (std::size_t i = 0; i < s.values.size(); ++i) CHECK(s.values[i] == p.values[i]);
}

}  // TEST_SUITE
