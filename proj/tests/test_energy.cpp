#include <doctest.h>

#include <cmath>

#include "betawt/energy.hpp"
#include "betawt/wavelet.hpp"

using namespace betawt;

TEST_SUITE("energy") {

TEST_CASE("lambda0 closed form") {
  CHECK(energy::lambda0({2.0, 2.0}) == doctest::Approx(1.2).epsilon(1e-13));
  CHECK(energy::lambda0({3.0, 3.0}) == doctest::Approx(10.0 / 7.0).epsilon(1e-12));
  CHECK(energy::lambda0({2.5, 3.5}) ==
        doctest::Approx(1.46388560211292950).epsilon(1e-12));
  CHECK(energy::lambda0({2.0, 3.0}) == doctest::Approx(48.0 / 35.0).epsilon(1e-12));
  CHECK_THROWS_AS(energy::lambda0({0.5, 2.0}), std::domain_error);
}

TEST_CASE("lambda0 equals the integral of the squared density") {
  const special::QuadratureConfig cfg{1e-11, 1e-11, 4000};
  for (double a : {1.5, 2.0, 3.0, 5.0})
    for (double b : {1.5, 2.0, 3.0, 5.0}) {
      const density::BetaParams p{a, b};
      const double num = special::integrate(
          [&](double t) { const double f = density::pdf(p, t); return f * f; }, 0.0,
          1.0, cfg, 2);
      CHECK(energy::lambda0(p) == doctest::Approx(num).epsilon(1e-8));
    }
  // below alpha = 1 the squared density has an integrable endpoint spike
  const density::BetaParams p{0.8, 2.0};
  const double num = special::integrate(
      [&](double t) { const double f = density::pdf(p, t); return f * f; }, 0.0, 1.0,
      cfg, 2);
  CHECK(energy::lambda0(p) == doctest::Approx(num).epsilon(1e-8));
}

TEST_CASE("squared density closes within the family") {
  CHECK(energy::square_closure_check({2.0, 2.0}) < 1e-9);
  CHECK(energy::square_closure_check({2.5, 4.0}) < 1e-9);
  CHECK(energy::square_closure_check({1.8, 1.2}) < 1e-9);
}

TEST_CASE("squared standardized density maps onto the doubled member") {
  CHECK(energy::square_closure_lambda_std({3.0, 3.0}) ==
        doctest::Approx(0.338431101056673454).epsilon(1e-12));
  for (const density::BetaParams p : {density::BetaParams{3.0, 3.0},
                                      density::BetaParams{2.5, 4.0}}) {
    const density::BetaParams q{2.0 * p.alpha - 1.0, 2.0 * p.beta - 1.0};
    const double lam_std = energy::square_closure_lambda_std(p);
    const auto gp = density::standardize(p);
    const auto gq = density::standardize(q);
    for (int k = 1; k < 20; ++k) {
      const double t = gp.a + gp.T * k / 20.0;
      const double lhs = density::std_pdf(p, t);
      const double rhs =
          lam_std * density::std_pdf(q, gq.a + (t - gp.a) * gq.T / gp.T);
      CHECK(lhs * lhs == doctest::Approx(rhs).epsilon(1e-10));
    }
  }
}

TEST_CASE("chi closed form") {
  CHECK(energy::chi({2.0, 2.0}) == doctest::Approx(12.0).epsilon(1e-12));
  CHECK(energy::chi({3.0, 3.0}) == doctest::Approx(120.0 / 7.0).epsilon(1e-12));
  CHECK(energy::chi({2.5, 3.5}) ==
        doctest::Approx(19.7624556285245482).epsilon(1e-12));
  CHECK(energy::chi({2.0, 3.0}) == doctest::Approx(19.2).epsilon(1e-12));
  CHECK_THROWS_AS(energy::chi({1.5, 2.0}), std::domain_error);
  CHECK_THROWS_AS(energy::chi({1.2, 3.0}), std::domain_error);
}

TEST_CASE("chi equals the integral of the squared density derivative") {
  const special::QuadratureConfig cfg{1e-11, 1e-11, 4000};
  for (double a : {2.0, 2.5, 3.0, 5.0})
    for (double b : {2.0, 2.5, 3.0, 5.0}) {
      const density::BetaParams p{a, b};
      const double num = special::integrate(
          [&](double t) {
            const double d = density::pdf_derivative(p, t);
            return d * d;
          },
          0.0, 1.0, cfg, 2);
      CHECK(energy::chi(p) == doctest::Approx(num).epsilon(1e-8));
    }
}

TEST_CASE("standardized energies") {
  const auto e22 = energy::energies({2.0, 2.0});
  CHECK(e22.first == doctest::Approx(0.268328157299974764).epsilon(1e-12));
  CHECK(e22.second == doctest::Approx(0.134164078649987382).epsilon(1e-12));
  const auto e33 = energy::energies({3.0, 3.0});
  CHECK(e33.first == doctest::Approx(0.269974623578019448).epsilon(1e-12));
  CHECK(e33.second == doctest::Approx(0.115703410104865478).epsilon(1e-12));

  // the wavelet energy is the L2 norm of the first-order wavelet itself
  const wavelet::WaveletSpec spec{{3.0, 3.0}, 1};
  const auto g = wavelet::geometry(spec);
  const double num = special::integrate(
      [&](double t) {
        const double v = wavelet::wavelet(spec, t);
        return v * v;
      },
      g.a, g.b, {1e-11, 1e-11, 4000}, 4);
  CHECK(e33.second == doctest::Approx(num).epsilon(1e-9));
}

TEST_CASE("truncated Parseval check converges to lambda0 from below") {
  const density::BetaParams p{2.0, 2.0};
  const auto at100 = energy::parseval_m_check(p, 100.0);
  const auto at200 = energy::parseval_m_check(p, 200.0);
  CHECK(at200.second == doctest::Approx(1.2).epsilon(1e-12));
  CHECK(at100.first < at200.first);
  CHECK(at200.first < at200.second);
  CHECK(std::fabs(at200.first - at200.second) <=
        energy::parseval_tail_bound(p, 200.0) + 1e-9);
}

TEST_CASE("Parseval tail bound closed form") {
  // flat density: peak 1, bound 4/(pi nu_max)
  CHECK(energy::parseval_tail_bound({1.0, 1.0}, 100.0) ==
        doctest::Approx(4.0 / (100.0 * M_PI)).epsilon(1e-12));
  CHECK_THROWS_AS(energy::parseval_tail_bound({1.0, 1.0}, 0.0), std::domain_error);
}

TEST_CASE("admissibility constant and truncation stability") {
  const density::BetaParams p{2.0, 2.0};
  const double T = density::standardize(p).T;
  const auto adm = energy::admissibility(p, 250.0 / T);
  CHECK(adm.first == doctest::Approx(1.68595553544977433).epsilon(1e-12));
  CHECK(energy::admissibility({3.0, 3.0}, 5.0).first ==
        doctest::Approx(1.69630058817675136).epsilon(1e-12));
  CHECK(std::isfinite(adm.second));
  CHECK(adm.second > 0.0);

  const auto adm2 = energy::admissibility(p, 500.0 / T);
  CHECK(std::fabs(adm2.second - adm.second) <= 1e-3 * adm.second);

  CHECK_THROWS_AS(energy::admissibility({1.0, 2.0}, 10.0), std::domain_error);
}

TEST_CASE("report fields are consistent with the module functions") {
  const density::BetaParams p{2.5, 3.5};
  const auto r = energy::report(p, 120.0);
  CHECK(r.alpha == 2.5);
  CHECK(r.beta == 3.5);
  CHECK(r.T == density::standardize(p).T);
  CHECK(r.lambda0 == energy::lambda0(p));
  CHECK(r.chi == energy::chi(p));
  const auto e = energy::energies(p);
  CHECK(r.energy_scale == e.first);
  CHECK(r.energy_wavelet == e.second);
  CHECK(r.admissibility_closed ==
        doctest::Approx(2.0 * M_PI * r.lambda0 / r.T).epsilon(1e-14));
  CHECK(std::isfinite(r.admissibility_numeric));
  CHECK(r.admissibility_numeric > 0.0);
}

TEST_CASE("line integrals are identical serial and parallel") {
  const density::BetaParams p{2.0, 2.0};
  const auto ps = energy::parseval_m_check(p, 60.0, {}, Exec::Serial);
  const auto pp = energy::parseval_m_check(p, 60.0, {}, Exec::Parallel);
  CHECK(ps.first == pp.first);
  CHECK(ps.second == pp.second);

  const double T = density::standardize(p).T;
  const auto as = energy::admissibility(p, 60.0 / T, {}, Exec::Serial);
  const auto ap = energy::admissibility(p, 60.0 / T, {}, Exec::Parallel);
  CHECK(as.first == ap.first);
  CHECK(as.second == ap.second);
}

}  // TEST_SUITE
