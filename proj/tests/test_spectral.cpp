#include <doctest.h>

#include <cmath>
#include <complex>

#include "betawt/spectral.hpp"

using namespace betawt;

TEST_SUITE("spectral") {

TEST_CASE("spectrum vanishes at zero frequency, exactly") {
  const auto z = spectral::spectrum_closed({{3.0, 3.0}, 1}, 0.0);
  CHECK(z.real() == 0.0);
  CHECK(z.imag() == 0.0);
}

TEST_CASE("real waveform gives a conjugate-symmetric spectrum") {
  const wavelet::WaveletSpec spec{{2.5, 4.0}, 1};
  for (double omega : {0.3, 1.7, 4.2}) {
    const auto plus = spectral::spectrum_closed(spec, omega);
    const auto minus = spectral::spectrum_closed(spec, -omega);
    CHECK(std::abs(minus - std::conj(plus)) < 1e-12 * (1.0 + std::abs(plus)));
  }
}

TEST_CASE("closed form agrees with a direct transform of the samples") {
  const wavelet::WaveletSpec spec{{2.0, 3.0}, 1};
  const double T = wavelet::geometry(spec).T;
  const auto w = wavelet::sample(spec, 8192, wavelet::Part::Wavelet);
  for (double nu : {3.0, 11.0}) {
    const double omega = nu / T;
    const auto closed = spectral::spectrum_closed(spec, omega);
    const auto direct = spectral::spectrum_dft(w, omega);
    CHECK(std::abs(closed - direct) < 1e-3 * std::abs(closed));
  }
}

TEST_CASE("centred characteristic function is real iff the density is symmetric") {
  for (double nu : {1.3, 5.7, 11.2, 20.0})
    CHECK(std::fabs(spectral::centered_char({3.0, 3.0}, nu).imag()) < 1e-12);
  CHECK(std::fabs(spectral::centered_char({2.0, 4.0}, 3.0).imag()) > 1e-3);
}

TEST_CASE("symmetric spectra are real after stripping the derivative factor") {
  const wavelet::WaveletSpec spec{{3.0, 3.0}, 1};
  for (double omega : {0.4, 1.1, 2.9}) {
    const auto z =
        spectral::spectrum_closed(spec, omega) / std::complex<double>(0.0, -omega);
    CHECK(std::fabs(z.imag()) <= 1e-12 * std::abs(z));
  }
}

TEST_CASE("first spectral nulls of symmetric members") {
  struct Known {
    double alpha, nu;
  };
  const Known table[] = {{3.0, 11.5269183937890996},
                         {5.0, 16.3651229051424854},
                         {8.0, 23.3140643850327432},
                         {12.0, 32.2894858846026820}};
  double prev = 0.0;
  for (const auto& k : table) {
    const auto hit = spectral::find_first_null({k.alpha, k.alpha}, 40.0, 1e-9);
    REQUIRE(hit.has_value());
    CHECK(std::fabs(hit->nu - k.nu) < 1e-7);
    CHECK(hit->nu > prev);
    prev = hit->nu;
    CHECK(std::abs(special::kummer_m_imag(k.alpha, k.alpha, hit->nu)) < 1e-6);
  }
}

TEST_CASE("asymmetric members have no spectral null") {
  CHECK_FALSE(spectral::find_first_null({4.0, 2.0}, 40.0, 1e-9).has_value());
  CHECK_FALSE(spectral::find_first_null({2.0, 3.0}, 40.0, 1e-9).has_value());
}

TEST_CASE("grid evaluation is identical serial and parallel") {
  const wavelet::WaveletSpec spec{{3.0, 5.0}, 2};
  std::vector<double> omegas;
  for (int i = 0; i < 64; ++i) omegas.push_back(0.05 + 0.11 * i);
  const auto ser = spectral::spectrum_grid(spec, omegas, spectral::default_config(),
                                           Exec::Serial);
  const auto par = spectral::spectrum_grid(spec, omegas, spectral::default_config(),
                                           Exec::Parallel);
  REQUIRE(ser.size() == par.size());
  for (std::size_t i = 0; i < ser.size(); ++i) {
    CHECK(ser[i].omega == par[i].omega);
    CHECK(ser[i].value == par[i].value);
  }
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(spectral::find_first_null({3.0, 3.0}, -1.0, 1e-9), std::domain_error);
  CHECK_THROWS_AS(spectral::find_first_null({3.0, 3.0}, 40.0, 0.0), std::domain_error);
  wavelet::SampledWaveform bad{0.0, 0.0, {1.0, 2.0}};
  CHECK_THROWS_AS(spectral::spectrum_dft(bad, 1.0), std::domain_error);
}

}  // TEST_SUITE
