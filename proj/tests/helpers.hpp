#pragma once

#include <cmath>
#include <functional>

#include "betawt/transform.hpp"

namespace betawt::testhelpers {

inline transform::Signal make_chirp(double f_lo, double f_hi, int n, double fs) {
  transform::Signal sig;
  sig.sample_rate = fs;
  sig.samples.resize(static_cast<std::size_t>(n));
  const double rate = (f_hi - f_lo) / (n / fs);  // Hz per second
  for (int i = 0; i < n; ++i) {
    const double t = i / fs;
    sig.samples[static_cast<std::size_t>(i)] =
        std::sin(2.0 * M_PI * (f_lo * t + 0.5 * rate * t * t));
  }
  return sig;
}

// n-th derivative of fn at t: central differences at steps h, h/2, h/4
// combined through two Richardson levels, so the leading error is O(h^6).
inline double nth_derivative(const std::function<double(double)>& fn, double t, int n,
                             double h) {
  auto fd = [&](double step) {
    double acc = 0.0, binom = 1.0;
    for (int k = 0; k <= n; ++k) {
      const double v = fn(t + (0.5 * n - k) * step);
      acc += (k % 2 == 0) ? binom * v : -binom * v;
      binom = binom * (n - k) / (k + 1);
    }
    return acc / std::pow(step, n);
  };
  const double f1 = fd(h), f2 = fd(0.5 * h), f4 = fd(0.25 * h);
  const double r1a = (4.0 * f2 - f1) / 3.0;
  const double r1b = (4.0 * f4 - f2) / 3.0;
  return (16.0 * r1b - r1a) / 15.0;
}

}  // namespace betawt::testhelpers
