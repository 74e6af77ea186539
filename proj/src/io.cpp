#include "betawt/io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <string_view>
#include <system_error>

namespace betawt::io {

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

void write_waveform_csv(std::ostream& os, const wavelet::SampledWaveform& w) {
  os << "t,value\n";
  for (std::size_t i = 0; i < w.values.size(); ++i)
    os << format_double(w.t0 + static_cast<double>(i) * w.dt) << ','
       << format_double(w.values[i]) << '\n';
}

void write_spectrum_csv(std::ostream& os, const std::vector<spectral::SpectrumSample>& s,
                        double T) {
  os << "omega,nu,re,im,magnitude\n";
  for (const auto& p : s)
    os << format_double(p.omega) << ',' << format_double(p.omega * T) << ','
       << format_double(p.value.real()) << ',' << format_double(p.value.imag()) << ','
       << format_double(std::abs(p.value)) << '\n';
}

void write_scalogram_csv(std::ostream& os, const transform::Scalogram& sg) {
  os << "scale";
  for (double tau : sg.grid.shifts) os << ',' << format_double(tau);
  os << '\n';
  for (std::size_t si = 0; si < sg.grid.scales.size(); ++si) {
    os << format_double(sg.grid.scales[si]);
    for (double c : sg.coefficients[si]) os << ',' << format_double(c);
    os << '\n';
  }
}

void write_density_csv(std::ostream& os, const cltsim::GriddedDensity& d) {
  os << "t,value\n";
  for (std::size_t i = 0; i < d.values.size(); ++i)
    os << format_double(d.lo + static_cast<double>(i) * d.dx) << ','
       << format_double(d.values[i]) << '\n';
}

void write_energy_csv(std::ostream& os, const energy::EnergyReport& r) {
  os << "quantity,value\n";
  os << "alpha," << format_double(r.alpha) << '\n';
  os << "beta," << format_double(r.beta) << '\n';
  os << "T," << format_double(r.T) << '\n';
  os << "lambda0," << format_double(r.lambda0) << '\n';
  os << "chi," << format_double(r.chi) << '\n';
  os << "energy_scale," << format_double(r.energy_scale) << '\n';
  os << "energy_wavelet," << format_double(r.energy_wavelet) << '\n';
  os << "admissibility_closed," << format_double(r.admissibility_closed) << '\n';
  os << "admissibility_numeric," << format_double(r.admissibility_numeric) << '\n';
}

nlohmann::json waveform_json(const wavelet::SampledWaveform& w) {
  return {{"t0", w.t0}, {"dt", w.dt}, {"values", w.values}};
}

nlohmann::json spectrum_json(const std::vector<spectral::SpectrumSample>& s, double T) {
  std::vector<double> omega, re, im, mag;
  omega.reserve(s.size());
  re.reserve(s.size());
  im.reserve(s.size());
  mag.reserve(s.size());
  for (const auto& p : s) {
    omega.push_back(p.omega);
    re.push_back(p.value.real());
    im.push_back(p.value.imag());
    mag.push_back(std::abs(p.value));
  }
  return {{"T", T}, {"omega", omega}, {"re", re}, {"im", im}, {"magnitude", mag}};
}

nlohmann::json scalogram_json(const transform::Scalogram& sg) {
  return {{"scales", sg.grid.scales},
          {"shifts", sg.grid.shifts},
          {"coefficients", sg.coefficients},
          {"validity_mask", sg.validity_mask}};
}

nlohmann::json density_json(const cltsim::GriddedDensity& d) {
  return {{"lo", d.lo}, {"hi", d.hi}, {"dx", d.dx}, {"values", d.values}};
}

nlohmann::json energy_json(const energy::EnergyReport& r) {
  return {{"alpha", r.alpha},
          {"beta", r.beta},
          {"T", r.T},
          {"lambda0", r.lambda0},
          {"chi", r.chi},
          {"energy_scale", r.energy_scale},
          {"energy_wavelet", r.energy_wavelet},
          {"admissibility_closed", r.admissibility_closed},
          {"admissibility_numeric", r.admissibility_numeric}};
}

namespace {

bool parse_field(std::string_view field, double& out) {
  std::size_t b = 0, e = field.size();
  while (b < e && std::isspace(static_cast<unsigned char>(field[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(field[e - 1]))) --e;
  if (b == e) return false;
  const auto res = std::from_chars(field.data() + b, field.data() + e, out);
  return res.ec == std::errc() && res.ptr == field.data() + e && std::isfinite(out);
}

// Splits a CSV line into at most 3 fields; more than 2 is malformed anyway.
int split_line(std::string_view line, std::string_view out[3]) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  int n = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= line.size(); ++i) {
    if (i == line.size() || line[i] == ',') {
      if (n < 3) out[n] = line.substr(start, i - start);
      ++n;
      start = i + 1;
    }
  }
  return n;
}

}  // namespace

transform::Signal read_signal_csv(const std::string& path, double sample_rate_hint) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("cannot open signal file: " + path);

  std::vector<double> times, values;
  int columns = 0;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    std::string_view fields[3];
    const int n = split_line(line, fields);
    if (n == 1 && fields[0].empty()) continue;  // blank line

    double a = 0.0, b = 0.0;
    const bool a_ok = parse_field(fields[0], a);
    if (first) {
      first = false;
      if (!a_ok) continue;  // header row
    }
    if (n != 1 && n != 2)
      throw std::invalid_argument("signal csv: expected 1 or 2 columns");
    if (columns == 0)
      columns = n;
    else if (columns != n)
      throw std::invalid_argument("signal csv: inconsistent column count");
    if (!a_ok || (n == 2 && !parse_field(fields[1], b)))
      throw std::invalid_argument("signal csv: unparseable number in line '" + line + "'");
    if (n == 2) {
      times.push_back(a);
      values.push_back(b);
    } else {
      values.push_back(a);
    }
  }
  if (in.bad()) throw io_error("read failure on signal file: " + path);
  if (values.size() < 8)
    throw std::invalid_argument("signal csv: need at least 8 samples");

  transform::Signal sig;
  sig.samples = std::move(values);
  if (columns == 2) {
    const double dt = (times.back() - times.front()) / static_cast<double>(times.size() - 1);
    if (!(dt > 0.0)) throw std::invalid_argument("signal csv: time column must increase");
    for (std::size_t i = 1; i < times.size(); ++i)
      if (std::fabs(times[i] - times[i - 1] - dt) > 1e-6 * dt)
        throw std::invalid_argument("signal csv: time column is not uniformly spaced");
    sig.sample_rate = 1.0 / dt;
  } else {
    if (!(sample_rate_hint > 0.0))
      throw std::invalid_argument(
          "signal csv: single-column input needs an explicit sample rate");
    sig.sample_rate = sample_rate_hint;
  }
  return sig;
}

}  // namespace betawt::io
