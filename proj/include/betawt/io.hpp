#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "betawt/cltsim.hpp"
#include "betawt/energy.hpp"
#include "betawt/spectral.hpp"
#include "betawt/transform.hpp"

namespace betawt::io {

class io_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Shortest decimal string that round-trips the double (std::to_chars).
std::string format_double(double v);

void write_waveform_csv(std::ostream& os, const wavelet::SampledWaveform& w);
void write_spectrum_csv(std::ostream& os, const std::vector<spectral::SpectrumSample>& s,
                        double T);
// Header row carries the shift values, first column the scale values.
void write_scalogram_csv(std::ostream& os, const transform::Scalogram& sg);
void write_density_csv(std::ostream& os, const cltsim::GriddedDensity& d);
void write_energy_csv(std::ostream& os, const energy::EnergyReport& r);

nlohmann::json waveform_json(const wavelet::SampledWaveform& w);
nlohmann::json spectrum_json(const std::vector<spectral::SpectrumSample>& s, double T);
nlohmann::json scalogram_json(const transform::Scalogram& sg);
nlohmann::json density_json(const cltsim::GriddedDensity& d);
nlohmann::json energy_json(const energy::EnergyReport& r);

// Reads a signal from CSV: either two columns (time_s, value) with a
// uniformly spaced time column, or one column plus an explicit sample rate.
// A non-numeric first line is treated as a header and skipped. Unreadable
// files raise io_error; malformed content raises std::invalid_argument.
transform::Signal read_signal_csv(const std::string& path, double sample_rate_hint = 0.0);

}  // namespace betawt::io
