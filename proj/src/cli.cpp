#include "betawt/cli.hpp"

#include <charconv>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "betawt/cltsim.hpp"
#include "betawt/energy.hpp"
#include "betawt/io.hpp"
#include "betawt/spectral.hpp"
#include "betawt/transform.hpp"

namespace betawt::cli {

namespace {

using io::format_double;

// Artifact goes to the --out path when given, to the primary stream otherwise.
void with_output(const std::string& path, std::ostream& out,
                 const std::function<void(std::ostream&)>& writer) {
  if (path.empty()) {
    writer(out);
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw io::io_error("cannot open output file: " + path);
  writer(f);
  f.flush();
  if (!f.good()) throw io::io_error("write failure on output file: " + path);
}

double parse_num(std::string_view s) {
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size() || !std::isfinite(v))
    throw std::invalid_argument("--scales: expected lo:hi:n with numeric fields");
  return v;
}

// "lo:hi:n" -> n geometrically spaced scales from lo to hi inclusive.
std::vector<double> parse_scales(const std::string& text) {
  const auto c1 = text.find(':');
  const auto c2 = text.find(':', c1 == std::string::npos ? c1 : c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos)
    throw std::invalid_argument("--scales: expected lo:hi:n");
  const double lo = parse_num(std::string_view(text).substr(0, c1));
  const double hi = parse_num(std::string_view(text).substr(c1 + 1, c2 - c1 - 1));
  const double nf = parse_num(std::string_view(text).substr(c2 + 1));
  const int n = static_cast<int>(nf);
  if (nf != n || n < 1) throw std::invalid_argument("--scales: n must be a positive integer");
  if (!(lo > 0.0)) throw std::invalid_argument("--scales: lo must be positive");
  if (n == 1) return {lo};
  if (!(hi > lo)) throw std::invalid_argument("--scales: need hi > lo");
  std::vector<double> s(static_cast<std::size_t>(n));
  const double ratio = hi / lo;
  for (int i = 0; i < n; ++i)
    s[static_cast<std::size_t>(i)] = lo * std::pow(ratio, static_cast<double>(i) / (n - 1));
  s.back() = hi;
  return s;
}

std::vector<double> uniform_shifts(double t_end, int n) {
  std::vector<double> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    out[static_cast<std::size_t>(i)] = t_end * static_cast<double>(i) / (n - 1);
  return out;
}

void write_scalogram(const transform::Scalogram& sg, const std::string& format,
                     std::ostream& os) {
  if (format == "json")
    os << io::scalogram_json(sg).dump(2) << '\n';
  else
    io::write_scalogram_csv(os, sg);
}

// Peak-response scale over the shifts lying in the middle half of each bit
// interval, split by bit value. Used by the fsk-demo summary.
std::pair<double, double> peak_scales_by_bit(const transform::Scalogram& sg,
                                             const std::vector<int>& bits,
                                             double bit_period) {
  const std::size_t ns = sg.grid.scales.size();
  std::vector<double> resp0(ns, 0.0), resp1(ns, 0.0);
  std::vector<int> cnt0(ns, 0), cnt1(ns, 0);
  for (std::size_t ti = 0; ti < sg.grid.shifts.size(); ++ti) {
    const double tau = sg.grid.shifts[ti];
    const auto j = static_cast<std::size_t>(tau / bit_period);
    if (j >= bits.size()) continue;
    const double frac = tau / bit_period - static_cast<double>(j);
    if (frac < 0.25 || frac > 0.75) continue;  // stay clear of bit transitions
    for (std::size_t si = 0; si < ns; ++si) {
      if (!sg.validity_mask[si][ti]) continue;
      if (bits[j]) {
        resp1[si] += std::fabs(sg.coefficients[si][ti]);
        ++cnt1[si];
      } else {
        resp0[si] += std::fabs(sg.coefficients[si][ti]);
        ++cnt0[si];
      }
    }
  }
  auto argmax = [&](const std::vector<double>& resp, const std::vector<int>& cnt) {
    double best = -1.0;
    std::size_t bi = 0;
    for (std::size_t si = 0; si < ns; ++si) {
      if (cnt[si] == 0) continue;
      const double m = resp[si] / cnt[si];
      if (m > best) {
        best = m;
        bi = si;
      }
    }
    return sg.grid.scales[bi];
  };
  return {argmax(resp0, cnt0), argmax(resp1, cnt1)};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"beta wavelet toolkit: waveforms, spectra, energy reports, scalograms"};
  app.require_subcommand(1);

  double alpha = 0.0, beta = 0.0;
  int order = 1;
  int samples = 1024;   // wavelet, scalefn, spectrum
  int cwt_shifts = 128;
  int clt_points = 2048;
  double nu_spec = 40.0;
  double nu_nulls = 40.0;
  double nu_energy = 500.0;
  double tol = 0.0;
  double null_tol = 1e-9;
  double sample_rate = 0.0;
  std::string out_path, scales_text, input_path;
  // one format variable per subcommand: the defaults differ, and a shared
  // variable would take whichever default was registered last
  std::string fmt_wav = "csv", fmt_scale = "csv", fmt_spec = "csv", fmt_nulls = "csv",
              fmt_energy = "json", fmt_cwt = "csv", fmt_clt = "csv", fmt_fsk = "csv";

  auto add_params = [&](CLI::App* sub, bool with_order) {
    sub->add_option("--alpha", alpha, "first shape parameter (> 1)")->required();
    sub->add_option("--beta", beta, "second shape parameter (> 1)")->required();
    if (with_order) sub->add_option("--order", order, "wavelet order N (default 1)");
  };
  auto add_io = [&](CLI::App* sub, std::string& fmt) {
    sub->add_option("--out", out_path, "output file (default: standard output)");
    sub->add_option("--format", fmt, "artifact format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
  };

  auto* cmd_wav = app.add_subcommand("wavelet", "sample the order-N wavelet over its support");
  add_params(cmd_wav, true);
  cmd_wav->add_option("--samples", samples, "number of samples (default 1024)");
  add_io(cmd_wav, fmt_wav);

  auto* cmd_scale = app.add_subcommand("scalefn", "sample the scale function over its support");
  add_params(cmd_scale, true);
  cmd_scale->add_option("--samples", samples, "number of samples (default 1024)");
  add_io(cmd_scale, fmt_scale);

  auto* cmd_spec = app.add_subcommand("spectrum", "wavelet spectrum over a normalized-frequency grid");
  add_params(cmd_spec, true);
  cmd_spec->add_option("--nu-max", nu_spec, "upper end of the nu grid (default 40)");
  cmd_spec->add_option("--samples", samples, "grid points (default 1024)");
  cmd_spec->add_option("--tol", tol, "quadrature tolerance override");
  add_io(cmd_spec, fmt_spec);

  auto* cmd_nulls = app.add_subcommand("nulls", "locate the first spectral null");
  add_params(cmd_nulls, false);
  cmd_nulls->add_option("--nu-max", nu_nulls, "search range upper end in nu (default 40)");
  cmd_nulls->add_option("--tol", null_tol, "bisection tolerance (default 1e-9)");
  add_io(cmd_nulls, fmt_nulls);

  auto* cmd_energy = app.add_subcommand("energy", "energy and admissibility report");
  add_params(cmd_energy, false);
  cmd_energy->add_option("--nu-max", nu_energy, "truncation limit (default 500)");
  add_io(cmd_energy, fmt_energy);

  auto* cmd_cwt = app.add_subcommand("cwt", "scalogram of a signal file (blur-derivative transform)");
  cmd_cwt->add_option("input", input_path, "signal CSV: time,value columns or one value column")
      ->required();
  add_params(cmd_cwt, true);
  cmd_cwt->add_option("--scales", scales_text, "scale grid lo:hi:n, geometric")->required();
  cmd_cwt->add_option("--samples", cwt_shifts, "number of shifts across the signal (default 128)");
  cmd_cwt->add_option("--sample-rate", sample_rate, "sample rate in Hz for one-column input");
  add_io(cmd_cwt, fmt_cwt);

  auto* cmd_clt = app.add_subcommand("clt", "self-convolved uniform vs moment-matched fit, n = 2,4,8,16");
  cmd_clt->add_option("--samples", clt_points, "density grid points (default 2048)");
  add_io(cmd_clt, fmt_clt);

  auto* cmd_fsk = app.add_subcommand("fsk-demo",
                                     "two-tone FSK scalogram with fixed parameters (see docs)");
  add_io(cmd_fsk, fmt_fsk);

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("betawt");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    const density::BetaParams p{alpha, beta};

    if (*cmd_wav || *cmd_scale) {
      if (samples < 2) throw std::invalid_argument("--samples must be at least 2");
      const std::string& format = *cmd_wav ? fmt_wav : fmt_scale;
      const wavelet::WaveletSpec spec{p, order};
      const auto w = wavelet::sample(
          spec, samples, *cmd_wav ? wavelet::Part::Wavelet : wavelet::Part::Scale);
      with_output(out_path, out, [&](std::ostream& os) {
        if (format == "json")
          os << io::waveform_json(w).dump(2) << '\n';
        else
          io::write_waveform_csv(os, w);
      });
      if (!out_path.empty())
        out << "wrote " << samples << " samples on ["
            << format_double(w.t0) << ", "
            << format_double(w.t0 + w.dt * (samples - 1)) << "] to " << out_path << '\n';
      return 0;
    }

    if (*cmd_spec) {
      if (samples < 2) throw std::invalid_argument("--samples must be at least 2");
      if (!(nu_spec > 0.0)) throw std::invalid_argument("--nu-max must be positive");
      const wavelet::WaveletSpec spec{p, order};
      const double T = wavelet::geometry(spec).T;
      auto cfg = spectral::default_config();
      if (tol > 0.0) {
        cfg.abs_tol = tol;
        cfg.rel_tol = tol;
      }
      std::vector<double> omegas(static_cast<std::size_t>(samples));
      for (int i = 0; i < samples; ++i)
        omegas[static_cast<std::size_t>(i)] = nu_spec * i / (samples - 1.0) / T;
      const auto grid = spectral::spectrum_grid(spec, omegas, cfg);
      with_output(out_path, out, [&](std::ostream& os) {
        if (fmt_spec == "json")
          os << io::spectrum_json(grid, T).dump(2) << '\n';
        else
          io::write_spectrum_csv(os, grid, T);
      });
      if (!out_path.empty())
        out << "wrote " << samples << " spectrum samples, nu in [0, "
            << format_double(nu_spec) << "], to " << out_path << '\n';
      return 0;
    }

    if (*cmd_nulls) {
      if (!(nu_nulls > 0.0)) throw std::invalid_argument("--nu-max must be positive");
      wavelet::validate({p, 1});
      const double T = density::standardize(p).T;
      const auto r = spectral::find_first_null(p, nu_nulls, null_tol);
      if (r)
        out << "first spectral null: nu = " << format_double(r->nu)
            << " (omega = " << format_double(r->nu / T) << ")\n";
      else
        out << "no spectral null found in (0, " << format_double(nu_nulls)
            << "] for alpha = " << format_double(alpha)
            << ", beta = " << format_double(beta) << '\n';
      if (!out_path.empty()) {
        with_output(out_path, out, [&](std::ostream& os) {
          if (fmt_nulls == "json") {
            nlohmann::json j{{"alpha", alpha}, {"beta", beta}, {"found", bool(r)}};
            j["nu"] = r ? nlohmann::json(r->nu) : nlohmann::json();
            j["omega"] = r ? nlohmann::json(r->nu / T) : nlohmann::json();
            os << j.dump(2) << '\n';
          } else {
            os << "quantity,value\n";
            os << "alpha," << format_double(alpha) << '\n';
            os << "beta," << format_double(beta) << '\n';
            os << "found," << (r ? 1 : 0) << '\n';
            if (r) {
              os << "nu," << format_double(r->nu) << '\n';
              os << "omega," << format_double(r->nu / T) << '\n';
            }
          }
        });
      }
      return 0;
    }

    if (*cmd_energy) {
      if (!(nu_energy > 0.0)) throw std::invalid_argument("--nu-max must be positive");
      const auto rep = energy::report(p, nu_energy);
      with_output(out_path, out, [&](std::ostream& os) {
        if (fmt_energy == "csv")
          io::write_energy_csv(os, rep);
        else
          os << io::energy_json(rep).dump(2) << '\n';
      });
      if (!out_path.empty())
        out << "lambda0 = " << format_double(rep.lambda0)
            << ", chi = " << format_double(rep.chi) << " -> wrote " << out_path << '\n';
      return 0;
    }

    if (*cmd_cwt) {
      if (cwt_shifts < 2) throw std::invalid_argument("--samples must be at least 2");
      const auto sig = io::read_signal_csv(input_path, sample_rate);
      const wavelet::WaveletSpec spec{p, order};
      transform::ScaleShiftGrid grid;
      grid.scales = parse_scales(scales_text);
      const double t_end = (static_cast<double>(sig.samples.size()) - 1.0) / sig.sample_rate;
      grid.shifts = uniform_shifts(t_end, cwt_shifts);
      const auto sg = transform::cwt_blur_derivative(sig, spec, grid);
      if (sg.fd_warning)
        err << "warning: finite-difference step may be too coarse for this grid; "
               "peak coefficient error estimate exceeds 1%\n";
      with_output(out_path, out, [&](std::ostream& os) { write_scalogram(sg, fmt_cwt, os); });
      if (!out_path.empty())
        out << "wrote " << grid.scales.size() << "x" << grid.shifts.size()
            << " scalogram to " << out_path << '\n';
      return 0;
    }

    if (*cmd_clt) {
      if (clt_points < 16) throw std::invalid_argument("--samples must be at least 16");
      const auto u = cltsim::make_uniform(clt_points);
      struct Row {
        int n;
        double l2, alpha, beta;
      };
      std::vector<Row> rows;
      for (int n : {2, 4, 8, 16}) {
        const auto folded = cltsim::normalize_unit(cltsim::self_convolve(u, n));
        const auto [fit, l2] = cltsim::fit_and_distance(folded);
        rows.push_back({n, l2, fit.alpha, fit.beta});
      }
      with_output(out_path, out, [&](std::ostream& os) {
        if (fmt_clt == "json") {
          nlohmann::json arr = nlohmann::json::array();
          for (const auto& r : rows)
            arr.push_back({{"n", r.n}, {"l2", r.l2}, {"alpha", r.alpha}, {"beta", r.beta}});
          os << nlohmann::json{{"grid_points", clt_points}, {"results", arr}}.dump(2) << '\n';
        } else {
          os << "n,l2,alpha,beta\n";
          for (const auto& r : rows)
            os << r.n << ',' << format_double(r.l2) << ',' << format_double(r.alpha)
               << ',' << format_double(r.beta) << '\n';
        }
      });
      if (!out_path.empty())
        out << "l2: n=2 " << format_double(rows[0].l2) << ", n=16 "
            << format_double(rows[3].l2) << " -> wrote " << out_path << '\n';
      return 0;
    }

    if (*cmd_fsk) {
      // Fixed demo scenario, documented in docs/formats.md: 8 alternating
      // bits of phase-continuous FSK at 8 Hz / 16 Hz, 512 Hz sampling, one
      // second per bit, analyzed with the (3, 3) first-order wavelet on a
      // 16x128 geometric-scale grid.
      const std::vector<int> bits{0, 1, 0, 1, 0, 1, 0, 1};
      const double fs = 512.0, f0 = 8.0, f1 = 16.0;
      const int spb = 512;
      const auto sig = transform::make_fsk_signal(f0, f1, bits, spb, fs);
      const wavelet::WaveletSpec spec{{3.0, 3.0}, 1};
      transform::ScaleShiftGrid grid;
      grid.scales = parse_scales("0.004:0.06:16");
      const double t_end = (static_cast<double>(sig.samples.size()) - 1.0) / fs;
      grid.shifts = uniform_shifts(t_end, 128);
      const auto sg = transform::cwt_blur_derivative(sig, spec, grid);
      if (sg.fd_warning)
        err << "warning: finite-difference step may be too coarse for this grid; "
               "peak coefficient error estimate exceeds 1%\n";
      with_output(out_path, out, [&](std::ostream& os) { write_scalogram(sg, fmt_fsk, os); });
      if (!out_path.empty()) {
        const auto [s0, s1] = peak_scales_by_bit(sg, bits, spb / fs);
        out << "peak response at scale " << format_double(s1) << " during 1-bits ("
            << format_double(f1) << " Hz) vs " << format_double(s0)
            << " during 0-bits (" << format_double(f0) << " Hz) -> wrote " << out_path
            << '\n';
      }
      return 0;
    }

    err << "error: no subcommand selected\n";
    return 2;
  } catch (const special::convergence_error& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const special::nonfinite_error& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const io::io_error& e) {
    err << "error: " << e.what() << '\n';
    return 4;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace betawt::cli
