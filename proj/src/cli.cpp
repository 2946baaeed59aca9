#include "npwigner/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <vector>

#include "CLI11.hpp"
#include "npwigner/emit.hpp"
#include "npwigner/errors.hpp"
#include "npwigner/marginals.hpp"
#include "npwigner/oracle.hpp"
#include "npwigner/phase.hpp"
#include "npwigner/state_spec.hpp"
#include "npwigner/wigner.hpp"

namespace npw::cli {

namespace {

using json = nlohmann::ordered_json;

class UsageError : public Error {
 public:
  using Error::Error;
};

struct StateOptions {
  std::string kind;
  double alpha = 0.0;
  double alpha_phase = 0.0;
  int M = -1;
  double phi0 = 0.0;
  std::string cutoff = "auto";
  double tail_tol = kDefaultTailTol;
  std::string spec_file;
};

struct OutputOptions {
  std::string out = "-";
  std::string format = "csv";
  bool no_timestamps = false;
};

struct GridOptions {
  int n_max = -1;
  int phi_samples = kDefaultPhiSamples;
  int theta_samples = 0;
};

void add_state_options(CLI::App& cmd, StateOptions& s) {
  cmd.add_option("--state", s.kind, "State kind")
      ->check(CLI::IsMember({"number", "coherent", "cat", "phase"}));
  cmd.add_option("--alpha", s.alpha, "Coherent/cat amplitude |alpha|");
  cmd.add_option("--alpha-phase", s.alpha_phase, "Phase of alpha in radians");
  cmd.add_option("--M", s.M, "Fock index (number) or order (phase)")->check(CLI::NonNegativeNumber);
  cmd.add_option("--phi0", s.phi0, "Phase-state reference phase in radians");
  cmd.add_option("--cutoff", s.cutoff, "Fock cutoff, or 'auto'")
      ->check([](const std::string& v) -> std::string {
        if (v == "auto") return {};
        try {
          std::size_t pos = 0;
          const int c = std::stoi(v, &pos);
          if (pos == v.size() && c >= 0) return {};
        } catch (const std::exception&) {
        }
        return "cutoff must be a non-negative integer or 'auto'";
      });
  cmd.add_option("--tail-tol", s.tail_tol, "Truncation tolerance")->check(CLI::Range(1e-300, 0.5));
  cmd.add_option("--spec-file", s.spec_file, "JSON state-spec file")->check(CLI::ExistingFile);
}

void add_output_options(CLI::App& cmd, OutputOptions& o) {
  cmd.add_option("--out", o.out, "Output path ('-' for stdout)");
  cmd.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  cmd.add_flag("--no-timestamps", o.no_timestamps, "Omit timestamps from metadata");
}

void add_grid_options(CLI::App& cmd, GridOptions& g) {
  cmd.add_option("--n-max", g.n_max, "Largest photon number (default: cutoff)")
      ->check(CLI::NonNegativeNumber);
  cmd.add_option("--phi-samples", g.phi_samples, "Uniform phase samples")->check(CLI::Range(1, 1 << 20));
  cmd.add_option("--theta-samples", g.theta_samples, "Theta samples for the characteristic path "
                                                     "(default: 2*cutoff+3)")
      ->check(CLI::Range(1, 1 << 20));
}

json spec_from_options(const StateOptions& s, const CLI::App& cmd) {
  const bool has_flags = !s.kind.empty();
  const bool has_file = !s.spec_file.empty();
  if (has_flags == has_file) throw UsageError("give exactly one of --state or --spec-file");
  json spec;
  if (has_file) {
    std::ifstream f(s.spec_file);
    try {
      spec = json::parse(f);
    } catch (const json::parse_error& e) {
      throw SpecError(std::string("cannot parse spec file: ") + e.what());
    }
  } else {
    spec["kind"] = s.kind;
    if (s.kind == "number" || s.kind == "phase") {
      if (s.M < 0) throw UsageError("--state " + s.kind + " needs --M");
      spec["M"] = s.M;
    }
    if (s.kind == "phase") spec["phi0"] = s.phi0;
    if (s.kind == "coherent" || s.kind == "cat") {
      if (cmd.count("--alpha") == 0) throw UsageError("--state " + s.kind + " needs --alpha");
      if (cmd.count("--alpha-phase") > 0) {
        const auto a = std::polar(s.alpha, s.alpha_phase);
        spec["alpha"] = {a.real(), a.imag()};
      } else {
        spec["alpha"] = s.alpha;
      }
    }
  }
  if (!has_file || cmd.count("--cutoff") > 0) {
    if (s.cutoff == "auto") {
      spec["cutoff"] = "auto";
    } else {
      spec["cutoff"] = std::stoi(s.cutoff);
    }
  }
  if (!has_file || cmd.count("--tail-tol") > 0) spec["tail_tol"] = s.tail_tol;
  return spec;
}

double tail_tol_of(const json& spec) { return spec.value("tail_tol", kDefaultTailTol); }

// Writes to the --out destination or to `out` for "-".
void emit_text(const std::string& text, const std::string& dest, std::ostream& out) {
  if (dest == "-") {
    out << text;
  } else {
    write_text_file(dest, text);
  }
}

std::string grid_text(const WignerGrid& grid, const OutputOptions& o, const json& meta) {
  if (o.format == "json") return grid_document(grid, meta).dump(2) + "\n";
  std::ostringstream s;
  write_grid_csv(grid, s);
  return s.str();
}

int n_max_for(const GridOptions& g, const DensityMatrix& rho) {
  return g.n_max < 0 ? rho.cutoff() : g.n_max;
}

int cmd_state(const StateOptions& so, const OutputOptions& o, const CLI::App& cmd, std::ostream& out) {
  const BuiltState st = build_state(spec_from_options(so, cmd));
  const auto p = photon_marginal_analytic(st.rho);
  const json meta = make_metadata(st.spec, st.rho.cutoff(), tail_tol_of(st.spec), !o.no_timestamps);
  std::ostringstream s;
  if (o.format == "json") {
    json doc;
    doc["metadata"] = meta;
    doc["trace"] = st.rho.trace();
    doc["tail_mass"] = st.rho.tail_mass();
    doc["p"] = p.p;
    s << doc.dump(2) << '\n';
  } else {
    s << "quantity,n,value\n";
    s << "cutoff,," << st.rho.cutoff() << '\n';
    s << "trace,," << format_double(st.rho.trace()) << '\n';
    s << "tail_mass,," << format_double(st.rho.tail_mass()) << '\n';
    for (std::size_t n = 0; n < p.p.size(); ++n) s << "p," << n << ',' << format_double(p.p[n]) << '\n';
  }
  emit_text(s.str(), o.out, out);
  return kOk;
}

int cmd_wigner(const StateOptions& so, const OutputOptions& o, const GridOptions& g, const CLI::App& cmd,
               std::ostream& out) {
  const BuiltState st = build_state(spec_from_options(so, cmd));
  const WignerGrid grid = wigner_grid(st.rho, n_max_for(g, st.rho), g.phi_samples);
  const json meta = make_metadata(st.spec, st.rho.cutoff(), tail_tol_of(st.spec), !o.no_timestamps);
  emit_text(grid_text(grid, o, meta), o.out, out);
  return kOk;
}

int cmd_marginals(const StateOptions& so, const OutputOptions& o, const GridOptions& g,
                  const CLI::App& cmd, std::ostream& out) {
  const BuiltState st = build_state(spec_from_options(so, cmd));
  const auto photon = photon_marginal_analytic(st.rho);
  const auto phase = phase_distribution(st.rho, g.phi_samples);
  const json meta = make_metadata(st.spec, st.rho.cutoff(), tail_tol_of(st.spec), !o.no_timestamps);
  std::ostringstream s;
  if (o.format == "json") {
    s << marginals_document(photon, phase, meta).dump(2) << '\n';
  } else {
    write_marginals_csv(photon, phase, s);
  }
  emit_text(s.str(), o.out, out);
  return kOk;
}

int cmd_verify(const StateOptions& so, const OutputOptions& o, const GridOptions& g, const CLI::App& cmd,
               std::ostream& out) {
  const BuiltState st = build_state(spec_from_options(so, cmd));
  const DensityMatrix& rho = st.rho;
  const int cutoff = rho.cutoff();
  const int phi_samples =
      cmd.count("--phi-samples") > 0 ? g.phi_samples : std::max(g.phi_samples, exact_phi_samples(cutoff) + 1);
  const int theta_samples = g.theta_samples > 0 ? g.theta_samples : oracle::min_theta_samples(cutoff);

  ValidationReport report = oracle::brute_force_marginal_check(rho, phi_samples);

  std::vector<std::pair<int, double>> points;
  for (int n : {0, cutoff / 2, cutoff}) {
    for (double phi : {0.0, 0.3, 1.7, 4.1}) points.emplace_back(n, phi);
  }
  if (theta_samples < oracle::min_theta_samples(cutoff)) {
    report.checks.push_back({"characteristic_path", static_cast<double>(theta_samples),
                             static_cast<double>(oracle::min_theta_samples(cutoff)), false, true,
                             "theta_samples must exceed 2*cutoff + 2"});
  } else {
    report.checks.push_back(oracle::path_equivalence_check(rho, points, theta_samples));
  }

  const WignerGrid parallel = wigner_grid(rho, cutoff, phi_samples);
  const WignerGrid serial = wigner_grid_serial(rho, cutoff, phi_samples);
  double grid_dev = 0.0;
  for (std::size_t i = 0; i < serial.values.size(); ++i) {
    grid_dev = std::max(grid_dev, std::abs(parallel.values[i] - serial.values[i]));
  }
  report.add("parallel_grid", grid_dev, 1e-14);

  const double min_w = *std::min_element(serial.values.begin(), serial.values.end());
  report.add("min_w", std::max(0.0, -min_w), 1e-12, false, "min W over grid = " + format_double(min_w));

  const json meta = make_metadata(st.spec, cutoff, tail_tol_of(st.spec), !o.no_timestamps);
  std::ostringstream s;
  write_report_json(report, s, meta);
  emit_text(s.str(), o.out, out);
  return report.passed() ? kOk : kValidationFailure;
}

struct FigureSetup {
  json spec;
  double phi_origin = 0.0;
};

FigureSetup figure_setup(int figure) {
  switch (figure) {
    case 1:
      return {json{{"kind", "coherent"}, {"alpha", 4.0}, {"cutoff", "auto"}, {"tail_tol", kDefaultTailTol}}, 0.0};
    case 2:
      return {json{{"kind", "cat"}, {"alpha", 4.0}, {"cutoff", "auto"}, {"tail_tol", kDefaultTailTol}}, 0.0};
    default:
      // Grid aligned so φ0 is a node and the peak value is sampled exactly.
      return {json{{"kind", "phase"}, {"M", 20}, {"phi0", 0.7}, {"cutoff", 32}, {"tail_tol", kDefaultTailTol}},
              aligned_origin(0.7, kDefaultPhiSamples)};
  }
}

int cmd_figure(int figure, const OutputOptions& o, std::string slice_out, int phi_samples,
               std::ostream& out) {
  FigureSetup setup = figure_setup(figure);
  if (figure == 3) setup.phi_origin = aligned_origin(0.7, phi_samples);
  const BuiltState st = build_state(setup.spec);
  const json meta = make_metadata(st.spec, st.rho.cutoff(), tail_tol_of(st.spec), !o.no_timestamps);
  const WignerGrid grid = wigner_grid(st.rho, st.rho.cutoff(), phi_samples, setup.phi_origin);
  const std::string dest = o.out.empty() ? "fig" + std::to_string(figure) + "." + o.format : o.out;
  emit_text(grid_text(grid, o, meta), dest, out);
  if (figure == 1) {
    if (slice_out.empty()) {
      if (dest == "-") return kOk;
      std::filesystem::path p(dest);
      slice_out = (p.parent_path() / (p.stem().string() + "_slice" + p.extension().string())).string();
    }
    const WignerGrid slice = wigner_grid(st.rho, st.rho.cutoff(), 1, 0.5);
    emit_text(grid_text(slice, o, meta), slice_out, out);
  }
  return kOk;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Number-phase Wigner function toolkit", "npwigner"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  StateOptions so;
  OutputOptions oo;
  GridOptions go;

  auto* state = app.add_subcommand("state", "Print P(n), trace and tail mass of a state");
  add_state_options(*state, so);
  add_output_options(*state, oo);

  auto* wigner = app.add_subcommand("wigner", "Emit the W(n, phi) grid");
  add_state_options(*wigner, so);
  add_output_options(*wigner, oo);
  add_grid_options(*wigner, go);

  auto* marginals = app.add_subcommand("marginals", "Emit photon-number and phase marginals");
  add_state_options(*marginals, so);
  add_output_options(*marginals, oo);
  add_grid_options(*marginals, go);

  auto* verify = app.add_subcommand("verify", "Cross-check marginals and evaluation paths");
  add_state_options(*verify, so);
  add_output_options(*verify, oo);
  add_grid_options(*verify, go);

  int figure_id = 0;
  std::string slice_out;
  int figure_samples = kDefaultPhiSamples;
  OutputOptions fo;
  fo.out.clear();
  auto* figure = app.add_subcommand("figure", "Emit the grid for figure 1, 2 or 3");
  figure->add_option("id", figure_id, "Figure number")->required()->check(CLI::IsMember({1, 2, 3}));
  add_output_options(*figure, fo);
  figure->add_option("--slice-out", slice_out, "Figure 1 phi=0.5 slice path");
  figure->add_option("--phi-samples", figure_samples, "Uniform phase samples")->check(CLI::Range(1, 1 << 20));

  // CLI11 expects argv order reversed.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "npwigner: usage error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (*state) return cmd_state(so, oo, *state, out);
    if (*wigner) return cmd_wigner(so, oo, go, *wigner, out);
    if (*marginals) return cmd_marginals(so, oo, go, *marginals, out);
    if (*verify) return cmd_verify(so, oo, go, *verify, out);
    if (*figure) return cmd_figure(figure_id, fo, slice_out, figure_samples, out);
  } catch (const UsageError& e) {
    err << "npwigner: usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const SpecError& e) {
    err << "npwigner: usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const nlohmann::json::exception& e) {
    err << "npwigner: usage error: bad state spec: " << e.what() << '\n';
    return kUsageError;
  } catch (const CutoffError& e) {
    err << "npwigner: cutoff error: " << e.what() << '\n';
    return kValidationFailure;
  } catch (const std::exception& e) {
    err << "npwigner: error: " << e.what() << '\n';
    return kValidationFailure;
  }
  return kUsageError;
}

int run(int argc, const char* const* argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace npw::cli
