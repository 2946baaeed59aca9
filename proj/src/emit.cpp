#include "npwigner/emit.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "npwigner/errors.hpp"
#include "npwigner/phase.hpp"

namespace npw {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

ordered_json make_metadata(const ordered_json& state_spec, int cutoff, double tail_tol, bool timestamp) {
  ordered_json meta;
  meta["tool"] = "npwigner";
  meta["tool_version"] = kToolVersion;
  meta["state"] = state_spec;
  meta["cutoff"] = cutoff;
  meta["tail_tol"] = tail_tol;
  if (timestamp) {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    meta["generated_at"] = buf;
  }
  return meta;
}

void write_grid_csv(const WignerGrid& grid, std::ostream& out) {
  out << "n,phi,w\n";
  for (int n = 0; n < grid.rows(); ++n) {
    for (int j = 0; j < grid.phi_samples; ++j) {
      out << n << ',' << format_double(grid.phi(j)) << ',' << format_double(grid.at(n, j)) << '\n';
    }
  }
}

void write_text_file(const std::filesystem::path& destination, const std::string& text) {
  std::ofstream f(destination, std::ios::binary | std::ios::trunc);
  if (!f) throw Error("cannot open " + destination.string() + " for writing");
  f << text;
  f.flush();
  if (!f) throw Error("failed writing " + destination.string());
}

void write_grid_csv(const WignerGrid& grid, const std::filesystem::path& destination) {
  std::ostringstream s;
  write_grid_csv(grid, s);
  write_text_file(destination, s.str());
}

WignerGrid read_grid_csv(std::istream& in, int cutoff) {
  std::string line;
  if (!std::getline(in, line) || line != "n,phi,w") throw ValidationError("missing n,phi,w header");
  std::vector<int> ns;
  std::vector<double> phis;
  std::vector<double> ws;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto c1 = line.find(',');
    const auto c2 = line.find(',', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos) {
      throw ValidationError("malformed CSV record: " + line);
    }
    ns.push_back(std::stoi(line.substr(0, c1)));
    phis.push_back(std::strtod(line.c_str() + c1 + 1, nullptr));
    ws.push_back(std::strtod(line.c_str() + c2 + 1, nullptr));
  }
  if (ns.empty()) throw ValidationError("CSV has no records");
  int samples = 0;
  while (samples < static_cast<int>(ns.size()) && ns[static_cast<std::size_t>(samples)] == ns.front()) {
    ++samples;
  }
  if (ns.size() % static_cast<std::size_t>(samples) != 0) {
    throw ValidationError("CSV rows have unequal lengths");
  }
  WignerGrid grid;
  grid.phi_samples = samples;
  grid.n_max = static_cast<int>(ns.size()) / samples - 1;
  grid.phi_origin = phis.front();
  grid.cutoff = cutoff;
  grid.values = std::move(ws);
  for (std::size_t i = 0; i < ns.size(); ++i) {
    if (ns[i] != static_cast<int>(i) / samples) throw ValidationError("CSV rows out of order");
  }
  return grid;
}

ordered_json grid_document(const WignerGrid& grid, const ordered_json& metadata) {
  ordered_json doc;
  doc["metadata"] = metadata;
  ordered_json n_axis = ordered_json::array();
  for (int n = 0; n < grid.rows(); ++n) n_axis.push_back(n);
  ordered_json phi_axis = ordered_json::array();
  for (int j = 0; j < grid.phi_samples; ++j) phi_axis.push_back(grid.phi(j));
  doc["axes"] = {{"n", std::move(n_axis)}, {"phi", std::move(phi_axis)}};
  doc["values"] = grid.values;
  return doc;
}

ordered_json report_document(const ValidationReport& report, const ordered_json& metadata) {
  ordered_json doc;
  doc["schema_version"] = kReportSchemaVersion;
  if (!metadata.is_null()) doc["metadata"] = metadata;
  doc["passed"] = report.passed();
  ordered_json checks = ordered_json::array();
  for (const auto& c : report.checks) {
    ordered_json j;
    j["name"] = c.name;
    j["deviation"] = format_double(c.deviation);
    j["threshold"] = format_double(c.threshold);
    j["passed"] = c.passed;
    j["gating"] = c.gating;
    if (!c.note.empty()) j["note"] = c.note;
    checks.push_back(std::move(j));
  }
  doc["checks"] = std::move(checks);
  return doc;
}

void write_report_json(const ValidationReport& report, std::ostream& out, const ordered_json& metadata) {
  out << report_document(report, metadata).dump(2) << '\n';
}

void write_report_json(const ValidationReport& report, const std::filesystem::path& destination,
                       const ordered_json& metadata) {
  write_text_file(destination, report_document(report, metadata).dump(2) + "\n");
}

void write_marginals_csv(const PhotonDistribution& photon, const PhaseDistribution& phase,
                         std::ostream& out) {
  out << "marginal,x,value\n";
  for (std::size_t n = 0; n < photon.p.size(); ++n) {
    out << "photon," << n << ',' << format_double(photon.p[n]) << '\n';
  }
  for (int j = 0; j < phase.phi_samples; ++j) {
    out << "phase," << format_double(phase.phi(j)) << ','
        << format_double(phase.values[static_cast<std::size_t>(j)]) << '\n';
  }
}

ordered_json marginals_document(const PhotonDistribution& photon, const PhaseDistribution& phase,
                                const ordered_json& metadata) {
  ordered_json doc;
  doc["metadata"] = metadata;
  doc["photon"] = {{"p", photon.p}};
  if (photon.warning) doc["photon"]["warning"] = *photon.warning;
  ordered_json phis = ordered_json::array();
  for (int j = 0; j < phase.phi_samples; ++j) phis.push_back(phase.phi(j));
  doc["phase"] = {{"phi", std::move(phis)}, {"values", phase.values}};
  return doc;
}

}  // namespace npw
