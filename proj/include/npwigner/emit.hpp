#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "json.hpp"
#include "npwigner/marginals.hpp"
#include "npwigner/report.hpp"
#include "npwigner/wigner.hpp"

namespace npw {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kReportSchemaVersion = 1;

using ordered_json = nlohmann::ordered_json;

// Shortest-safe decimal form of a double: 17 significant digits, so it round-trips exactly.
std::string format_double(double v);

// Metadata block shared by all JSON documents. The timestamp is the only
// non-deterministic field and is omitted when `timestamp` is false.
ordered_json make_metadata(const ordered_json& state_spec, int cutoff, double tail_tol, bool timestamp);

// Long-format CSV: header "n,phi,w", one record per cell, n-major then φ.
void write_grid_csv(const WignerGrid& grid, std::ostream& out);
void write_grid_csv(const WignerGrid& grid, const std::filesystem::path& destination);

// Parses a long-format CSV written by write_grid_csv back into a grid. φ values must form a uniform
// periodic grid; the origin is taken from the first record.
WignerGrid read_grid_csv(std::istream& in, int cutoff);

// {metadata, axes: {n, phi}, values: row-major}
ordered_json grid_document(const WignerGrid& grid, const ordered_json& metadata);

// {schema_version, [metadata], checks: [{name, deviation, threshold, passed, gating, note}]}
// Deviations and thresholds are decimal strings with 17 significant digits.
ordered_json report_document(const ValidationReport& report, const ordered_json& metadata = {});
void write_report_json(const ValidationReport& report, std::ostream& out,
                       const ordered_json& metadata = {});
void write_report_json(const ValidationReport& report, const std::filesystem::path& destination,
                       const ordered_json& metadata = {});

// CSV "marginal,x,value": photon rows carry x = n, phase rows carry x = φ.
void write_marginals_csv(const PhotonDistribution& photon, const PhaseDistribution& phase,
                         std::ostream& out);
ordered_json marginals_document(const PhotonDistribution& photon, const PhaseDistribution& phase,
                                const ordered_json& metadata);

// Writes `text` to `destination`, throwing npw::Error if the file cannot be written.
void write_text_file(const std::filesystem::path& destination, const std::string& text);

}  // namespace npw
