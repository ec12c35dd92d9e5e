// JSON/CSV serialization shared by the CLI, the python bindings and the
// tests. Channel files round-trip bit-exactly (17 significant digits).
#pragma once

#include <string>

#include "qcap/capacity.hpp"
#include "qcap/sampling.hpp"

namespace qcap {

// Channel JSON schema:
//   {"d_in": n, "d_out": m, "kraus": [matrix, ...]}
// where a matrix is a list of rows and every entry is [re, im].
std::string channel_to_json(const QuantumChannel& t);

// Parses without the TP check so that validation errors can be reported
// with their residuals. Throws std::runtime_error on malformed input.
QuantumChannel channel_from_json(const std::string& text);

std::string report_to_json(const DegradabilityReport& r);
std::string capacity_to_json(const CapacityResult& r);
std::string stats_to_json(const SampleStats& s);

// One surface row, "%.9f" for the numeric columns.
std::string surface_row(double alpha, double beta, double capacity,
                        Verdict verdict);

// Exit-code contract shared with the CLI: 0 for any conclusive verdict,
// 2 for inconclusive (64/65 are reserved for usage/data errors).
int verdict_exit_code(Verdict v);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace qcap
