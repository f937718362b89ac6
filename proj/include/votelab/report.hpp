#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "votelab/ballots.hpp"
#include "votelab/dropout.hpp"
#include "votelab/harness.hpp"
#include "votelab/manifest.hpp"

namespace votelab {

/// Table-1 layout: one row per line, one column per study, integer percentages.
void write_table1_csv(std::ostream& out, const RunManifest& m,
                      const std::vector<Table1Result>& results);
/// Full-precision companion: numerators, denominators, percentages and SEs.
void write_table1_precise_csv(std::ostream& out, const RunManifest& m,
                              const std::vector<Table1Result>& results);
void write_table1_json(std::ostream& out, const RunManifest& m,
                       const std::vector<Table1Result>& results);

void write_dropout_csv(std::ostream& out, const RunManifest& m, const DropoutResult& r);
void write_dropout_json(std::ostream& out, const RunManifest& m, const DropoutResult& r);

void write_election_csv(std::ostream& out, const RunManifest& m, const ElectionReport& r);
void write_election_json(std::ostream& out, const RunManifest& m, const ElectionReport& r);

/// Path of the full-precision companion written next to a Table-1 CSV.
std::filesystem::path precise_companion_path(const std::filesystem::path& csv_path);

/// Writes `content` to `path`; throws std::runtime_error if it cannot.
void write_file(const std::filesystem::path& path, const std::string& content);

}  // namespace votelab
