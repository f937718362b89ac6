#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "votelab/ballots.hpp"
#include "votelab/ratings.hpp"

namespace votelab {

enum class Command { Table1, Dropout1, Dropout2, Dropout3, Election };
enum class OutputFormat { Csv, Json };

std::string_view to_string(Command c) noexcept;
std::string_view to_string(OutputFormat f) noexcept;

/// Everything needed to reproduce one run.
struct RunManifest {
    Command command = Command::Table1;
    std::vector<StudyType> types{StudyType::Exact};
    std::vector<std::size_t> candidates{5};
    std::size_t voters = 100;
    std::uint64_t trials = 1'000'000;
    std::uint64_t seed = 1;
    unsigned workers = 0;  ///< 0 = machine parallelism
    std::optional<std::filesystem::path> ballots;
    std::optional<std::filesystem::path> out;  ///< stdout when empty
    OutputFormat format = OutputFormat::Csv;
    GradeScale scale;
};

class ManifestError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Thrown for --help; carries the rendered usage text.
class HelpRequested : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/**
 * Parses command-line arguments (without the program name). Values come from,
 * in decreasing precedence: flags, the JSON object named by --config, and the
 * per-command defaults. Throws ManifestError on unknown flags, malformed or
 * out-of-range values, and a missing command.
 */
RunManifest parse_manifest(const std::vector<std::string>& args);

}  // namespace votelab
