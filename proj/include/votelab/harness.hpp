#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "votelab/ratings.hpp"
#include "votelab/rules.hpp"
#include "votelab/spatial.hpp"

namespace votelab {

struct StudyConfig {
    StudyType study_type = StudyType::Exact;
    std::size_t candidates = 5;
    std::size_t voters = 100;
    std::uint64_t target_kept_trials = 1'000'000;
    std::uint64_t master_seed = 1;
    unsigned workers = 0;  ///< 0 = all available

    /// Throws std::invalid_argument on c < 3, zero voters, or a zero target.
    void validate() const;
};

enum class DiscardReason : int {
    FinalistFilter = 0,  ///< a finalist lost or tied a race against a loser
    TieInSystem = 1,     ///< MR, QB or QM tied
    UnresolvedMJ = 2,    ///< MJ could not separate two candidates
};
inline constexpr std::size_t kDiscardReasons = 3;
std::string_view to_string(DiscardReason r) noexcept;

struct SystemPicks {
    Candidate mj;
    Candidate mr;
    Candidate qb;
    Candidate qm;

    bool operator==(const SystemPicks&) const = default;
};

struct TrialVerdict {
    std::optional<FinalistPair> finalists;
    std::optional<SystemPicks> picks;  ///< set only for kept trials
    std::optional<Candidate> more_centrist_finalist;
    std::optional<DiscardReason> discarded;

    bool kept() const noexcept { return !discarded.has_value(); }
    bool operator==(const TrialVerdict&) const = default;
};

/// Evaluates one trial: finalists, keep filter, the four systems, and which
/// finalist is more centrist. Requires at least 3 candidates.
TrialVerdict run_trial(const TrialSetup& setup, const RatingsMatrix& ratings);

/// Samples trial `index` of a study from (master_seed, index) and runs it.
TrialVerdict evaluate_trial(const StudyConfig& config, std::uint64_t index);

struct LineStat {
    std::uint64_t numerator = 0;
    std::uint64_t denominator = 0;

    /// NaN when the denominator is zero.
    double percentage() const noexcept;
    /// NaN when the denominator is zero.
    double standard_error() const;

    bool operator==(const LineStat&) const = default;
};

inline constexpr std::size_t kTable1Lines = 10;

/// Row labels; the first-named system is the one credited in lines 4-10.
inline constexpr std::array<std::string_view, kTable1Lines> kTable1Labels = {
    "QB", "QM", "QBQM", "QB > MJ", "QM > MJ", "QBQM > MJ",
    "MR > MJ", "QB > MR", "QM > MR", "QBQM > MR",
};

struct Table1Result {
    StudyConfig config;
    std::array<LineStat, kTable1Lines> lines{};
    std::uint64_t kept_trials = 0;
    std::uint64_t trials_consumed = 0;
    std::array<std::uint64_t, kDiscardReasons> discarded_by_reason{};

    bool operator==(const Table1Result& o) const
    {
        return lines == o.lines && kept_trials == o.kept_trials &&
               trials_consumed == o.trials_consumed &&
               discarded_by_reason == o.discarded_by_reason;
    }
};

/// Folds verdicts into the ten Table-1 lines. Returns true for kept verdicts.
class Table1Accumulator {
public:
    bool add(const TrialVerdict& v);
    void fill(Table1Result& out) const;

private:
    std::array<LineStat, kTable1Lines> lines_{};
    std::uint64_t kept_ = 0;
    std::array<std::uint64_t, kDiscardReasons> discarded_{};
};

/// Parallel study runner (OpenMP when available).
Table1Result run_table1_study(const StudyConfig& config);

/// Single-threaded reference runner; produces results identical to run_table1_study.
Table1Result run_table1_study_serial(const StudyConfig& config);

}  // namespace votelab
