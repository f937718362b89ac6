#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "votelab/ratings.hpp"
#include "votelab/spatial.hpp"
#include "votelab/tally.hpp"

namespace votelab {

/// A three-candidate race after one candidate has withdrawn.
struct DropoutTrial {
    PairwiseTally tally;
    std::array<double, 3> centrism{};
    Candidate withdrawn = 0;
    std::array<Candidate, 2> remaining{};
};

/// Throws std::invalid_argument unless the tally has exactly 3 candidates and
/// `withdrawn` is one of them.
DropoutTrial make_dropout_trial(PairwiseTally tally, std::array<double, 3> centrism,
                                Candidate withdrawn);

/// Head to head: majority winner of the remaining pair. Empty on a zero margin.
std::optional<Candidate> strategy_hh(const DropoutTrial& trial);

/// Smaller largest loss over both of the survivor's races (including the one
/// against the withdrawn candidate). Empty on equal largest losses.
std::optional<Candidate> strategy_mm(const DropoutTrial& trial);

/// Smaller margin of loss to the withdrawn candidate (a win is a negative
/// loss). Empty on equal margins.
std::optional<Candidate> strategy_wm(const DropoutTrial& trial);

/// The survivor with the smaller centrism value.
Candidate more_centrist(const DropoutTrial& trial) noexcept;

struct StrategyDuel {
    std::string_view first;
    std::string_view second;
    std::uint64_t wins_first = 0;
    std::uint64_t wins_second = 0;
    std::uint64_t disagreements = 0;

    /// Percentage of disagreement trials won by `first`; NaN if there were none.
    double share_first() const noexcept;

    bool operator==(const StrategyDuel&) const = default;
};

struct StrategyHits {
    std::string_view strategy;
    std::uint64_t hits = 0;    ///< trials where the strategy picked the more centrist survivor
    std::uint64_t trials = 0;

    bool operator==(const StrategyHits&) const = default;
};

enum class DropoutStudy : int {
    ParadoxFreeWinnerWithdraws = 1,
    ParadoxWinnerWithdraws = 2,
    ParadoxLoserWithdraws = 3,
};

/// Throws std::invalid_argument unless 1 <= value <= 3.
DropoutStudy dropout_study_from_int(int value);

struct DropoutConfig {
    DropoutStudy study = DropoutStudy::ParadoxFreeWinnerWithdraws;
    std::uint64_t target_kept_trials = 100'000;
    std::size_t voters = 75;
    std::uint64_t master_seed = 1;
    unsigned workers = 0;

    void validate() const;
};

enum class DropoutDiscard : int {
    Filter = 0,         ///< trial does not have the structure the study asks for
    StrategyTie = 1,    ///< some strategy could not pick a survivor
};
inline constexpr std::size_t kDropoutDiscardReasons = 2;
std::string_view to_string(DropoutDiscard r) noexcept;

struct DropoutVerdict {
    std::optional<DropoutDiscard> discarded;
    /// Picks in the study's strategy order; only the first strategy_count are used.
    std::array<Candidate, 3> picks{};
    Candidate best = 0;

    bool operator==(const DropoutVerdict&) const = default;
};

/// Evaluates a 3-candidate tally and centrism values under a study's filter.
DropoutVerdict judge_dropout(DropoutStudy study, const PairwiseTally& tally,
                             const std::array<double, 3>& centrism);

/// Samples and judges trial `index` of a dropout study.
DropoutVerdict evaluate_dropout_trial(const DropoutConfig& config, std::uint64_t index);

/// Strategy names in pick order for a study: HH, MM, WM for studies 1-2;
/// MX (keep the minimax winner), HH for study 3.
std::vector<std::string_view> strategy_names(DropoutStudy study);

struct DropoutResult {
    DropoutConfig config;
    std::vector<StrategyDuel> duels;
    std::vector<StrategyHits> hits;
    std::uint64_t kept_trials = 0;
    std::uint64_t trials_consumed = 0;
    std::array<std::uint64_t, kDropoutDiscardReasons> discarded_by_reason{};

    bool operator==(const DropoutResult& o) const
    {
        return duels == o.duels && hits == o.hits && kept_trials == o.kept_trials &&
               trials_consumed == o.trials_consumed &&
               discarded_by_reason == o.discarded_by_reason;
    }
};

/// Parallel runner shared by the three studies.
DropoutResult run_dropout_study(const DropoutConfig& config);
DropoutResult run_dropout_study_serial(const DropoutConfig& config);

DropoutResult run_study1(std::uint64_t n_trials, std::uint64_t seed, unsigned workers = 0);
DropoutResult run_study2(std::uint64_t n_trials, std::uint64_t seed, unsigned workers = 0);
DropoutResult run_study3(std::uint64_t n_trials, std::uint64_t seed, unsigned workers = 0);

}  // namespace votelab
