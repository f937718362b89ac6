#include "votelab/harness.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "votelab/random.hpp"
#include "votelab/stats.hpp"
#include "votelab/tally.hpp"
#include "votelab/trial_loop.hpp"

namespace votelab {

void StudyConfig::validate() const
{
    if (candidates < 3)
        throw std::invalid_argument("study needs at least 3 candidates");
    if (voters < 1)
        throw std::invalid_argument("study needs at least 1 voter");
    if (target_kept_trials < 1)
        throw std::invalid_argument("study needs a positive kept-trial target");
}

std::string_view to_string(DiscardReason r) noexcept
{
    switch (r) {
    case DiscardReason::FinalistFilter: return "finalist-filter";
    case DiscardReason::TieInSystem: return "tie-in-system";
    case DiscardReason::UnresolvedMJ: return "unresolved-mj";
    }
    return "unknown";
}

TrialVerdict run_trial(const TrialSetup& setup, const RatingsMatrix& ratings)
{
    const std::size_t c = ratings.candidates();
    if (c < 3)
        throw std::invalid_argument("run_trial: need at least 3 candidates");
    if (setup.candidates.size() != c)
        throw std::invalid_argument("run_trial: setup and ratings disagree on candidates");

    TrialVerdict v;
    const auto finalists = select_finalists(MajorityGrades(ratings));
    if (!finalists) {
        v.discarded = DiscardReason::UnresolvedMJ;
        return v;
    }
    v.finalists = finalists;
    const double d1 = centrism(setup.candidates[finalists->first], setup);
    const double d2 = centrism(setup.candidates[finalists->second], setup);
    v.more_centrist_finalist = d1 < d2 ? finalists->first : finalists->second;

    const PairwiseTally tally = pairwise_tally(ratings);
    const auto losers = losers_of(c, *finalists);
    for (Candidate l : losers) {
        if (margin(tally, finalists->first, l) <= 0 || margin(tally, finalists->second, l) <= 0) {
            v.discarded = DiscardReason::FinalistFilter;
            return v;
        }
    }

    const auto mr = mr_two_way(tally, finalists->first, finalists->second);
    const auto qb = qb_winner(tally, *finalists, losers);
    const auto qm = qm_winner(tally, *finalists, losers);
    if (!mr || !qb || !qm) {
        v.discarded = DiscardReason::TieInSystem;
        return v;
    }
    v.picks = SystemPicks{finalists->first, *mr, *qb, *qm};
    return v;
}

TrialVerdict evaluate_trial(const StudyConfig& config, std::uint64_t index)
{
    TrialStream stream(config.master_seed, index);
    const TrialSetup setup = sample_trial(config.voters, config.candidates, stream);
    const RatingsMatrix ratings = make_ratings(setup, config.study_type, stream);
    return run_trial(setup, ratings);
}

double LineStat::percentage() const noexcept
{
    if (denominator == 0)
        return std::numeric_limits<double>::quiet_NaN();
    return 100.0 * static_cast<double>(numerator) / static_cast<double>(denominator);
}

double LineStat::standard_error() const
{
    if (denominator == 0)
        return std::numeric_limits<double>::quiet_NaN();
    return votelab::standard_error(
        static_cast<double>(numerator) / static_cast<double>(denominator), denominator);
}

bool Table1Accumulator::add(const TrialVerdict& v)
{
    if (v.discarded) {
        ++discarded_[static_cast<std::size_t>(*v.discarded)];
        return false;
    }
    ++kept_;
    const SystemPicks& p = *v.picks;
    const Candidate best = *v.more_centrist_finalist;
    const bool agree = p.qb == p.qm;

    auto hit = [&](std::size_t line, Candidate pick) {
        ++lines_[line].denominator;
        if (pick == best)
            ++lines_[line].numerator;
    };
    // Lines 4-10 only count trials where the two systems differ.
    auto duel = [&](std::size_t line, Candidate first, Candidate second) {
        if (first != second)
            hit(line, first);
    };

    hit(0, p.qb);
    hit(1, p.qm);
    if (agree)
        hit(2, p.qb);
    duel(3, p.qb, p.mj);
    duel(4, p.qm, p.mj);
    if (agree)
        duel(5, p.qb, p.mj);
    duel(6, p.mr, p.mj);
    duel(7, p.qb, p.mr);
    duel(8, p.qm, p.mr);
    if (agree)
        duel(9, p.qb, p.mr);
    return true;
}

void Table1Accumulator::fill(Table1Result& out) const
{
    out.lines = lines_;
    out.kept_trials = kept_;
    out.discarded_by_reason = discarded_;
}

namespace {

template <bool Parallel>
Table1Result run_study(const StudyConfig& config)
{
    config.validate();
    Table1Accumulator acc;
    auto evaluate = [&config](std::uint64_t i) { return evaluate_trial(config, i); };
    auto consume = [&acc](const TrialVerdict& v) { return acc.add(v); };
    Table1Result out;
    out.config = config;
    if constexpr (Parallel)
        out.trials_consumed =
            scan_trials_parallel(config.target_kept_trials, config.workers, evaluate, consume);
    else
        out.trials_consumed = scan_trials_serial(config.target_kept_trials, evaluate, consume);
    acc.fill(out);
    return out;
}

}  // namespace

Table1Result run_table1_study(const StudyConfig& config)
{
    return run_study<true>(config);
}

Table1Result run_table1_study_serial(const StudyConfig& config)
{
    return run_study<false>(config);
}

}  // namespace votelab
