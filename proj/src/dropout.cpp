#include "votelab/dropout.hpp"

#include <limits>
#include <stdexcept>
#include <string>

#include "votelab/random.hpp"
#include "votelab/rules.hpp"
#include "votelab/trial_loop.hpp"

namespace votelab {

DropoutTrial make_dropout_trial(PairwiseTally tally, std::array<double, 3> centrism,
                                Candidate withdrawn)
{
    if (tally.candidates() != 3)
        throw std::invalid_argument("dropout trial needs exactly 3 candidates");
    if (withdrawn > 2)
        throw std::invalid_argument("withdrawn candidate out of range");
    DropoutTrial t;
    t.tally = std::move(tally);
    t.centrism = centrism;
    t.withdrawn = withdrawn;
    std::size_t k = 0;
    for (Candidate c = 0; c < 3; ++c)
        if (c != withdrawn)
            t.remaining[k++] = c;
    return t;
}

namespace {

std::optional<Candidate> smaller(const DropoutTrial& t, int first, int second)
{
    if (first < second)
        return t.remaining[0];
    if (second < first)
        return t.remaining[1];
    return std::nullopt;
}

}  // namespace

std::optional<Candidate> strategy_hh(const DropoutTrial& t)
{
    return mr_two_way(t.tally, t.remaining[0], t.remaining[1]);
}

std::optional<Candidate> strategy_mm(const DropoutTrial& t)
{
    return smaller(t, largest_loss(t.tally, t.remaining[0]),
                   largest_loss(t.tally, t.remaining[1]));
}

std::optional<Candidate> strategy_wm(const DropoutTrial& t)
{
    return smaller(t, margin(t.tally, t.withdrawn, t.remaining[0]),
                   margin(t.tally, t.withdrawn, t.remaining[1]));
}

Candidate more_centrist(const DropoutTrial& t) noexcept
{
    const Candidate a = t.remaining[0];
    const Candidate b = t.remaining[1];
    return t.centrism[a] < t.centrism[b] ? a : b;
}

double StrategyDuel::share_first() const noexcept
{
    if (disagreements == 0)
        return std::numeric_limits<double>::quiet_NaN();
    return 100.0 * static_cast<double>(wins_first) / static_cast<double>(disagreements);
}

DropoutStudy dropout_study_from_int(int value)
{
    if (value < 1 || value > 3)
        throw std::invalid_argument("dropout study must be in 1..3 (got " +
                                    std::to_string(value) + ")");
    return static_cast<DropoutStudy>(value);
}

void DropoutConfig::validate() const
{
    dropout_study_from_int(static_cast<int>(study));
    if (voters < 1)
        throw std::invalid_argument("dropout study needs at least 1 voter");
    if (target_kept_trials < 1)
        throw std::invalid_argument("dropout study needs a positive kept-trial target");
}

std::string_view to_string(DropoutDiscard r) noexcept
{
    switch (r) {
    case DropoutDiscard::Filter: return "filter";
    case DropoutDiscard::StrategyTie: return "strategy-tie";
    }
    return "unknown";
}

std::vector<std::string_view> strategy_names(DropoutStudy study)
{
    if (study == DropoutStudy::ParadoxLoserWithdraws)
        return {"MX", "HH"};
    return {"HH", "MM", "WM"};
}

namespace {

struct DuelSpec {
    std::size_t first;
    std::size_t second;
};

// Indices into strategy_names(); first-named as reported for each study.
std::vector<DuelSpec> duel_specs(DropoutStudy study)
{
    switch (study) {
    case DropoutStudy::ParadoxFreeWinnerWithdraws: return {{2, 0}, {2, 1}, {0, 1}};
    case DropoutStudy::ParadoxWinnerWithdraws: return {{1, 0}, {1, 2}, {0, 2}};
    case DropoutStudy::ParadoxLoserWithdraws: return {{0, 1}};
    }
    return {};
}

// A cycle with every margin nonzero and three distinct largest losses.
bool is_separable_paradox(const PairwiseTally& tally)
{
    for (Candidate a = 0; a < 3; ++a)
        for (Candidate b = a + 1; b < 3; ++b)
            if (margin(tally, a, b) == 0)
                return false;
    if (condorcet_winner(tally))
        return false;
    const int l0 = largest_loss(tally, 0);
    const int l1 = largest_loss(tally, 1);
    const int l2 = largest_loss(tally, 2);
    return l0 != l1 && l1 != l2 && l0 != l2;
}

}  // namespace

DropoutVerdict judge_dropout(DropoutStudy study, const PairwiseTally& tally,
                             const std::array<double, 3>& centrism)
{
    if (tally.candidates() != 3)
        throw std::invalid_argument("dropout studies use exactly 3 candidates");
    DropoutVerdict v;

    Candidate withdrawn = 0;
    Candidate minimax = 0;
    if (study == DropoutStudy::ParadoxFreeWinnerWithdraws) {
        const auto cw = condorcet_winner(tally);
        if (!cw) {
            v.discarded = DropoutDiscard::Filter;
            return v;
        }
        withdrawn = *cw;
    } else {
        if (!is_separable_paradox(tally)) {
            v.discarded = DropoutDiscard::Filter;
            return v;
        }
        minimax = *minimax_winner(tally);
        if (study == DropoutStudy::ParadoxWinnerWithdraws) {
            withdrawn = minimax;
        } else {
            // In a cycle the minimax winner beats exactly one opponent.
            for (Candidate c = 0; c < 3; ++c)
                if (c != minimax && margin(tally, minimax, c) > 0)
                    withdrawn = c;
        }
    }

    const DropoutTrial trial = make_dropout_trial(tally, centrism, withdrawn);
    v.best = more_centrist(trial);
    const auto hh = strategy_hh(trial);
    if (study == DropoutStudy::ParadoxLoserWithdraws) {
        if (!hh) {
            v.discarded = DropoutDiscard::StrategyTie;
            return v;
        }
        v.picks = {minimax, *hh, 0};
        return v;
    }
    const auto mm = strategy_mm(trial);
    const auto wm = strategy_wm(trial);
    if (!hh || !mm || !wm) {
        v.discarded = DropoutDiscard::StrategyTie;
        return v;
    }
    v.picks = {*hh, *mm, *wm};
    return v;
}

DropoutVerdict evaluate_dropout_trial(const DropoutConfig& config, std::uint64_t index)
{
    TrialStream stream(config.master_seed, index);
    const TrialSetup setup = sample_trial(config.voters, 3, stream);
    const RatingsMatrix ratings = make_ratings(setup, StudyType::Exact, stream);
    const auto c = centrisms(setup);
    return judge_dropout(config.study, pairwise_tally(ratings), {c[0], c[1], c[2]});
}

namespace {

class DropoutAccumulator {
public:
    explicit DropoutAccumulator(DropoutStudy study)
        : names_(strategy_names(study)), specs_(duel_specs(study))
    {
        for (const DuelSpec& s : specs_)
            duels_.push_back(StrategyDuel{names_[s.first], names_[s.second]});
        for (std::string_view n : names_)
            hits_.push_back(StrategyHits{n});
    }

    bool add(const DropoutVerdict& v)
    {
        if (v.discarded) {
            ++discarded_[static_cast<std::size_t>(*v.discarded)];
            return false;
        }
        ++kept_;
        for (std::size_t i = 0; i < names_.size(); ++i) {
            ++hits_[i].trials;
            if (v.picks[i] == v.best)
                ++hits_[i].hits;
        }
        for (std::size_t k = 0; k < specs_.size(); ++k) {
            const Candidate a = v.picks[specs_[k].first];
            const Candidate b = v.picks[specs_[k].second];
            if (a == b)
                continue;
            ++duels_[k].disagreements;
            if (a == v.best)
                ++duels_[k].wins_first;
            else
                ++duels_[k].wins_second;
        }
        return true;
    }

    void fill(DropoutResult& out) const
    {
        out.duels = duels_;
        out.hits = hits_;
        out.kept_trials = kept_;
        out.discarded_by_reason = discarded_;
    }

private:
    std::vector<std::string_view> names_;
    std::vector<DuelSpec> specs_;
    std::vector<StrategyDuel> duels_;
    std::vector<StrategyHits> hits_;
    std::uint64_t kept_ = 0;
    std::array<std::uint64_t, kDropoutDiscardReasons> discarded_{};
};

template <bool Parallel>
DropoutResult run(const DropoutConfig& config)
{
    config.validate();
    DropoutAccumulator acc(config.study);
    auto evaluate = [&config](std::uint64_t i) { return evaluate_dropout_trial(config, i); };
    auto consume = [&acc](const DropoutVerdict& v) { return acc.add(v); };
    DropoutResult out;
    out.config = config;
    if constexpr (Parallel)
        out.trials_consumed =
            scan_trials_parallel(config.target_kept_trials, config.workers, evaluate, consume);
    else
        out.trials_consumed = scan_trials_serial(config.target_kept_trials, evaluate, consume);
    acc.fill(out);
    return out;
}

DropoutResult run_numbered(DropoutStudy study, std::uint64_t n, std::uint64_t seed,
                           unsigned workers)
{
    DropoutConfig cfg;
    cfg.study = study;
    cfg.target_kept_trials = n;
    cfg.master_seed = seed;
    cfg.workers = workers;
    return run<true>(cfg);
}

}  // namespace

DropoutResult run_dropout_study(const DropoutConfig& config)
{
    return run<true>(config);
}

DropoutResult run_dropout_study_serial(const DropoutConfig& config)
{
    return run<false>(config);
}

DropoutResult run_study1(std::uint64_t n_trials, std::uint64_t seed, unsigned workers)
{
    return run_numbered(DropoutStudy::ParadoxFreeWinnerWithdraws, n_trials, seed, workers);
}

DropoutResult run_study2(std::uint64_t n_trials, std::uint64_t seed, unsigned workers)
{
    return run_numbered(DropoutStudy::ParadoxWinnerWithdraws, n_trials, seed, workers);
}

DropoutResult run_study3(std::uint64_t n_trials, std::uint64_t seed, unsigned workers)
{
    return run_numbered(DropoutStudy::ParadoxLoserWithdraws, n_trials, seed, workers);
}

}  // namespace votelab
