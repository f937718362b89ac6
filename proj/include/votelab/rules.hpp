#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "votelab/ratings.hpp"
#include "votelab/tally.hpp"

namespace votelab {

struct MJOutcome {
    /// Empty when the top candidates have identical sorted grade columns.
    std::optional<Candidate> winner;
    /// Indexed by candidate; NaN for candidates outside the eligible set.
    std::vector<double> median_grade;
    bool tiebreak_used = false;
    /// 1-based row (grades sorted high to low) that settled the tie.
    std::optional<std::size_t> tiebreak_row;
};

/// 1-based median row of n grades sorted high to low: (n + 1) / 2 for odd n,
/// n / 2 + 1 (the lower median) for even n.
std::size_t mj_median_row(std::size_t n);

/// Rows in the order the tiebreak consults them: the median row, then rows at
/// increasing distance, the lower (higher-numbered) row first when equidistant.
std::vector<std::size_t> mj_row_order(std::size_t n);

/**
 * Majority Judgment over a fixed ratings matrix.
 *
 * Candidates are compared by their grades read along mj_row_order(). The
 * highest median wins; among candidates tied there, the nearest row (lower
 * row first on equal distance) in which one of them alone holds the highest
 * grade decides. Candidates falling behind at a row are out of contention
 * for the rest of the scan, which makes the ranking a total preorder and so
 * independent of which other candidates are eligible.
 */
class MajorityGrades {
public:
    explicit MajorityGrades(const RatingsMatrix& ratings);

    /// Throws std::invalid_argument on an empty set, std::out_of_range on a bad index.
    MJOutcome winner(std::span<const Candidate> eligible) const;

    /// Candidate's grades sorted high to low.
    std::span<const double> sorted(Candidate c) const noexcept
    {
        return {sorted_.data() + c * n_, n_};
    }

    std::size_t voters() const noexcept { return n_; }
    std::size_t candidates() const noexcept { return c_; }

private:
    std::size_t n_;
    std::size_t c_;
    std::vector<double> sorted_;
    std::vector<std::size_t> order_;
};

MJOutcome mj_winner(const RatingsMatrix& ratings, std::span<const Candidate> eligible);
MJOutcome mj_winner(const RatingsMatrix& ratings);

struct FinalistPair {
    Candidate first;
    Candidate second;

    bool operator==(const FinalistPair&) const = default;
};

/// MJ winner, then MJ winner with the first removed. Empty if either MJ run
/// ends unresolved. Throws std::invalid_argument for fewer than 2 candidates.
std::optional<FinalistPair> select_finalists(const RatingsMatrix& ratings);
std::optional<FinalistPair> select_finalists(const MajorityGrades& grades);

/// Majority rule between a and b; empty on a zero margin.
std::optional<Candidate> mr_two_way(const PairwiseTally& tally, Candidate a, Candidate b);

/// Candidate with the smallest largest loss; empty if the minimum is shared.
std::optional<Candidate> minimax_winner(const PairwiseTally& tally);

/// Finalist with the larger mean margin over `losers`; empty on equal means.
std::optional<Candidate> qb_winner(const PairwiseTally& tally, FinalistPair finalists,
                                   std::span<const Candidate> losers);

/// Finalist with the larger smallest margin over `losers`; empty on equal minima.
std::optional<Candidate> qm_winner(const PairwiseTally& tally, FinalistPair finalists,
                                   std::span<const Candidate> losers);

/// Every candidate except the two finalists, ascending.
std::vector<Candidate> losers_of(std::size_t candidates, FinalistPair finalists);

}  // namespace votelab
