#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "votelab/ratings.hpp"

namespace votelab {

/**
 * Pairwise strict-preference counts. prefer(a, b) is the number of voters
 * grading a strictly above b; voters grading the pair equally abstain.
 */
class PairwiseTally {
public:
    PairwiseTally() = default;
    explicit PairwiseTally(std::size_t candidates);

    /// Row-major c x c counts. Throws std::invalid_argument on a bad size or a
    /// nonzero diagonal.
    static PairwiseTally from_counts(std::size_t candidates, std::vector<int> prefer);

    /// Builds a tally whose margin(a, b) equals margins[a][b]: the winner of each
    /// pair gets the margin, the loser zero. `margins` must be antisymmetric.
    static PairwiseTally from_margins(const std::vector<std::vector<int>>& margins);

    std::size_t candidates() const noexcept { return c_; }

    int prefer(Candidate a, Candidate b) const noexcept { return counts_[a * c_ + b]; }
    int& prefer(Candidate a, Candidate b) noexcept { return counts_[a * c_ + b]; }

    /// Copy with candidate `c` removed; higher indices shift down by one.
    PairwiseTally without_candidate(Candidate c) const;

    bool operator==(const PairwiseTally&) const = default;

private:
    std::size_t c_ = 0;
    std::vector<int> counts_;
};

PairwiseTally pairwise_tally(const RatingsMatrix& ratings);

/// prefer(a, b) - prefer(b, a). Throws std::invalid_argument when a == b.
int margin(const PairwiseTally& tally, Candidate a, Candidate b);

/// The candidate with a positive margin over every opponent, if any.
std::optional<Candidate> condorcet_winner(const PairwiseTally& tally);

/// max over j != i of margin(j, i). Negative iff i beats everyone.
int largest_loss(const PairwiseTally& tally, Candidate i);

}  // namespace votelab
