#include "votelab/tally.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace votelab {

PairwiseTally::PairwiseTally(std::size_t candidates)
    : c_(candidates), counts_(candidates * candidates, 0)
{
}

PairwiseTally PairwiseTally::from_counts(std::size_t candidates, std::vector<int> prefer)
{
    if (prefer.size() != candidates * candidates)
        throw std::invalid_argument("tally: count grid must be c x c");
    PairwiseTally t;
    t.c_ = candidates;
    t.counts_ = std::move(prefer);
    for (std::size_t a = 0; a < candidates; ++a)
        if (t.prefer(a, a) != 0)
            throw std::invalid_argument("tally: diagonal must be zero");
    return t;
}

PairwiseTally PairwiseTally::from_margins(const std::vector<std::vector<int>>& margins)
{
    const std::size_t c = margins.size();
    PairwiseTally t(c);
    for (std::size_t a = 0; a < c; ++a) {
        if (margins[a].size() != c)
            throw std::invalid_argument("tally: margin grid must be square");
        for (std::size_t b = 0; b < c; ++b) {
            if (margins[a][b] != -margins[b][a])
                throw std::invalid_argument("tally: margins must be antisymmetric");
            if (margins[a][b] > 0)
                t.prefer(a, b) = margins[a][b];
        }
    }
    return t;
}

PairwiseTally PairwiseTally::without_candidate(Candidate c) const
{
    if (c >= c_)
        throw std::out_of_range("tally: candidate index out of range");
    PairwiseTally out(c_ - 1);
    for (std::size_t a = 0, ra = 0; a < c_; ++a) {
        if (a == c)
            continue;
        for (std::size_t b = 0, rb = 0; b < c_; ++b) {
            if (b == c)
                continue;
            out.prefer(ra, rb) = prefer(a, b);
            ++rb;
        }
        ++ra;
    }
    return out;
}

PairwiseTally pairwise_tally(const RatingsMatrix& ratings)
{
    const std::size_t c = ratings.candidates();
    const std::size_t n = ratings.voters();
    // Candidate-major copy so each pair is one contiguous, branch-free count.
    std::vector<double> cols(c * n);
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t j = 0; j < c; ++j)
            cols[j * n + v] = ratings(v, j);

    PairwiseTally t(c);
    for (std::size_t a = 0; a < c; ++a) {
        const double* ga = cols.data() + a * n;
        for (std::size_t b = a + 1; b < c; ++b) {
            const double* gb = cols.data() + b * n;
            int above = 0, below = 0;
            for (std::size_t v = 0; v < n; ++v) {
                above += ga[v] > gb[v];
                below += ga[v] < gb[v];
            }
            t.prefer(a, b) = above;
            t.prefer(b, a) = below;
        }
    }
    return t;
}

int margin(const PairwiseTally& tally, Candidate a, Candidate b)
{
    if (a == b)
        throw std::invalid_argument("margin: candidates must differ");
    return tally.prefer(a, b) - tally.prefer(b, a);
}

std::optional<Candidate> condorcet_winner(const PairwiseTally& tally)
{
    for (Candidate i = 0; i < tally.candidates(); ++i)
        if (largest_loss(tally, i) < 0)
            return i;
    return std::nullopt;
}

int largest_loss(const PairwiseTally& tally, Candidate i)
{
    if (tally.candidates() < 2)
        throw std::invalid_argument("largest_loss: need at least 2 candidates");
    int worst = std::numeric_limits<int>::min();
    for (Candidate j = 0; j < tally.candidates(); ++j)
        if (j != i)
            worst = std::max(worst, margin(tally, j, i));
    return worst;
}

}  // namespace votelab
