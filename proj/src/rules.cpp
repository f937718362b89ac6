#include "votelab/rules.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <stdexcept>

namespace votelab {

std::size_t mj_median_row(std::size_t n)
{
    if (n == 0)
        throw std::invalid_argument("mj: no grades");
    return n % 2 == 1 ? (n + 1) / 2 : n / 2 + 1;
}

std::vector<std::size_t> mj_row_order(std::size_t n)
{
    const std::size_t m = mj_median_row(n);
    std::vector<std::size_t> order;
    order.reserve(n);
    order.push_back(m);
    for (std::size_t d = 1; order.size() < n; ++d) {
        if (m + d <= n)
            order.push_back(m + d);
        if (d < m)
            order.push_back(m - d);
    }
    return order;
}

MajorityGrades::MajorityGrades(const RatingsMatrix& ratings)
    : n_(ratings.voters()), c_(ratings.candidates()), sorted_(n_ * c_)
{
    if (n_ == 0)
        throw std::invalid_argument("mj: ratings have no voters");
    for (Candidate j = 0; j < c_; ++j) {
        double* col = sorted_.data() + j * n_;
        for (std::size_t v = 0; v < n_; ++v)
            col[v] = ratings(v, j);
        std::sort(col, col + n_, std::greater<>());
    }
    order_ = mj_row_order(n_);
}

MJOutcome MajorityGrades::winner(std::span<const Candidate> eligible) const
{
    if (eligible.empty())
        throw std::invalid_argument("mj: eligible set is empty");
    MJOutcome out;
    out.median_grade.assign(c_, std::numeric_limits<double>::quiet_NaN());
    const std::size_t m = order_.front();
    for (Candidate c : eligible) {
        if (c >= c_)
            throw std::out_of_range("mj: candidate index out of range");
        out.median_grade[c] = sorted(c)[m - 1];
    }

    std::vector<Candidate> contenders(eligible.begin(), eligible.end());
    std::vector<Candidate> next;
    for (std::size_t k = 0; k < order_.size(); ++k) {
        const std::size_t row = order_[k] - 1;
        double best = -std::numeric_limits<double>::infinity();
        for (Candidate c : contenders)
            best = std::max(best, sorted(c)[row]);
        next.clear();
        for (Candidate c : contenders)
            if (sorted(c)[row] == best)
                next.push_back(c);
        contenders.swap(next);
        if (contenders.size() == 1) {
            out.winner = contenders.front();
            if (k > 0) {
                out.tiebreak_used = true;
                out.tiebreak_row = order_[k];
            }
            return out;
        }
    }
    out.tiebreak_used = true;
    return out;
}

MJOutcome mj_winner(const RatingsMatrix& ratings, std::span<const Candidate> eligible)
{
    return MajorityGrades(ratings).winner(eligible);
}

MJOutcome mj_winner(const RatingsMatrix& ratings)
{
    std::vector<Candidate> all(ratings.candidates());
    for (Candidate c = 0; c < all.size(); ++c)
        all[c] = c;
    return mj_winner(ratings, all);
}

std::optional<FinalistPair> select_finalists(const MajorityGrades& grades)
{
    const std::size_t c = grades.candidates();
    if (c < 2)
        throw std::invalid_argument("select_finalists: need at least 2 candidates");
    std::vector<Candidate> pool(c);
    for (Candidate j = 0; j < c; ++j)
        pool[j] = j;
    const auto first = grades.winner(pool).winner;
    if (!first)
        return std::nullopt;
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(*first));
    const auto second = grades.winner(pool).winner;
    if (!second)
        return std::nullopt;
    return FinalistPair{*first, *second};
}

std::optional<FinalistPair> select_finalists(const RatingsMatrix& ratings)
{
    return select_finalists(MajorityGrades(ratings));
}

std::optional<Candidate> mr_two_way(const PairwiseTally& tally, Candidate a, Candidate b)
{
    const int d = margin(tally, a, b);
    if (d > 0)
        return a;
    if (d < 0)
        return b;
    return std::nullopt;
}

std::optional<Candidate> minimax_winner(const PairwiseTally& tally)
{
    const std::size_t c = tally.candidates();
    if (c < 2)
        throw std::invalid_argument("minimax: need at least 2 candidates");
    std::optional<Candidate> best;
    int best_ll = std::numeric_limits<int>::max();
    bool shared = false;
    for (Candidate i = 0; i < c; ++i) {
        const int ll = largest_loss(tally, i);
        if (ll < best_ll) {
            best_ll = ll;
            best = i;
            shared = false;
        } else if (ll == best_ll) {
            shared = true;
        }
    }
    if (shared)
        return std::nullopt;
    return best;
}

namespace {

void check_finalist_inputs(const PairwiseTally& tally, FinalistPair f,
                           std::span<const Candidate> losers)
{
    if (f.first == f.second)
        throw std::invalid_argument("finalists must differ");
    if (losers.empty())
        throw std::invalid_argument("need at least one loser");
    for (Candidate l : losers) {
        if (l >= tally.candidates())
            throw std::out_of_range("loser index out of range");
        if (l == f.first || l == f.second)
            throw std::invalid_argument("a finalist cannot also be a loser");
    }
}

std::optional<Candidate> larger(FinalistPair f, long long first, long long second)
{
    if (first > second)
        return f.first;
    if (second > first)
        return f.second;
    return std::nullopt;
}

}  // namespace

std::optional<Candidate> qb_winner(const PairwiseTally& tally, FinalistPair finalists,
                                   std::span<const Candidate> losers)
{
    check_finalist_inputs(tally, finalists, losers);
    // Both means share the denominator |losers|, so integer sums compare exactly.
    long long s1 = 0, s2 = 0;
    for (Candidate l : losers) {
        s1 += margin(tally, finalists.first, l);
        s2 += margin(tally, finalists.second, l);
    }
    return larger(finalists, s1, s2);
}

std::optional<Candidate> qm_winner(const PairwiseTally& tally, FinalistPair finalists,
                                   std::span<const Candidate> losers)
{
    check_finalist_inputs(tally, finalists, losers);
    int m1 = std::numeric_limits<int>::max();
    int m2 = std::numeric_limits<int>::max();
    for (Candidate l : losers) {
        m1 = std::min(m1, margin(tally, finalists.first, l));
        m2 = std::min(m2, margin(tally, finalists.second, l));
    }
    return larger(finalists, m1, m2);
}

std::vector<Candidate> losers_of(std::size_t candidates, FinalistPair finalists)
{
    std::vector<Candidate> out;
    out.reserve(candidates >= 2 ? candidates - 2 : 0);
    for (Candidate j = 0; j < candidates; ++j)
        if (j != finalists.first && j != finalists.second)
            out.push_back(j);
    return out;
}

}  // namespace votelab
