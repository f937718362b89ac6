#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <random>

#include "oracles.hpp"
#include "votelab/rules.hpp"
#include "votelab/spatial.hpp"

using namespace votelab;

namespace {

oracle::Grid to_grid(const RatingsMatrix& r)
{
    oracle::Grid g(r.voters(), std::vector<double>(r.candidates()));
    for (std::size_t v = 0; v < r.voters(); ++v)
        for (std::size_t c = 0; c < r.candidates(); ++c)
            g[v][c] = r(v, c);
    return g;
}

RatingsMatrix random_integer_matrix(std::mt19937_64& rng, std::size_t n, std::size_t c, int levels)
{
    std::uniform_int_distribution<int> grade(1, levels);
    RatingsMatrix r(n, c);
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t j = 0; j < c; ++j)
            r(v, j) = grade(rng);
    return r;
}

}  // namespace

TEST_CASE("median row and scan order")
{
    CHECK(mj_median_row(5) == 3);
    CHECK(mj_median_row(4) == 3);
    CHECK(mj_median_row(100) == 51);
    CHECK(mj_median_row(1) == 1);
    CHECK(mj_row_order(5) == std::vector<std::size_t>{3, 4, 2, 5, 1});
    CHECK(mj_row_order(4) == std::vector<std::size_t>{3, 4, 2, 1});
    CHECK(mj_row_order(2) == std::vector<std::size_t>{2, 1});
}

TEST_CASE("mj_winner")
{
    SUBCASE("higher median wins")
    {
        const auto r = RatingsMatrix::from_columns({{1, 2, 3, 4, 4}, {2, 3, 4, 1, 1}});
        const MJOutcome o = mj_winner(r);
        CHECK(o.winner == Candidate{0});
        CHECK(o.median_grade[0] == 3);
        CHECK(o.median_grade[1] == 2);
        CHECK_FALSE(o.tiebreak_used);
    }
    SUBCASE("identical distributions stay tied")
    {
        const auto r = RatingsMatrix::from_columns({{1, 5, 3, 9}, {9, 3, 1, 5}});
        const MJOutcome o = mj_winner(r);
        CHECK_FALSE(o.winner.has_value());
        CHECK(o.tiebreak_used);
    }
    SUBCASE("equidistant tie-free rows: the lower row decides")
    {
        // Sorted high to low; rows 2 and 4 both separate A and B, row 4 is used.
        const auto r = RatingsMatrix::from_columns({{9, 7, 5, 5, 1}, {9, 8, 5, 4, 1}});
        const MJOutcome o = mj_winner(r);
        CHECK(o.winner == Candidate{0});
        CHECK(o.tiebreak_used);
        CHECK(o.tiebreak_row == std::size_t{4});
    }
    SUBCASE("eligible subset")
    {
        const auto r = RatingsMatrix::from_columns({{9, 9, 9}, {5, 6, 7}, {1, 2, 3}});
        const std::vector<Candidate> rest{1, 2};
        const MJOutcome o = mj_winner(r, rest);
        CHECK(o.winner == Candidate{1});
        CHECK(std::isnan(o.median_grade[0]));
    }
    SUBCASE("errors")
    {
        const auto r = RatingsMatrix::from_columns({{1, 2}, {2, 1}});
        CHECK_THROWS_AS(mj_winner(r, std::vector<Candidate>{}), std::invalid_argument);
        CHECK_THROWS_AS(mj_winner(r, std::vector<Candidate>{0, 7}), std::out_of_range);
    }
}

TEST_CASE("select_finalists")
{
    const auto r = RatingsMatrix::from_columns({{5, 5, 5}, {9, 9, 9}, {7, 7, 7}});
    CHECK(select_finalists(r) == FinalistPair{1, 2});

    // Unresolved MJ tie at the top propagates as empty.
    const auto tied = RatingsMatrix::from_columns({{5, 6, 7}, {7, 6, 5}, {1, 1, 1}});
    CHECK_FALSE(select_finalists(tied).has_value());

    // The runner-up in the full field is the winner once the first is removed.
    std::mt19937_64 rng(5);
    for (int i = 0; i < 500; ++i) {
        const RatingsMatrix m = random_integer_matrix(rng, 7, 4, 4);
        const auto f = select_finalists(m);
        if (!f)
            continue;
        const auto again = mj_winner(m.without_candidate(f->first)).winner;
        REQUIRE(again.has_value());
        CHECK(*again + (*again >= f->first ? 1 : 0) == f->second);
    }
}

TEST_CASE("select_finalists matches brute-force MJ applied twice on all 5x3 binary matrices")
{
    for (unsigned bits = 0; bits < (1u << 15); ++bits) {
        RatingsMatrix r(5, 3);
        for (unsigned k = 0; k < 15; ++k)
            r(k / 3, k % 3) = (bits >> k) & 1u ? 2.0 : 1.0;
        const auto got = select_finalists(r);
        const auto want = oracle::finalists(to_grid(r));
        REQUIRE(got.has_value() == want.has_value());
        if (got) {
            CHECK(got->first == want->first);
            CHECK(got->second == want->second);
        }
    }
}

TEST_CASE("mr_two_way")
{
    const auto r = RatingsMatrix::from_columns({{1, 2, 3, 4, 4}, {2, 3, 4, 1, 1}});
    const PairwiseTally t = pairwise_tally(r);
    CHECK(mr_two_way(t, 0, 1) == Candidate{1});
    CHECK(mj_winner(r).winner == Candidate{0});

    const auto unanimous = pairwise_tally(RatingsMatrix::from_columns({{5, 5}, {1, 1}}));
    CHECK(mr_two_way(unanimous, 0, 1) == Candidate{0});

    const auto even = pairwise_tally(RatingsMatrix::from_columns({{5, 1}, {1, 5}}));
    CHECK_FALSE(mr_two_way(even, 0, 1).has_value());
}

TEST_CASE("minimax_winner")
{
    CHECK(minimax_winner(PairwiseTally::from_counts(3, {0, 9, 4, 0, 0, 9, 5, 0, 0})) ==
          Candidate{0});
    const auto cycle = PairwiseTally::from_margins({{0, 5, -25}, {-5, 0, 15}, {25, -15, 0}});
    CHECK(minimax_winner(cycle) == Candidate{1});
    const auto transitive = PairwiseTally::from_margins({{0, -3, 5}, {3, 0, 1}, {-5, -1, 0}});
    CHECK(minimax_winner(transitive) == Candidate{1});
    const auto flat = PairwiseTally::from_margins({{0, 3, -3}, {-3, 0, 3}, {3, -3, 0}});
    CHECK_FALSE(minimax_winner(flat).has_value());
}

TEST_CASE("qb_winner and qm_winner")
{
    const std::vector<Candidate> losers{2, 3};
    const FinalistPair f{0, 1};

    const auto a = PairwiseTally::from_margins(
        {{0, 1, 3, 5}, {-1, 0, 1, 5}, {-3, -1, 0, 0}, {-5, -5, 0, 0}});
    CHECK(qb_winner(a, f, losers) == Candidate{0});

    const auto b = PairwiseTally::from_margins(
        {{0, 1, 3, 5}, {-1, 0, 1, 7}, {-3, -1, 0, 0}, {-5, -7, 0, 0}});
    CHECK(qm_winner(b, f, losers) == Candidate{0});
    CHECK_FALSE(qb_winner(b, f, losers).has_value());  // means 4 and 4

    const auto same = PairwiseTally::from_margins(
        {{0, 1, 3, 5}, {-1, 0, 5, 3}, {-3, -5, 0, 0}, {-5, -3, 0, 0}});
    CHECK_FALSE(qb_winner(same, f, losers).has_value());

    const auto minima = PairwiseTally::from_margins(
        {{0, 1, 3, 9}, {-1, 0, 3, 4}, {-3, -3, 0, 0}, {-9, -4, 0, 0}});
    CHECK_FALSE(qm_winner(minima, f, losers).has_value());
    CHECK(qb_winner(minima, f, losers) == Candidate{0});

    SUBCASE("a single loser: both rules compare the same two margins")
    {
        std::mt19937_64 rng(9);
        std::uniform_int_distribution<int> m(1, 20);
        for (int i = 0; i < 200; ++i) {
            const int x = m(rng), y = m(rng), z = m(rng) - 10;
            const auto t = PairwiseTally::from_margins({{0, z, x}, {-z, 0, y}, {-x, -y, 0}});
            const std::vector<Candidate> one{2};
            CHECK(qb_winner(t, f, one) == qm_winner(t, f, one));
        }
    }
    CHECK_THROWS_AS(qb_winner(a, f, std::vector<Candidate>{}), std::invalid_argument);
    CHECK_THROWS_AS(qm_winner(a, f, std::vector<Candidate>{1, 2}), std::invalid_argument);
}

TEST_CASE("MJ ignores the removal of any loser")
{
    std::mt19937_64 rng(2718);
    for (int i = 0; i < 2000; ++i) {
        const std::size_t c = 2 + rng() % 5;
        const std::size_t n = 1 + rng() % 12;
        const RatingsMatrix r = random_integer_matrix(rng, n, c, 2 + static_cast<int>(rng() % 5));
        const auto w = mj_winner(r).winner;
        if (!w)
            continue;
        for (Candidate gone = 0; gone < c; ++gone) {
            if (gone == *w || c == 1)
                continue;
            const auto w2 = mj_winner(r.without_candidate(gone)).winner;
            REQUIRE(w2.has_value());
            CHECK(*w2 + (*w2 >= gone ? 1 : 0) == *w);
        }
    }
}

TEST_CASE("increasing grade transforms change no winner")
{
    std::mt19937_64 rng(31);
    for (int i = 0; i < 500; ++i) {
        const RatingsMatrix r = random_integer_matrix(rng, 9, 5, 6);
        const RatingsMatrix s = r.transformed([](double g) { return std::exp(g) - 40.0; });
        CHECK(mj_winner(r).winner == mj_winner(s).winner);
        CHECK(select_finalists(r) == select_finalists(s));
        CHECK(minimax_winner(pairwise_tally(r)) == minimax_winner(pairwise_tally(s)));
    }
}

TEST_CASE("two candidates, odd voters, distinct grades: MJ follows the lower median")
{
    std::mt19937_64 rng(77);
    int mr_disagrees = 0;
    for (int i = 0; i < 500; ++i) {
        std::vector<double> pool(22);
        for (std::size_t k = 0; k < pool.size(); ++k)
            pool[k] = static_cast<double>(k);
        std::shuffle(pool.begin(), pool.end(), rng);
        const std::size_t n = 2 * (rng() % 5) + 1;
        RatingsMatrix r(n, 2);
        for (std::size_t v = 0; v < n; ++v) {
            r(v, 0) = pool[2 * v];
            r(v, 1) = pool[2 * v + 1];
        }
        const auto o = mj_winner(r);
        CHECK_FALSE(o.tiebreak_used);
        CHECK(o.winner == (o.median_grade[0] > o.median_grade[1] ? 0u : 1u));
        if (mr_two_way(pairwise_tally(r), 0, 1) != o.winner)
            ++mr_disagrees;
    }
    CHECK(mr_disagrees > 0);
}

TEST_CASE("minimax equals the Condorcet winner when one exists")
{
    for (std::uint64_t i = 0; i < 500; ++i) {
        TrialStream s(55, i);
        const TrialSetup setup = sample_trial(21, 4, s);
        const PairwiseTally t = pairwise_tally(make_ratings(setup, StudyType::NoisyRounded, s));
        if (const auto cw = condorcet_winner(t))
            CHECK(minimax_winner(t) == cw);
    }
}

TEST_CASE("QB and QM see ratings only through the tally")
{
    std::mt19937_64 rng(404);
    for (int i = 0; i < 300; ++i) {
        const RatingsMatrix r = random_integer_matrix(rng, 11, 5, 7);
        // Permuting voters changes the matrix but not the tally.
        std::vector<std::size_t> order(11);
        for (std::size_t v = 0; v < 11; ++v)
            order[v] = v;
        std::shuffle(order.begin(), order.end(), rng);
        RatingsMatrix p(11, 5);
        for (std::size_t v = 0; v < 11; ++v)
            for (std::size_t c = 0; c < 5; ++c)
                p(v, c) = r(order[v], c);
        const auto t1 = pairwise_tally(r);
        const auto t2 = pairwise_tally(p);
        REQUIRE(t1 == t2);
        const FinalistPair f{0, 1};
        const std::vector<Candidate> losers{2, 3, 4};
        CHECK(qb_winner(t1, f, losers) == qb_winner(t2, f, losers));
        CHECK(qm_winner(t1, f, losers) == qm_winner(t2, f, losers));
    }
}
