#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "oracles.hpp"
#include "votelab/spatial.hpp"
#include "votelab/tally.hpp"

using namespace votelab;

namespace {

// A beat B 9-0, B beat C 9-0, C beat A 5-4.
PairwiseTally sports_tally()
{
    return PairwiseTally::from_counts(3, {0, 9, 4,
                                          0, 0, 9,
                                          5, 0, 0});
}

}  // namespace

TEST_CASE("pairwise_tally counts strict preferences")
{
    SUBCASE("five-voter A/B example")
    {
        const auto r = RatingsMatrix::from_columns({{1, 2, 3, 4, 4}, {2, 3, 4, 1, 1}});
        const PairwiseTally t = pairwise_tally(r);
        CHECK(t.prefer(1, 0) == 3);
        CHECK(t.prefer(0, 1) == 2);
    }
    SUBCASE("equal grades abstain")
    {
        const auto r = RatingsMatrix::from_columns({{4, 4, 7}, {4, 4, 7}});
        const PairwiseTally t = pairwise_tally(r);
        CHECK(t.prefer(0, 1) == 0);
        CHECK(t.prefer(1, 0) == 0);
    }
    SUBCASE("partial abstention")
    {
        const auto r = RatingsMatrix::from_columns({{9, 1, 5}, {8, 2, 5}});
        const PairwiseTally t = pairwise_tally(r);
        CHECK(t.prefer(0, 1) == 1);
        CHECK(t.prefer(1, 0) == 1);
    }
    SUBCASE("diagonal zero and pair totals bounded by voters")
    {
        TrialStream s(4, 4);
        const TrialSetup setup = sample_trial(40, 6, s);
        const RatingsMatrix r = make_ratings(setup, StudyType::Rounded, s);
        const PairwiseTally t = pairwise_tally(r);
        for (Candidate a = 0; a < 6; ++a) {
            CHECK(t.prefer(a, a) == 0);
            for (Candidate b = 0; b < 6; ++b)
                CHECK(t.prefer(a, b) + t.prefer(b, a) <= 40);
        }
    }
}

TEST_CASE("margin")
{
    const PairwiseTally t = sports_tally();
    CHECK(margin(t, 2, 0) == 1);
    CHECK(margin(t, 0, 1) == 9);
    for (Candidate a = 0; a < 3; ++a)
        for (Candidate b = 0; b < 3; ++b)
            if (a != b)
                CHECK(margin(t, a, b) == -margin(t, b, a));
    CHECK_THROWS_AS(margin(t, 1, 1), std::invalid_argument);
}

TEST_CASE("75 strict voters give odd, nonzero margins")
{
    for (std::uint64_t i = 0; i < 500; ++i) {
        TrialStream s(75, i);
        const TrialSetup setup = sample_trial(75, 4, s);
        const PairwiseTally t = pairwise_tally(closeness_matrix(setup));
        for (Candidate a = 0; a < 4; ++a)
            for (Candidate b = a + 1; b < 4; ++b)
                CHECK(margin(t, a, b) % 2 != 0);
    }
}

TEST_CASE("condorcet_winner")
{
    CHECK_FALSE(condorcet_winner(sports_tally()).has_value());
    CHECK(condorcet_winner(PairwiseTally::from_counts(2, {0, 3, 1, 0})) == Candidate{0});
    const auto transitive = PairwiseTally::from_margins({{0, 3, 5}, {-3, 0, 1}, {-5, -1, 0}});
    CHECK(condorcet_winner(transitive) == Candidate{0});
}

TEST_CASE("largest_loss")
{
    const PairwiseTally t = sports_tally();
    CHECK(largest_loss(t, 0) == 1);
    CHECK(largest_loss(t, 1) == 9);
    CHECK(largest_loss(t, 2) == 9);

    const auto cycle = PairwiseTally::from_margins({{0, 5, -25}, {-5, 0, 15}, {25, -15, 0}});
    CHECK(largest_loss(cycle, 0) == 25);
    CHECK(largest_loss(cycle, 1) == 5);
    CHECK(largest_loss(cycle, 2) == 15);

    const auto transitive = PairwiseTally::from_margins({{0, 3, 5}, {-3, 0, 1}, {-5, -1, 0}});
    CHECK(largest_loss(transitive, 0) < 0);
}

TEST_CASE("tally matches brute force on sampled matrices")
{
    for (std::uint64_t i = 0; i < 200; ++i) {
        TrialStream s(12, i);
        const TrialSetup setup = sample_trial(15, 5, s);
        const RatingsMatrix r = make_ratings(setup, StudyType::NoisyRounded, s);
        oracle::Grid g(15, std::vector<double>(5));
        for (std::size_t v = 0; v < 15; ++v)
            for (std::size_t c = 0; c < 5; ++c)
                g[v][c] = r(v, c);
        const PairwiseTally t = pairwise_tally(r);
        for (Candidate a = 0; a < 5; ++a)
            for (Candidate b = 0; b < 5; ++b)
                CHECK(t.prefer(a, b) == oracle::count_prefer(g, a, b));
    }
}

TEST_CASE("tally invariants")
{
    for (std::uint64_t i = 0; i < 300; ++i) {
        TrialStream s(13, i);
        const TrialSetup setup = sample_trial(31, 5, s);
        const RatingsMatrix r = make_ratings(setup, StudyType::Rounded, s);
        const PairwiseTally t = pairwise_tally(r);

        // Strictly increasing grade transforms keep every voter's ordering.
        CHECK(pairwise_tally(r.transformed([](double g) { return g * g * g + 2 * g; })) == t);

        // Condorcet winner iff negative largest loss.
        const auto cw = condorcet_winner(t);
        for (Candidate c = 0; c < 5; ++c)
            CHECK((largest_loss(t, c) < 0) == (cw == c));

        // Dropping a candidate leaves other margins alone.
        const Candidate gone = i % 5;
        const PairwiseTally reduced = t.without_candidate(gone);
        CHECK(reduced == pairwise_tally(r.without_candidate(gone)));
        for (Candidate a = 0, ra = 0; a < 5; ++a) {
            if (a == gone)
                continue;
            for (Candidate b = 0, rb = 0; b < 5; ++b) {
                if (b == gone)
                    continue;
                if (a != b)
                    CHECK(margin(reduced, ra, rb) == margin(t, a, b));
                ++rb;
            }
            ++ra;
        }
    }
}

TEST_CASE("tally construction errors")
{
    CHECK_THROWS_AS(PairwiseTally::from_counts(2, {1, 0, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(PairwiseTally::from_counts(2, {0, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(PairwiseTally::from_margins({{0, 1}, {1, 0}}), std::invalid_argument);
}
