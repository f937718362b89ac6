#include <doctest.h>

#include <stdexcept>

#include "votelab/stats.hpp"

using namespace votelab;

TEST_CASE("standard_error")
{
    CHECK(standard_error(0.5, 1'000'000) == 0.05);
    CHECK(standard_error(0.0, 17) == 0.0);
    CHECK(standard_error(1.0, 17) == 0.0);
    CHECK(standard_error(0.71, 3565) == doctest::Approx(0.76).epsilon(0.005));
    CHECK_THROWS_AS(standard_error(0.5, 0), std::invalid_argument);
    CHECK_THROWS_AS(standard_error(1.5, 10), std::invalid_argument);
}

TEST_CASE("binomial_two_tailed")
{
    CHECK(binomial_two_tailed(9, 9) == doctest::Approx(2.0 / 512.0));
    CHECK(binomial_two_tailed(0, 9) == doctest::Approx(2.0 / 512.0));
    CHECK(binomial_two_tailed(50, 100) == 1.0);
    CHECK(binomial_two_tailed(0, 0) == 1.0);
    // Frozen from an exact binomial test: 7.1379e-4.
    CHECK(binomial_two_tailed(2636, 5031) == doctest::Approx(7.137933109e-4).epsilon(1e-6));
    CHECK(binomial_two_tailed(2395, 5031) == doctest::Approx(binomial_two_tailed(2636, 5031)));
    // Enumerated: P(X <= 2 | n = 10) = (1 + 10 + 45) / 1024, doubled.
    CHECK(binomial_two_tailed(2, 10) == doctest::Approx(112.0 / 1024.0));
    CHECK_THROWS_AS(binomial_two_tailed(11, 10), std::invalid_argument);
}

TEST_CASE("integer percentages round half away from zero")
{
    CHECK(round_percentage(71.5) == 72);
    CHECK(round_percentage(71.49) == 71);
    CHECK(round_percentage(0.5) == 1);
}
