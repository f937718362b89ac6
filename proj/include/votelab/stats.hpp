#pragma once

#include <cstdint>

namespace votelab {

/// Standard error of a percentage, in percentage points: 100 * sqrt(p (1 - p) / n).
/// Throws std::invalid_argument for n == 0 or p outside [0, 1].
double standard_error(double p, std::uint64_t n);

/// Exact two-tailed binomial test of k successes in n trials against 1/2:
/// twice the smaller tail, capped at 1.
double binomial_two_tailed(std::uint64_t k, std::uint64_t n);

/// Half-away-from-zero rounding used when percentages are shown as integers.
long long round_percentage(double pct) noexcept;

}  // namespace votelab
