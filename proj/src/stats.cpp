#include "votelab/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace votelab {

double standard_error(double p, std::uint64_t n)
{
    if (n == 0)
        throw std::invalid_argument("standard_error: n must be >= 1");
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("standard_error: p must lie in [0, 1]");
    return 100.0 * std::sqrt(p * (1.0 - p) / static_cast<double>(n));
}

double binomial_two_tailed(std::uint64_t k, std::uint64_t n)
{
    if (k > n)
        throw std::invalid_argument("binomial_two_tailed: k exceeds n");
    const std::uint64_t lo = std::min(k, n - k);
    const double nd = static_cast<double>(n);
    const double log_norm = std::lgamma(nd + 1.0) - nd * std::log(2.0);
    double tail = 0.0;
    for (std::uint64_t i = 0; i <= lo; ++i) {
        const double id = static_cast<double>(i);
        tail += std::exp(log_norm - std::lgamma(id + 1.0) - std::lgamma(nd - id + 1.0));
    }
    return std::min(1.0, 2.0 * tail);
}

long long round_percentage(double pct) noexcept
{
    return std::llround(pct);
}

}  // namespace votelab
