#pragma once

#include <cstdint>

namespace votelab {

/// SplitMix64 output function. Bijective on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept
{
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/**
 * Counter-based random stream keyed by (master seed, stream id).
 *
 * Draw i of a stream is mix64(key + (i + 1) * golden_gamma), so every trial
 * index owns an independent, reproducible sequence regardless of which worker
 * evaluates it or in what order.
 */
class TrialStream {
public:
    TrialStream(std::uint64_t master_seed, std::uint64_t stream_id) noexcept;

    std::uint64_t next_u64() noexcept;

    /// Uniform on the open interval (0, 1).
    double uniform() noexcept;

    /// Standard normal via the Marsaglia polar method.
    double normal() noexcept;

    std::uint64_t draws() const noexcept { return counter_; }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace votelab
