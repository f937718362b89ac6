#include "votelab/random.hpp"

#include <cmath>

namespace votelab {

namespace {
constexpr std::uint64_t kGoldenGamma = 0x9e3779b97f4a7c15ULL;
}

TrialStream::TrialStream(std::uint64_t master_seed, std::uint64_t stream_id) noexcept
    : key_(mix64(mix64(master_seed) ^ (stream_id * 0xd1b54a32d192ed03ULL + kGoldenGamma)))
{
}

std::uint64_t TrialStream::next_u64() noexcept
{
    ++counter_;
    return mix64(key_ + counter_ * kGoldenGamma);
}

double TrialStream::uniform() noexcept
{
    // 53 random bits, shifted by half an ulp so 0 is never returned.
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double TrialStream::normal() noexcept
{
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u, v, s;
    do {
        u = 2.0 * uniform() - 1.0;
        v = 2.0 * uniform() - 1.0;
        s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double scale = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * scale;
    has_spare_ = true;
    return u * scale;
}

}  // namespace votelab
