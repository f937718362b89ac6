#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#ifdef VOTELAB_HAVE_OPENMP
#include <omp.h>
#endif

namespace votelab {

/// Worker count to use when the caller asks for 0 ("all available").
inline unsigned resolve_workers(unsigned requested)
{
    if (requested != 0)
        return requested;
#ifdef VOTELAB_HAVE_OPENMP
    return static_cast<unsigned>(omp_get_max_threads());
#else
    return 1;
#endif
}

/// Reference loop: evaluates trial indices 0, 1, 2, ... one at a time and
/// hands each verdict to `consume`, which returns true when it keeps the
/// trial. Stops after `target` kept trials; returns the indices consumed.
template <class Evaluate, class Consume>
std::uint64_t scan_trials_serial(std::uint64_t target, Evaluate&& evaluate, Consume&& consume)
{
    std::uint64_t kept = 0;
    std::uint64_t index = 0;
    while (kept < target) {
        if (consume(evaluate(index)))
            ++kept;
        ++index;
    }
    return index;
}

/**
 * Parallel loop with the same observable behavior as scan_trials_serial.
 *
 * Verdicts for a block of indices are computed concurrently into a buffer,
 * then consumed strictly in index order on the calling thread. Indices past
 * the target within the last block are evaluated and dropped, so results do
 * not depend on the worker count.
 */
template <class Evaluate, class Consume>
std::uint64_t scan_trials_parallel(std::uint64_t target, unsigned workers, Evaluate&& evaluate,
                                   Consume&& consume)
{
    using Verdict = decltype(evaluate(std::uint64_t{0}));
    const unsigned threads = resolve_workers(workers);
    if (threads <= 1)
        return scan_trials_serial(target, evaluate, consume);

    constexpr std::int64_t kMinBlock = 1024;
    constexpr std::int64_t kMaxBlock = std::int64_t{1} << 16;
    std::vector<Verdict> block;
    std::uint64_t kept = 0;
    std::uint64_t base = 0;
    while (kept < target) {
        std::int64_t size = static_cast<std::int64_t>(2 * (target - kept));
        size = size < kMinBlock ? kMinBlock : (size > kMaxBlock ? kMaxBlock : size);
        block.resize(static_cast<std::size_t>(size));
#ifdef VOTELAB_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic, 64) num_threads(threads)
#endif
        for (std::int64_t i = 0; i < size; ++i)
            block[static_cast<std::size_t>(i)] = evaluate(base + static_cast<std::uint64_t>(i));

        for (std::int64_t i = 0; i < size; ++i) {
            if (consume(block[static_cast<std::size_t>(i)]) && ++kept == target)
                return base + static_cast<std::uint64_t>(i) + 1;
        }
        base += static_cast<std::uint64_t>(size);
    }
    return base;
}

}  // namespace votelab
