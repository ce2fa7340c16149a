#pragma once

#include <cstdint>
#include <thread>
#include <vector>

namespace matspace {

// Splits [0, n) into at most `jobs` contiguous chunks, runs worker(lo, hi)
// on each, and returns the per-chunk results in chunk order.  The chunk
// boundaries depend only on n and jobs, and the merge order is fixed, so
// any associative fold over the returned vector is independent of how many
// threads actually ran.
template <class R, class Worker>
std::vector<R> run_partitioned(std::uint64_t n, unsigned jobs, Worker worker) {
    if (jobs == 0) jobs = 1;
    std::uint64_t chunks = std::min<std::uint64_t>(jobs, n ? n : 1);
    std::vector<R> results(static_cast<size_t>(chunks));
    auto bounds = [&](std::uint64_t c) {
        std::uint64_t lo = n * c / chunks;
        std::uint64_t hi = n * (c + 1) / chunks;
        return std::make_pair(lo, hi);
    };
    if (chunks == 1) {
        results[0] = worker(std::uint64_t{0}, n);
        return results;
    }
    std::vector<std::thread> threads;
    threads.reserve(static_cast<size_t>(chunks));
    for (std::uint64_t c = 0; c < chunks; ++c)
        threads.emplace_back([&, c] {
            auto [lo, hi] = bounds(c);
            results[static_cast<size_t>(c)] = worker(lo, hi);
        });
    for (auto& t : threads) t.join();
    return results;
}

} // namespace matspace
