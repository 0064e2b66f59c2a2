#pragma once

#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace quadcross {

/// Run fn(chunk_index, begin, end) over a partition of [0, total) using up to
/// `jobs` threads. Chunks are indexed so callers can merge per-chunk results
/// in a fixed order, keeping outputs independent of the job count.
inline void parallel_chunks(uint64_t total, int jobs,
                            const std::function<void(int, uint64_t, uint64_t)>& fn) {
    if (jobs < 1) jobs = 1;
    const uint64_t max_chunks = total;
    uint64_t nchunks = static_cast<uint64_t>(jobs);
    if (nchunks > max_chunks) nchunks = max_chunks == 0 ? 1 : max_chunks;
    if (nchunks <= 1) {
        fn(0, 0, total);
        return;
    }
    std::vector<std::thread> threads;
    threads.reserve(nchunks);
    const uint64_t per = total / nchunks;
    const uint64_t extra = total % nchunks;
    uint64_t begin = 0;
    for (uint64_t i = 0; i < nchunks; ++i) {
        const uint64_t len = per + (i < extra ? 1 : 0);
        threads.emplace_back(fn, static_cast<int>(i), begin, begin + len);
        begin += len;
    }
    for (auto& t : threads) t.join();
}

} // namespace quadcross
