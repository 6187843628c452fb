#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace hfrac {

/// Worker count: HFRAC_THREADS env var if set, otherwise hardware concurrency.
/// Results never depend on this value; it only sets the degree of parallelism.
inline unsigned worker_count() {
    if (const char* env = std::getenv("HFRAC_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? hc : 1u;
}

/// Runs body(chunk_index) for chunk_index in [0, nchunks). The chunk grid is
/// fixed by the caller, so any output written per chunk and reduced in chunk
/// order is independent of the worker count.
template <typename Body>
void parallel_chunks(std::int64_t nchunks, Body&& body) {
    unsigned nw = worker_count();
    if (nw <= 1 || nchunks <= 1) {
        for (std::int64_t c = 0; c < nchunks; ++c) body(c);
        return;
    }
    nw = std::min<std::int64_t>(nw, nchunks);
    std::vector<std::thread> pool;
    pool.reserve(nw);
    for (unsigned t = 0; t < nw; ++t) {
        pool.emplace_back([&, t] {
            for (std::int64_t c = t; c < nchunks; c += nw) body(c);
        });
    }
    for (auto& th : pool) th.join();
}

} // namespace hfrac
