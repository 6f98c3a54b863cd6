#ifndef AFFVCS_PARALLEL_HPP
#define AFFVCS_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace affvcs::detail {

/// Runs body(i) for i in [0, n) on up to `jobs` threads. Indices are handed
/// out one at a time, so results written to slot i keep their order.
template <class Body>
void parallel_for(std::size_t n, unsigned jobs, Body body) {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < n; i = next++) body(i);
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < std::max(1u, jobs); ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
}

}  // namespace affvcs::detail

#endif
