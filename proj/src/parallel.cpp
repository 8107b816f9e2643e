#include "kcp/parallel.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>
#include <vector>

namespace kcp {

unsigned worker_count(std::size_t jobs, unsigned requested)
{
    if (jobs == 0)
        return 1;
    unsigned hw = requested ? requested : std::thread::hardware_concurrency();
    if (hw == 0)
        hw = 1;
    return static_cast<unsigned>(std::min<std::size_t>(hw, jobs));
}

void parallel_ranges(std::size_t lo, std::size_t hi, unsigned workers,
                     const std::function<void(unsigned, std::size_t, std::size_t)>& fn)
{
    if (lo > hi)
        throw std::invalid_argument("parallel_ranges: lo > hi");
    std::size_t jobs = hi - lo + 1;
    unsigned w = worker_count(jobs, workers);
    if (w == 1) {
        fn(0, lo, hi);
        return;
    }
    std::size_t base = jobs / w, extra = jobs % w;
    std::vector<std::thread> pool;
    pool.reserve(w);
    std::size_t start = lo;
    for (unsigned i = 0; i < w; ++i) {
        std::size_t len = base + (i < extra ? 1 : 0);
        std::size_t end = start + len - 1;
        pool.emplace_back(fn, i, start, end);
        start = end + 1;
    }
    for (std::thread& t : pool)
        t.join();
}

} // namespace kcp
