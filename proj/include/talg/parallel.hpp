/**
 * Deterministic parallel map: results land in index order regardless of the
 * number of worker threads, so downstream sequential consumers (e.g. the
 * span tracker) see an identical stream for any --threads value.
 */
#ifndef TALG_PARALLEL_HPP
#define TALG_PARALLEL_HPP

#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace talg {

/**
 * Resolve a worker count: explicit request > TERWILLIGER_THREADS > hardware.
 *
 * @param requested Requested count; 0 means auto.
 * @returns A count >= 1.
 */
inline int resolveThreadCount(int requested)
{
    if (requested > 0)
        return requested;
    if (const char* env = std::getenv("TERWILLIGER_THREADS"))
    {
        const int n = std::atoi(env);
        if (n > 0)
            return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

/**
 * Evaluate f(0..n-1) with the given worker count, returning results in index
 * order.  f must be safe to call concurrently on distinct indices.
 */
template <typename R, typename F>
std::vector<R> parallelMap(int n, int threads, F f)
{
    std::vector<R> results(n);
    if (n == 0)
        return results;
    threads = std::min(std::max(threads, 1), n);
    if (threads == 1)
    {
        for (int i = 0; i < n; ++i)
            results[i] = f(i);
        return results;
    }
    std::vector<std::thread> workers;
    workers.reserve(threads);
    for (int w = 0; w < threads; ++w)
    {
        workers.emplace_back(
            [&, w]()
            {
                for (int i = w; i < n; i += threads)
                    results[i] = f(i);
            });
    }
    for (std::thread& t : workers)
        t.join();
    return results;
}

}  // namespace talg

#endif  // TALG_PARALLEL_HPP
