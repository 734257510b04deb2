#include "fq/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <future>
#include <thread>
#include <vector>

namespace fq {

int thread_budget() {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw < 1) hw = 1;
    const char* env = std::getenv("FQ_THREADS");
    if (!env || !*env) return hw;
    long v = std::strtol(env, nullptr, 10);
    if (v <= 0) return hw;
    return static_cast<int>(std::min<long>(v, hw));
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
    int budget = thread_budget();
    if (budget <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            fn(i);
        }
    };
    std::vector<std::future<void>> futures;
    int workers = static_cast<int>(std::min<std::size_t>(budget, n));
    futures.reserve(workers);
    for (int t = 0; t < workers; ++t)
        futures.push_back(std::async(std::launch::async, worker));
    for (auto& f : futures) f.get();
}

} // namespace fq
