#pragma once

#include <algorithm>
#include <cstddef>
#include <future>
#include <thread>
#include <vector>

namespace dimdatum::detail {

/// results[i] = fn(i) for i < count, evaluated on a few worker threads.
/// Output order is by index; exceptions from workers are rethrown.
template <class Fn>
auto parallel_map(std::size_t count, Fn fn) -> std::vector<decltype(fn(std::size_t{}))> {
    using T = decltype(fn(std::size_t{}));
    std::vector<T> results(count);
    const std::size_t workers =
        std::min<std::size_t>(count, std::max<std::size_t>(1, std::thread::hardware_concurrency()));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            results[i] = fn(i);
        return results;
    }
    std::vector<std::future<void>> tasks;
    for (std::size_t w = 0; w < workers; ++w)
        tasks.push_back(std::async(std::launch::async, [&, w] {
            for (std::size_t i = w; i < count; i += workers)
                results[i] = fn(i);
        }));
    for (auto &t : tasks)
        t.get();
    return results;
}

} // namespace dimdatum::detail
