#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace betticone::detail {

/// Calls fn(worker, begin, end) on contiguous slices of [0, count), one per
/// worker thread. If workers throw, the exception of the lowest-numbered
/// failing worker is rethrown.
template <class Fn>
void parallel_slices(unsigned workers, std::uint64_t count, Fn&& fn) {
    workers = std::max(1U, workers);
    if (workers == 1 || count < 2) {
        fn(0U, std::uint64_t{0}, count);
        return;
    }
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, count));
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t begin = count * w / workers;
        const std::uint64_t end = count * (w + 1) / workers;
        threads.emplace_back([&, w, begin, end] {
            try {
                fn(w, begin, end);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : threads) {
        t.join();
    }
    for (const auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
}

}  // namespace betticone::detail
