#pragma once

#include <cstddef>
#include <exception>
#include <vector>

namespace capflow::detail {

// Runs fn(i) for i in [0, n) across OpenMP threads. If any call throws, the exception from
// the lowest index is rethrown after the loop, so failures are reported deterministically.
template <class Fn>
void parallel_for_index(std::size_t n, Fn&& fn) {
    std::vector<std::exception_ptr> errors(n);
    const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 1)
    for (long long i = 0; i < count; ++i) {
        try {
            fn(static_cast<std::size_t>(i));
        } catch (...) {
            errors[static_cast<std::size_t>(i)] = std::current_exception();
        }
    }
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

}  // namespace capflow::detail
