#pragma once

#include <cstddef>
#include <exception>
#include <vector>

namespace dy {

enum class Exec { Serial, Parallel };

// Process-wide default; the CLI sets it from DY_THREADS.
Exec default_exec();
void set_default_exec(Exec e);
void set_thread_count(int n);
int thread_count();

// Runs body(i) for i in [0, n). Bodies must write only to slot i.
// The exception of the lowest failing index is rethrown, so both paths
// report the same error.
template <class F>
void for_each_index(std::size_t n, F&& body, Exec exec = default_exec()) {
    if (exec == Exec::Serial) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::vector<std::exception_ptr> errs(n);
    long long m = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < m; ++i) {
        try {
            body(static_cast<std::size_t>(i));
        } catch (...) {
            errs[static_cast<std::size_t>(i)] = std::current_exception();
        }
    }
    for (auto& e : errs)
        if (e) std::rethrow_exception(e);
}

}  // namespace dy
