#pragma once

/**
 * @file execution.hpp
 * @brief Serial and OpenMP execution of independent indexed tasks.
 *
 * Results are written by index, so output order never depends on the
 * schedule. If tasks throw, the exception of the lowest failing index is
 * rethrown after the loop, which keeps error reporting deterministic too.
 */

#include <cstddef>
#include <cstdint>
#include <exception>
#include <vector>

#include <omp.h>

namespace rholat {

enum class Execution { serial, parallel };

/// Worker count from RHO_LATTICE_JOBS, else the OpenMP default.
int default_jobs();

template <class Task>
void for_each_index(std::size_t n, Execution exec, int jobs, Task&& task)
{
    std::vector<std::exception_ptr> errors(n);
    const auto count = static_cast<std::int64_t>(n);
    if (exec == Execution::serial || jobs <= 1) {
        for (std::int64_t i = 0; i < count; ++i) {
            try {
                task(static_cast<std::size_t>(i));
            } catch (...) {
                errors[static_cast<std::size_t>(i)] = std::current_exception();
                break;
            }
        }
    } else {
#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs)
        for (std::int64_t i = 0; i < count; ++i) {
            try {
                task(static_cast<std::size_t>(i));
            } catch (...) {
                errors[static_cast<std::size_t>(i)] = std::current_exception();
            }
        }
    }
    for (const auto& e : errors)
        if (e)
            std::rethrow_exception(e);
}

} // namespace rholat
