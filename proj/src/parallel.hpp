#pragma once

// OpenMP loop that carries an exception out of the parallel region.

#include <exception>

namespace zx::detail {

template <class Body>
void parallel_for(long count, Body&& body) {
    std::exception_ptr error;
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i) {
        try {
            body(i);
        } catch (...) {
#pragma omp critical(zx_parallel_error)
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);
}

}  // namespace zx::detail
