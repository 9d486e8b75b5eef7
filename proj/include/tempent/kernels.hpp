#pragma once

// Data-parallel building blocks. Every parallel kernel has a serial twin with
// the same result contract; the serial versions are the reference the tests
// compare against.

#include <cstddef>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tempent {

enum class Execution { Serial, Parallel };

namespace kernels {

/// Largest value of margin(i) over [0, count) and the lowest index attaining it.
struct Extremum {
    double value = -std::numeric_limits<double>::infinity();
    std::size_t index = 0;
};

inline void merge_into(Extremum& acc, const Extremum& other) {
    if (other.value > acc.value || (other.value == acc.value && other.index < acc.index)) {
        acc = other;
    }
}

template <class Margin>
Extremum max_margin_serial(std::size_t count, Margin&& margin) {
    Extremum best;
    for (std::size_t i = 0; i < count; ++i) {
        const double m = margin(i);
        if (m > best.value) best = {m, i};
    }
    return best;
}

template <class Margin>
Extremum max_margin_parallel(std::size_t count, Margin&& margin) {
    Extremum best;
#pragma omp parallel
    {
        Extremum local;
#pragma omp for schedule(static) nowait
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(count); ++i) {
            const double m = margin(static_cast<std::size_t>(i));
            if (m > local.value) local = {m, static_cast<std::size_t>(i)};
        }
#pragma omp critical(tempent_max_margin)
        merge_into(best, local);
    }
    return best;
}

template <class Margin>
Extremum max_margin(Execution exec, std::size_t count, Margin&& margin) {
    return exec == Execution::Parallel ? max_margin_parallel(count, margin)
                                       : max_margin_serial(count, margin);
}

/// Calls body(i) for every i in [0, count). body must only write to slot i.
template <class Body>
void for_each_index_serial(std::size_t count, Body&& body) {
    for (std::size_t i = 0; i < count; ++i) body(i);
}

template <class Body>
void for_each_index_parallel(std::size_t count, Body&& body) {
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(count); ++i) {
        body(static_cast<std::size_t>(i));
    }
}

template <class Body>
void for_each_index(Execution exec, std::size_t count, Body&& body) {
    if (exec == Execution::Parallel) {
        for_each_index_parallel(count, body);
    } else {
        for_each_index_serial(count, body);
    }
}

inline int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace kernels
}  // namespace tempent
