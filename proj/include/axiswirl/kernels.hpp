#pragma once

#include <atomic>
#include <vector>

namespace axi::kernels {

#if defined(_OPENMP)
inline constexpr bool have_openmp = true;
#else
inline constexpr bool have_openmp = false;
#endif

// Global switch between the OpenMP kernels and the serial reference path.
// Both paths are bit-identical (independent row writes; reductions combine
// fixed per-row partials in row order), so tests can assert exact equality.
inline std::atomic<bool>& parallel_flag() {
    static std::atomic<bool> flag{true};
    return flag;
}
inline void use_parallel_kernels(bool on) { parallel_flag().store(on); }
inline bool parallel_kernels() { return have_openmp && parallel_flag().load(); }

// Runs body(i) for i in [0,n).  Par=false is the serial reference path; the
// two must produce identical results bit-for-bit, which holds because rows
// are independent.
template <bool Par, class F>
void par_rows(int n, F&& body) {
#pragma omp parallel for schedule(static) if (Par)
    for (int i = 0; i < n; ++i) body(i);
}

// Deterministic reduction: each row is summed with compensated (Kahan)
// addition, row partials are combined serially in row order.  The result is
// independent of the thread count and identical between the parallel and
// serial paths.
template <bool Par, class RowSum>
double reduce_rows(int n, RowSum&& row_sum) {
    std::vector<double> partial(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(static) if (Par)
    for (int i = 0; i < n; ++i) partial[std::size_t(i)] = row_sum(i);
    double s = 0.0, c = 0.0;
    for (int i = 0; i < n; ++i) {
        double y = partial[std::size_t(i)] - c;
        double t = s + y;
        c = (t - s) - y;
        s = t;
    }
    return s;
}

// Runtime-dispatched wrappers honoring the global kernel switch.
template <class F>
void rows(int n, F&& body) {
    if (parallel_kernels())
        par_rows<true>(n, body);
    else
        par_rows<false>(n, body);
}
template <class RowSum>
double reduce(int n, RowSum&& row_sum) {
    if (parallel_kernels()) return reduce_rows<true>(n, row_sum);
    return reduce_rows<false>(n, row_sum);
}

// Kahan sum of f(j) over j in [0,m).
template <class F>
double kahan_sum(int m, F&& f) {
    double s = 0.0, c = 0.0;
    for (int j = 0; j < m; ++j) {
        double y = f(j) - c;
        double t = s + y;
        c = (t - s) - y;
        s = t;
    }
    return s;
}

}  // namespace axi::kernels
