#pragma once

#include <type_traits>
#include <vector>

#if defined(__SSE2__)
#include <xmmintrin.h>
#endif

#include "chepta/dense_matrix.hpp"
#include "chepta/lu_factor.hpp"

namespace chepta {

// Vectors here are 0-based storage of 1-based rows: v[i-1] is row i.

namespace detail {

// Float substitutions run with subnormals flushed to zero. Entries of
// L^{-1} e_j decay geometrically down the rows, and once they pass into the
// subnormal range each operation costs one to two orders of magnitude more.
// The mode is per thread, so every entry point installs it for its own scope.
template <FieldScalar T>
class SubnormalGuard {
public:
    SubnormalGuard() noexcept {
#if defined(__SSE2__)
        if constexpr (std::is_same_v<T, Real>) {
            saved_ = _mm_getcsr();
            _mm_setcsr(saved_ | kFlushToZero | kDenormalsAreZero);
        }
#endif
    }
    ~SubnormalGuard() {
#if defined(__SSE2__)
        if constexpr (std::is_same_v<T, Real>) _mm_setcsr(saved_);
#endif
    }
    SubnormalGuard(const SubnormalGuard&) = delete;
    SubnormalGuard& operator=(const SubnormalGuard&) = delete;

private:
    [[maybe_unused]] static constexpr unsigned kFlushToZero = 0x8000;
    [[maybe_unused]] static constexpr unsigned kDenormalsAreZero = 0x0040;
    unsigned saved_ = 0;
};

}  // namespace detail

/// Solves L y = r through the banded rows and the two dense border rows.
template <FieldScalar T>
std::vector<T> forward_substitute(const FactorData<T>& F, std::vector<T> r) {
    detail::SubnormalGuard<T> guard;
    const int n = F.n;
    auto y = [&r](int i) -> T& { return r[static_cast<std::size_t>(i - 1)]; };
    for (int i = 2; i <= n - 2; ++i) {
        if (i >= 4) y(i) -= F.lower3[i] * y(i - 3);
        if (i >= 3) y(i) -= F.lower2[i] * y(i - 2);
        y(i) -= F.lower1[i] * y(i - 1);
    }
    for (int j = 1; j <= n - 2; ++j) y(n - 1) -= F.row_penult[j] * y(j);
    for (int j = 1; j <= n - 1; ++j) y(n) -= F.row_last[j] * y(j);
    return r;
}

/// Solves U x = y. Rows below n-1 use three superdiagonals plus the border columns.
template <FieldScalar T>
std::vector<T> back_substitute(const FactorData<T>& F, std::vector<T> y) {
    detail::SubnormalGuard<T> guard;
    const int n = F.n;
    auto x = [&y](int i) -> T& { return y[static_cast<std::size_t>(i - 1)]; };
    x(n) /= F.pivot[n];
    x(n - 1) -= F.col_last[n - 1] * x(n);
    x(n - 1) /= F.pivot[n - 1];
    for (int i = n - 2; i >= 1; --i) {
        T& xi = x(i);
        if (i <= n - 3) xi -= F.upper1[i] * x(i + 1);
        if (i <= n - 4) xi -= F.upper2[i] * x(i + 2);
        if (i <= n - 5) xi -= F.upper3[i] * x(i + 3);
        xi -= F.col_penult[i] * x(n - 1);
        xi -= F.col_last[i] * x(n);
        xi /= F.pivot[i];
    }
    return y;
}

template <FieldScalar T>
std::vector<T> lu_solve(const FactorData<T>& F, std::vector<T> r) {
    return back_substitute(F, forward_substitute(F, std::move(r)));
}

/// Columns j0..j1 (j1 <= n-2) of the inverse, solved together in a row-major
/// n x (j1-j0+1) scratch block that is copied into `s` at the end. Per entry
/// the operations are exactly those of lu_solve(F, e_j); rows above j0 of
/// L^{-1} e_j are zero and skipped.
template <FieldScalar T>
void lu_solve_unit_block(const FactorData<T>& F, DenseMatrix<T>& s, int j0, int j1) {
    detail::SubnormalGuard<T> guard;
    const int n = F.n;
    const int w = j1 - j0 + 1;
    std::vector<T> blk(static_cast<std::size_t>(n) * static_cast<std::size_t>(w));
    auto row = [&](int i) { return blk.data() + static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(w); };
    std::vector<T> pen(static_cast<std::size_t>(w)), last(static_cast<std::size_t>(w));

    for (int i = j0; i <= n - 2; ++i) {
        T* y = row(i);
        for (int c = 0; c < w; ++c) {
            T v = i == j0 + c ? T(1) : T(0);
            if (i >= 4) v -= F.lower3[i] * row(i - 3)[c];
            if (i >= 3) v -= F.lower2[i] * row(i - 2)[c];
            if (i >= 2) v -= F.lower1[i] * row(i - 1)[c];
            y[c] = std::move(v);
        }
        // Border rows accumulate in the same ascending order as forward_substitute.
        for (int c = 0; c < w; ++c) {
            pen[static_cast<std::size_t>(c)] -= F.row_penult[i] * y[c];
            last[static_cast<std::size_t>(c)] -= F.row_last[i] * y[c];
        }
    }
    T* yp = row(n - 1);
    T* yl = row(n);
    for (int c = 0; c < w; ++c) {
        yp[c] = pen[static_cast<std::size_t>(c)];
        yl[c] = last[static_cast<std::size_t>(c)] - F.row_last[n - 1] * yp[c];
        yl[c] /= F.pivot[n];
        yp[c] -= F.col_last[n - 1] * yl[c];
        yp[c] /= F.pivot[n - 1];
    }
    for (int i = n - 2; i >= 1; --i) {
        T* x = row(i);
        for (int c = 0; c < w; ++c) {
            T v = x[c];
            if (i <= n - 3) v -= F.upper1[i] * row(i + 1)[c];
            if (i <= n - 4) v -= F.upper2[i] * row(i + 2)[c];
            if (i <= n - 5) v -= F.upper3[i] * row(i + 3)[c];
            v -= F.col_penult[i] * yp[c];
            v -= F.col_last[i] * yl[c];
            v /= F.pivot[i];
            x[c] = std::move(v);
        }
    }
    for (int i = 1; i <= n; ++i)
        for (int c = 0; c < w; ++c) s(i, j0 + c) = std::move(row(i)[c]);
}

}  // namespace chepta
