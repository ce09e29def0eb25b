#pragma once

#include <array>
#include <future>
#include <vector>

#include "chepta/dense_matrix.hpp"
#include "chepta/hepta_matrix.hpp"
#include "chepta/lu_factor.hpp"
#include "chepta/triangular.hpp"

namespace chepta {

/// Columns n, n-1, n-2, n-3, n-4 of the inverse, each stored 0-based by row.
template <FieldScalar T>
struct SeedColumns {
    int n = 0;
    std::array<std::vector<T>, 5> cols;  // cols[k] is column n-k

    const std::vector<T>& column(int m) const { return cols[static_cast<std::size_t>(n - m)]; }
    friend bool operator==(const SeedColumns&, const SeedColumns&) = default;
};

namespace detail {

// Rows m..n of L^{-1} e_m for a seed column m >= n-4, written out in closed
// form from the border rows of L. Rows above m are zero.
template <FieldScalar T>
std::vector<T> seed_rhs(const FactorData<T>& F, int m) {
    const int n = F.n;
    std::vector<T> y(static_cast<std::size_t>(n));
    auto at = [&y](int i) -> T& { return y[static_cast<std::size_t>(i - 1)]; };
    const auto& f = F.lower1;
    const auto& e = F.lower2;
    const auto& k = F.row_penult;
    const auto& h = F.row_last;

    at(m) = T(1);
    switch (n - m) {
        case 0:
            break;
        case 1:
            at(n) = -h[n - 1];
            break;
        case 2:
            at(n - 1) = -k[n - 2];
            at(n) = h[n - 1] * k[n - 2] - h[n - 2];
            break;
        case 3: {
            T kk = k[n - 2] * f[n - 2] - k[n - 3];
            at(n - 2) = -f[n - 2];
            at(n - 1) = kk;
            at(n) = h[n - 2] * f[n - 2] - h[n - 3] - h[n - 1] * kk;
            break;
        }
        case 4: {
            // The L(n-2, n-4) cofactor enters with a minus: e - f f.
            T ef = e[n - 2] - f[n - 2] * f[n - 3];
            T kk = k[n - 3] * f[n - 3] - k[n - 4] + k[n - 2] * ef;
            at(n - 3) = -f[n - 3];
            at(n - 2) = -ef;
            at(n - 1) = kk;
            at(n) = h[n - 3] * f[n - 3] - h[n - 4] + h[n - 2] * ef - h[n - 1] * kk;
            break;
        }
        default:
            throw ContractViolation("seed column index out of range");
    }
    return y;
}

}  // namespace detail

/// One seed column: closed-form tail of L^{-1} e_m followed by the upward sweep through U.
template <FieldScalar T>
std::vector<T> seed_column(const FactorData<T>& F, int m) {
    return back_substitute(F, detail::seed_rhs(F, m));
}

/// The five seed columns. With parallel set they are computed on separate
/// threads; the result is identical either way.
template <FieldScalar T>
SeedColumns<T> seed_columns(const FactorData<T>& F, bool parallel = false) {
    SeedColumns<T> s;
    s.n = F.n;
    if (!parallel) {
        for (int k = 0; k < 5; ++k) s.cols[static_cast<std::size_t>(k)] = seed_column(F, F.n - k);
        return s;
    }
    std::array<std::future<std::vector<T>>, 5> jobs;
    for (int k = 0; k < 5; ++k)
        jobs[static_cast<std::size_t>(k)] =
            std::async(std::launch::async, [&F, m = F.n - k] { return seed_column(F, m); });
    for (int k = 0; k < 5; ++k) s.cols[static_cast<std::size_t>(k)] = jobs[static_cast<std::size_t>(k)].get();
    return s;
}

namespace detail {

/// Column j (j <= n-5) of the inverse from S H = I: column j+3 of that identity
/// isolates C_j Col_j, so Col_j = (E_{j+3} - sum of Col_{j+1}..Col_{j+6}
/// weighted by column j+3 of H) / C_j. `col` is indexed by column number and
/// only entries j+1..min(j+6, n) are read.
template <FieldScalar T>
std::vector<T> column_from_later(const CyclicHeptaMatrix<T>& h, int j, const std::vector<std::vector<T>>& col) {
    const int n = h.order();
    const T& divisor = h.band(Band::sup3, j);
    if (divisor.is_zero())
        throw ContractViolation("zero C_" + std::to_string(j) + " reached the column recursion");

    struct Term {
        const T* weight;
        const std::vector<T>* column;
    };
    std::vector<Term> terms;
    auto add = [&](Band b, int row) {
        const T& w = h.band(b, row);
        if (!w.is_zero()) terms.push_back({&w, &col[static_cast<std::size_t>(row)]});
    };
    add(Band::sup2, j + 1);
    add(Band::sup1, j + 2);
    add(Band::diag, j + 3);
    add(Band::sub1, j + 4);
    add(Band::sub2, j + 5);
    if (j + 6 <= n) add(Band::sub3, j + 6);  // row n+1 would wrap onto D_1 = 0

    std::vector<T> c(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < c.size(); ++i) {
        T acc = static_cast<int>(i) + 1 == j + 3 ? T(1) : T(0);
        for (const auto& t : terms) acc -= *t.weight * (*t.column)[i];
        acc /= divisor;
        c[i] = std::move(acc);
    }
    return c;
}

}  // namespace detail

/// Columns n-5 down to 1 by the column recursion, strictly in descending
/// order. Returns the full inverse.
template <FieldScalar T>
DenseMatrix<T> back_columns(const CyclicHeptaMatrix<T>& h, const SeedColumns<T>& seeds) {
    const int n = h.order();
    std::vector<std::vector<T>> col(static_cast<std::size_t>(n + 1));
    for (int m = n - 4; m <= n; ++m) col[static_cast<std::size_t>(m)] = seeds.column(m);
    for (int j = n - 5; j >= 1; --j) col[static_cast<std::size_t>(j)] = detail::column_from_later(h, j, col);

    DenseMatrix<T> s(n);
    for (int j = 1; j <= n; ++j)
        for (int i = 1; i <= n; ++i) s(i, j) = col[static_cast<std::size_t>(j)][static_cast<std::size_t>(i - 1)];
    return s;
}

/// Seed columns then the column recursion. h must be the matrix F factors
/// (including any t perturbation).
template <FieldScalar T>
DenseMatrix<T> chinv(const CyclicHeptaMatrix<T>& h, const FactorData<T>& F, bool parallel_seeds = false) {
    return back_columns(h, seed_columns(F, parallel_seeds));
}

struct InvertOptions {
    bool parallel_seeds = false;
    /// Also replace zero B_i, i = 6..n, by t. Off by default: no divisor involves B_i.
    bool apply_b_substitution = false;
};

enum class FloatInverseRoute {
    lu_columns,        ///< seed columns, then every other column by bordered LU substitution
    column_recursion,  ///< seed columns, then the C_j column recursion
};

struct FloatInvertOptions {
    FloatOptions factor;
    bool parallel_seeds = false;
    FloatInverseRoute route = FloatInverseRoute::lu_columns;
};

template <class S>
struct InverseResult {
    DenseMatrix<S> inverse;
    S det{};
    std::vector<int> c_substitutions;  ///< indices i with C_i replaced by t
    std::vector<int> b_substitutions;  ///< indices i with B_i replaced by t
    std::vector<int> pivot_overrides;  ///< rows whose pivot was replaced by t
};

/// Exact inverse. Zero C_i (i <= n-5) and zero pivots are replaced by t, the
/// perturbed problem is solved over rational functions and evaluated at t = 0.
/// Throws SingularMatrix when the determinant is zero.
InverseResult<Rational> invert(const ExactMatrix& h, const InvertOptions& opt = {});

InverseResult<Real> invert(const FloatMatrix& h, const FloatInvertOptions& opt = {});

/// Indices i <= n-5 with C_i = 0.
std::vector<int> zero_c_positions(const ExactMatrix& h);

}  // namespace chepta
