#pragma once

#include <utility>
#include <variant>
#include <vector>

#include "chepta/dense_matrix.hpp"
#include "chepta/field.hpp"
#include "chepta/hepta_matrix.hpp"
#include "chepta/offset_vector.hpp"

namespace chepta {

struct FloatOptions {
    /// A pivot p is rejected when |p| < tol * max(1, largest |entry| of H).
    double tol = 1e-12;
};

/// Bordered Doolittle factors H = L U.
///
/// L is unit lower triangular: three subdiagonals in rows 1..n-2 and two dense
/// border rows n-1 and n. U is upper triangular: the pivots, three
/// superdiagonals in rows 1..n-2 and two dense border columns n-1 and n.
/// Each vector exists exactly on its listed range.
template <FieldScalar T>
struct FactorData {
    int n = 0;
    OffsetVector<T> pivot;       ///< U(i, i), i = 1..n
    OffsetVector<T> lower1;      ///< L(i, i-1), i = 2..n-2
    OffsetVector<T> lower2;      ///< L(i, i-2), i = 3..n-2
    OffsetVector<T> lower3;      ///< L(i, i-3) = D_i / pivot(i-3), i = 4..n-2
    OffsetVector<T> upper1;      ///< U(i, i+1), i = 1..n-3
    OffsetVector<T> upper2;      ///< U(i, i+2), i = 1..n-4
    OffsetVector<T> upper3;      ///< U(i, i+3) = C_i, i = 1..n-5
    OffsetVector<T> row_penult;  ///< L(n-1, j), j = 1..n-2
    OffsetVector<T> row_last;    ///< L(n, j), j = 1..n-1
    OffsetVector<T> col_penult;  ///< U(i, n-1), i = 1..n-2
    OffsetVector<T> col_last;    ///< U(i, n), i = 1..n-1
    /// Rows whose pivot came out exactly zero and was replaced by t, in order.
    std::vector<int> pivot_overrides;

    static FactorData sized(int n) {
        FactorData f;
        f.n = n;
        f.pivot = OffsetVector<T>(1, n);
        f.lower1 = OffsetVector<T>(2, n - 2);
        f.lower2 = OffsetVector<T>(3, n - 2);
        f.lower3 = OffsetVector<T>(4, n - 2);
        f.upper1 = OffsetVector<T>(1, n - 3);
        f.upper2 = OffsetVector<T>(1, n - 4);
        f.upper3 = OffsetVector<T>(1, n - 5);
        f.row_penult = OffsetVector<T>(1, n - 2);
        f.row_last = OffsetVector<T>(1, n - 1);
        f.col_penult = OffsetVector<T>(1, n - 2);
        f.col_last = OffsetVector<T>(1, n - 1);
        return f;
    }

    template <class F>
    auto map(F&& f) const -> FactorData<decltype(f(std::declval<const T&>()))> {
        FactorData<decltype(f(std::declval<const T&>()))> r;
        r.n = n;
        r.pivot = pivot.map(f);
        r.lower1 = lower1.map(f);
        r.lower2 = lower2.map(f);
        r.lower3 = lower3.map(f);
        r.upper1 = upper1.map(f);
        r.upper2 = upper2.map(f);
        r.upper3 = upper3.map(f);
        r.row_penult = row_penult.map(f);
        r.row_last = row_last.map(f);
        r.col_penult = col_penult.map(f);
        r.col_last = col_last.map(f);
        r.pivot_overrides = pivot_overrides;
        return r;
    }

    friend bool operator==(const FactorData&, const FactorData&) = default;
};

namespace detail {

// Row-by-row evaluation of the bordered factorization. Row i is split around
// its pivot so that a caller can inspect (and replace) pivot(i) before anything
// is divided by it.
template <FieldScalar T>
class BorderedLu {
public:
    BorderedLu(const CyclicHeptaMatrix<T>& h, FactorData<T>& fd) : h_(h), f_(fd), n_(h.order()) {}

    // Computes pivot(i) and every quantity of row i that does not divide by it.
    void before_pivot(int i) {
        if (i <= n_ - 2)
            band_row(i);
        else if (i == n_ - 1)
            penultimate_row();
        else
            last_row();
    }

    // Quantities of step i that divide by pivot(i).
    void after_pivot(int i) {
        if (i <= n_ - 2) {
            f_.row_penult[i] = border_entry(f_.row_penult, h_.get(n_ - 1, i), i);
            f_.row_last[i] = border_entry(f_.row_last, h_.get(n_, i), i);
        } else if (i == n_ - 1) {
            T acc = h_.band(Band::sub1, n_);
            for (int j = 1; j <= n_ - 2; ++j) acc -= f_.row_last[j] * f_.col_penult[j];
            f_.row_last[n_ - 1] = acc / f_.pivot[n_ - 1];
        }
    }

    /// Runs rows from..n. on_pivot(i, pivot) returns false to stop before
    /// anything is divided by pivot(i); the stopping row is returned, 0 when done.
    template <class OnPivot>
    int run(int from, OnPivot&& on_pivot) {
        for (int i = from; i <= n_; ++i) {
            before_pivot(i);
            if (!on_pivot(i, f_.pivot[i])) return i;
            after_pivot(i);
        }
        return 0;
    }

private:
    void band_row(int i) {
        auto& F = f_;
        if (i >= 4) F.lower3[i] = h_.band(Band::sub3, i) / F.pivot[i - 3];
        if (i >= 3) {
            T e = h_.band(Band::sub2, i);
            if (i >= 4) e -= F.lower3[i] * F.upper1[i - 3];
            F.lower2[i] = e / F.pivot[i - 2];
        }
        if (i >= 2) {
            T f = h_.band(Band::sub1, i);
            if (i >= 4) f -= F.lower3[i] * F.upper2[i - 3];
            if (i >= 3) f -= F.lower2[i] * F.upper1[i - 2];
            F.lower1[i] = f / F.pivot[i - 1];
        }

        T alpha = h_.band(Band::diag, i);
        if (i >= 4) alpha -= F.lower3[i] * F.upper3[i - 3];
        if (i >= 3) alpha -= F.lower2[i] * F.upper2[i - 2];
        if (i >= 2) alpha -= F.lower1[i] * F.upper1[i - 1];
        F.pivot[i] = std::move(alpha);

        if (i <= n_ - 3) {
            T g = h_.band(Band::sup1, i);
            if (i >= 2) g -= F.lower1[i] * F.upper2[i - 1];
            if (i >= 3) g -= F.lower2[i] * F.upper3[i - 2];
            F.upper1[i] = std::move(g);
        }
        if (i <= n_ - 4) {
            T z = h_.band(Band::sup2, i);
            if (i >= 2) z -= F.lower1[i] * F.upper3[i - 1];
            F.upper2[i] = std::move(z);
        }
        if (i <= n_ - 5) F.upper3[i] = h_.band(Band::sup3, i);

        // Border columns: forward elimination of columns n-1 and n of H.
        F.col_penult[i] = border_column(F.col_penult, h_.get(i, n_ - 1), i);
        F.col_last[i] = border_column(F.col_last, h_.get(i, n_), i);
    }

    void penultimate_row() {
        auto& F = f_;
        const int m = n_ - 1;
        T v = h_.band(Band::sup1, m);
        T alpha = h_.band(Band::diag, m);
        for (int j = 1; j <= n_ - 2; ++j) {
            v -= F.row_penult[j] * F.col_last[j];
            alpha -= F.col_penult[j] * F.row_penult[j];
        }
        F.col_last[m] = std::move(v);
        F.pivot[m] = std::move(alpha);
    }

    void last_row() {
        auto& F = f_;
        T alpha = h_.band(Band::diag, n_);
        for (int j = 1; j <= n_ - 1; ++j) alpha -= F.col_last[j] * F.row_last[j];
        F.pivot[n_] = std::move(alpha);
    }

    // U(i, c) for a border column c, given H(i, c).
    T border_column(const OffsetVector<T>& col, const T& rhs, int i) const {
        T acc = rhs;
        if (i >= 4) acc -= f_.lower3[i] * col[i - 3];
        if (i >= 3) acc -= f_.lower2[i] * col[i - 2];
        if (i >= 2) acc -= f_.lower1[i] * col[i - 1];
        return acc;
    }

    // L(r, i) for a border row r, given H(r, i).
    T border_entry(const OffsetVector<T>& row, const T& rhs, int i) const {
        T acc = rhs;
        if (i >= 4) acc -= row[i - 3] * f_.upper3[i - 3];
        if (i >= 3) acc -= row[i - 2] * f_.upper2[i - 2];
        if (i >= 2) acc -= row[i - 1] * f_.upper1[i - 1];
        return acc / f_.pivot[i];
    }

    const CyclicHeptaMatrix<T>& h_;
    FactorData<T>& f_;
    int n_;
};

}  // namespace detail

/// Exact factorization. Runs over Rational until the first zero pivot, then
/// continues over RatFun with that pivot replaced by t.
using ExactFactorization = std::variant<FactorData<Rational>, FactorData<RatFun>>;

ExactFactorization factorize(const ExactMatrix& h);

/// Symbolic factorization. Every pivot that is identically zero becomes t.
FactorData<RatFun> factorize(const CyclicHeptaMatrix<RatFun>& h);

/// Float factorization; throws NearSingularPivot for a pivot below tolerance.
FactorData<Real> factorize(const FloatMatrix& h, const FloatOptions& opt = {});

/// Promotes an exact factorization to RatFun scalars (identity when already symbolic).
FactorData<RatFun> as_symbolic(const ExactFactorization& fac);

const std::vector<int>& pivot_overrides(const ExactFactorization& fac);

/// Dense L and U.
template <FieldScalar T>
std::pair<DenseMatrix<T>, DenseMatrix<T>> materialize_lu(const FactorData<T>& fd) {
    const int n = fd.n;
    DenseMatrix<T> L = DenseMatrix<T>::identity(n);
    DenseMatrix<T> U(n);
    for (int i = 2; i <= n - 2; ++i) L(i, i - 1) = fd.lower1[i];
    for (int i = 3; i <= n - 2; ++i) L(i, i - 2) = fd.lower2[i];
    for (int i = 4; i <= n - 2; ++i) L(i, i - 3) = fd.lower3[i];
    for (int j = 1; j <= n - 2; ++j) L(n - 1, j) = fd.row_penult[j];
    for (int j = 1; j <= n - 1; ++j) L(n, j) = fd.row_last[j];

    for (int i = 1; i <= n; ++i) U(i, i) = fd.pivot[i];
    for (int i = 1; i <= n - 3; ++i) U(i, i + 1) = fd.upper1[i];
    for (int i = 1; i <= n - 4; ++i) U(i, i + 2) = fd.upper2[i];
    for (int i = 1; i <= n - 5; ++i) U(i, i + 3) = fd.upper3[i];
    for (int i = 1; i <= n - 2; ++i) U(i, n - 1) = fd.col_penult[i];
    for (int i = 1; i <= n - 1; ++i) U(i, n) = fd.col_last[i];
    return {std::move(L), std::move(U)};
}

/// H(t): h with t added to the diagonal at every overridden pivot row, so that
/// L U = H(t) holds exactly for the symbolic factors.
CyclicHeptaMatrix<RatFun> with_pivot_perturbation(const CyclicHeptaMatrix<RatFun>& h,
                                                  const std::vector<int>& overrides);

template <class S>
struct DetResult {
    S value{};
    int pivot_overrides = 0;
    bool singular = false;
};

/// Determinant as the product of pivots, evaluated at t = 0 when overrides fired.
DetResult<Rational> determinant(const ExactMatrix& h);
DetResult<Rational> determinant(const CyclicHeptaMatrix<RatFun>& h);
DetResult<Real> determinant(const FloatMatrix& h, const FloatOptions& opt = {});

DetResult<Rational> determinant_from(const ExactFactorization& fac);
DetResult<Rational> determinant_from(const FactorData<RatFun>& fd);

}  // namespace chepta
