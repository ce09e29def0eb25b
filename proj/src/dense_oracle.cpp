#include "chepta/dense_oracle.hpp"

#include <algorithm>
#include <cmath>

namespace chepta::oracle {

namespace {

template <class T>
void swap_rows(DenseMatrix<T>& m, int a, int b) {
    for (int j = 1; j <= m.order(); ++j) std::swap(m(a, j), m(b, j));
}

// First row at or below `from` with a nonzero in column `col`, or 0.
int first_nonzero(const DenseMatrix<Rational>& m, int col, int from) {
    for (int i = from; i <= m.order(); ++i)
        if (!m(i, col).is_zero()) return i;
    return 0;
}

}  // namespace

Rational dense_det(DenseMatrix<Rational> m) {
    const int n = m.order();
    Rational det(1);
    for (int c = 1; c <= n; ++c) {
        int p = first_nonzero(m, c, c);
        if (p == 0) return Rational(0);
        if (p != c) {
            swap_rows(m, p, c);
            det = -det;
        }
        const Rational piv = m(c, c);
        det *= piv;
        for (int i = c + 1; i <= n; ++i) {
            if (m(i, c).is_zero()) continue;
            const Rational factor = m(i, c) / piv;
            for (int j = c; j <= n; ++j) m(i, j) -= factor * m(c, j);
        }
    }
    return det;
}

DenseMatrix<Rational> dense_inverse(const DenseMatrix<Rational>& input) {
    const int n = input.order();
    DenseMatrix<Rational> a = input;
    DenseMatrix<Rational> inv = DenseMatrix<Rational>::identity(n);
    for (int c = 1; c <= n; ++c) {
        int p = first_nonzero(a, c, c);
        if (p == 0) throw SingularMatrix("singular");
        if (p != c) {
            swap_rows(a, p, c);
            swap_rows(inv, p, c);
        }
        const Rational piv = a(c, c);
        for (int j = 1; j <= n; ++j) {
            a(c, j) /= piv;
            inv(c, j) /= piv;
        }
        for (int i = 1; i <= n; ++i) {
            if (i == c || a(i, c).is_zero()) continue;
            const Rational factor = a(i, c);
            for (int j = 1; j <= n; ++j) {
                if (!a(c, j).is_zero()) a(i, j) -= factor * a(c, j);
                if (!inv(c, j).is_zero()) inv(i, j) -= factor * inv(c, j);
            }
        }
    }
    return inv;
}

OracleReport analyze(const DenseMatrix<Rational>& m) {
    OracleReport r;
    r.det = dense_det(m);
    r.nonsingular = !r.det.is_zero();
    if (r.nonsingular) r.inverse = dense_inverse(m);
    return r;
}

Diff compare(const DenseMatrix<Rational>& a, const DenseMatrix<Rational>& b) {
    if (a.order() != b.order()) throw InvalidInput("dimension mismatch");
    Diff d;
    for (int i = 1; i <= a.order(); ++i)
        for (int j = 1; j <= a.order(); ++j)
            if (a(i, j) != b(i, j)) {
                d.positions.emplace_back(i, j);
                d.max_abs = std::max(d.max_abs, std::fabs((a(i, j) - b(i, j)).to_double()));
            }
    return d;
}

Diff compare(const DenseMatrix<Real>& a, const DenseMatrix<Real>& b) {
    if (a.order() != b.order()) throw InvalidInput("dimension mismatch");
    Diff d;
    for (int i = 1; i <= a.order(); ++i)
        for (int j = 1; j <= a.order(); ++j)
            if (a(i, j) != b(i, j)) {
                d.positions.emplace_back(i, j);
                d.max_abs = std::max(d.max_abs, std::fabs(a(i, j).v - b(i, j).v));
            }
    return d;
}

}  // namespace chepta::oracle
