#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "chepta/dense_matrix.hpp"

// Exact dense ground truth. Depends on nothing but the scalar types and
// DenseMatrix, so it shares no code with the banded algorithms it checks.
namespace chepta::oracle {

struct OracleReport {
    Rational det;
    std::optional<DenseMatrix<Rational>> inverse;  ///< present iff nonsingular
    bool nonsingular = false;
};

/// Row reduction with first-nonzero pivoting and swap sign tracking.
Rational dense_det(DenseMatrix<Rational> m);

/// Gauss-Jordan on [M | I]; throws SingularMatrix("singular").
DenseMatrix<Rational> dense_inverse(const DenseMatrix<Rational>& m);

OracleReport analyze(const DenseMatrix<Rational>& m);

struct Diff {
    std::vector<std::pair<int, int>> positions;  ///< 1-based (row, column) of unequal entries
    double max_abs = 0.0;                        ///< largest |a - b|
    bool empty() const noexcept { return positions.empty(); }
};

Diff compare(const DenseMatrix<Rational>& a, const DenseMatrix<Rational>& b);
Diff compare(const DenseMatrix<Real>& a, const DenseMatrix<Real>& b);

}  // namespace chepta::oracle
