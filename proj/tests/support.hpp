#pragma once

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "json.hpp"

#include "chepta/dense_matrix.hpp"
#include "chepta/hepta_matrix.hpp"
#include "chepta/matrix_io.hpp"
#include "chepta/rational.hpp"

namespace testing {

inline std::filesystem::path fixture(const std::string& name) {
    return std::filesystem::path(CHEPTA_FIXTURE_DIR) / name;
}

inline chepta::ExactMatrix example_matrix() { return chepta::io::load_matrix(fixture("example_3_1.json")); }

/// Example matrix with row 6 replaced by a copy of row 5.
inline chepta::ExactMatrix singular_example() { return chepta::io::load_matrix(fixture("singular_duplicate_row.json")); }

inline std::vector<chepta::Rational> example_rhs() {
    return chepta::io::parse_rhs(chepta::io::read_file(fixture("example_3_1_rhs.json")));
}

inline chepta::DenseMatrix<chepta::Rational> example_inverse() {
    auto j = nlohmann::json::parse(chepta::io::read_file(fixture("example_3_1_inverse.json")));
    const int n = static_cast<int>(j.size());
    chepta::DenseMatrix<chepta::Rational> s(n);
    for (int i = 1; i <= n; ++i)
        for (int k = 1; k <= n; ++k) s(i, k) = chepta::Rational::parse(j[i - 1][k - 1].get<std::string>());
    return s;
}

// Laplace expansion along successive rows, memoized on the set of columns
// already used. O(n 2^n), fine up to n = 12 or so.
inline chepta::Rational cofactor_det(const chepta::DenseMatrix<chepta::Rational>& m) {
    const int n = m.order();
    std::unordered_map<std::uint32_t, chepta::Rational> memo;
    auto rec = [&](auto&& self, int row, std::uint32_t used) -> chepta::Rational {
        if (row > n) return chepta::Rational(1);
        if (auto it = memo.find(used); it != memo.end()) return it->second;
        chepta::Rational acc(0);
        int sign = 1;
        for (int j = 1; j <= n; ++j) {
            if (used & (1u << j)) continue;
            if (!m(row, j).is_zero()) {
                chepta::Rational term = m(row, j) * self(self, row + 1, used | (1u << j));
                acc = sign > 0 ? acc + term : acc - term;
            }
            sign = -sign;
        }
        memo.emplace(used, acc);
        return acc;
    };
    return rec(rec, 1, 0);
}

inline chepta::Rational random_rational(std::mt19937_64& rng, int span = 20) {
    std::uniform_int_distribution<long> num(-span, span);
    std::uniform_int_distribution<long> den(1, span);
    return chepta::Rational(num(rng), den(rng));
}

inline chepta::DenseMatrix<chepta::Rational> random_dense(std::mt19937_64& rng, int n, int span = 9) {
    std::uniform_int_distribution<long> d(-span, span);
    chepta::DenseMatrix<chepta::Rational> m(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) m(i, j) = chepta::Rational(d(rng));
    return m;
}

inline chepta::DenseMatrix<chepta::Real> to_real(const chepta::DenseMatrix<chepta::Rational>& m) {
    return m.map([](const chepta::Rational& x) { return chepta::Real{x.to_double()}; });
}

}  // namespace testing
