#pragma once

#include <string>
#include <vector>

#include "chepta/errors.hpp"
#include "chepta/field.hpp"

namespace chepta {

/// Square matrix with 1-based (row, column) access.
template <FieldScalar T>
class DenseMatrix {
public:
    DenseMatrix() = default;
    explicit DenseMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n) {}

    static DenseMatrix identity(int n) {
        DenseMatrix m(n);
        for (int i = 1; i <= n; ++i) m(i, i) = T(1);
        return m;
    }

    int order() const noexcept { return n_; }

    T& operator()(int i, int j) { return a_[index(i, j)]; }
    const T& operator()(int i, int j) const { return a_[index(i, j)]; }

    std::vector<T> column(int j) const {
        std::vector<T> c;
        c.reserve(static_cast<std::size_t>(n_));
        for (int i = 1; i <= n_; ++i) c.push_back((*this)(i, j));
        return c;
    }

    template <class F>
    auto map(F&& f) const -> DenseMatrix<decltype(f(std::declval<const T&>()))> {
        DenseMatrix<decltype(f(std::declval<const T&>()))> r(n_);
        for (int i = 1; i <= n_; ++i)
            for (int j = 1; j <= n_; ++j) r(i, j) = f((*this)(i, j));
        return r;
    }

    friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

    friend DenseMatrix operator*(const DenseMatrix& x, const DenseMatrix& y) {
        if (x.n_ != y.n_) throw InvalidInput("dimension mismatch");
        DenseMatrix r(x.n_);
        for (int i = 1; i <= x.n_; ++i)
            for (int k = 1; k <= x.n_; ++k) {
                const T& xik = x(i, k);
                if (xik.is_zero()) continue;
                for (int j = 1; j <= x.n_; ++j) {
                    const T& ykj = y(k, j);
                    if (!ykj.is_zero()) r(i, j) += xik * ykj;
                }
            }
        return r;
    }

    std::vector<T> operator*(const std::vector<T>& v) const {
        if (static_cast<int>(v.size()) != n_) throw InvalidInput("dimension mismatch");
        std::vector<T> r(v.size());
        for (int i = 1; i <= n_; ++i)
            for (int j = 1; j <= n_; ++j) {
                const T& x = (*this)(i, j);
                if (!x.is_zero()) r[static_cast<std::size_t>(i - 1)] += x * v[static_cast<std::size_t>(j - 1)];
            }
        return r;
    }

private:
    std::size_t index(int i, int j) const {
        if (i < 1 || i > n_ || j < 1 || j > n_)
            throw InvalidInput("index (" + std::to_string(i) + "," + std::to_string(j) +
                               ") out of range for order " + std::to_string(n_));
        return static_cast<std::size_t>(i - 1) * n_ + static_cast<std::size_t>(j - 1);
    }

    int n_ = 0;
    std::vector<T> a_;
};

}  // namespace chepta
