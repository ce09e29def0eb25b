#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "chepta/dense_matrix.hpp"
#include "chepta/errors.hpp"
#include "chepta/field.hpp"

namespace chepta {

/// The seven diagonals, from the third subdiagonal to the third superdiagonal.
/// Row i of the matrix holds band b at column i + offset(b), wrapped into 1..n.
enum class Band { sub3, sub2, sub1, diag, sup1, sup2, sup3 };

inline constexpr std::array<Band, 7> kAllBands = {Band::sub3, Band::sub2, Band::sub1, Band::diag,
                                                  Band::sup1, Band::sup2, Band::sup3};

constexpr int offset(Band b) noexcept { return static_cast<int>(b) - 3; }

/// Key of the band in the matrix file format.
constexpr std::string_view band_key(Band b) noexcept {
    constexpr std::array<std::string_view, 7> keys = {"D", "B", "b", "d", "a", "A", "C"};
    return keys[static_cast<std::size_t>(b)];
}

/// Band entries that wrap onto an already-occupied corner and must be zero:
/// the third subdiagonal in rows 1..3 and the third superdiagonal in rows n-2..n.
constexpr bool forced_zero(Band b, int i, int n) noexcept {
    return (b == Band::sub3 && i <= 3) || (b == Band::sup3 && i >= n - 2);
}

inline constexpr int kMinOrder = 8;

/// Seven length-n band vectors, stored 0-based (entry i-1 holds row i).
template <FieldScalar T>
struct HeptaBands {
    std::array<std::vector<T>, 7> v;

    static HeptaBands zeros(int n) {
        HeptaBands b;
        for (auto& x : b.v) x.assign(static_cast<std::size_t>(n), T{});
        return b;
    }

    std::vector<T>& operator[](Band b) { return v[static_cast<std::size_t>(b)]; }
    const std::vector<T>& operator[](Band b) const { return v[static_cast<std::size_t>(b)]; }

    T& at(Band b, int i) { return (*this)[b][static_cast<std::size_t>(i - 1)]; }
    const T& at(Band b, int i) const { return (*this)[b][static_cast<std::size_t>(i - 1)]; }

    friend bool operator==(const HeptaBands&, const HeptaBands&) = default;
};

/// General cyclic heptadiagonal matrix in band storage. Immutable once built;
/// all indexing is 1-based.
template <FieldScalar T>
class CyclicHeptaMatrix {
public:
    CyclicHeptaMatrix() = default;

    /// Validates order and the wrap-zero positions.
    static CyclicHeptaMatrix build(int n, HeptaBands<T> bands) {
        if (n < kMinOrder)
            throw InvalidInput("order too small: n = " + std::to_string(n) + ", need n >= 8");
        for (Band b : kAllBands) {
            if (static_cast<int>(bands[b].size()) != n)
                throw InvalidInput("band " + std::string(band_key(b)) + " has length " +
                                   std::to_string(bands[b].size()) + ", expected " +
                                   std::to_string(n));
        }
        for (Band b : {Band::sub3, Band::sup3})
            for (int i = 1; i <= n; ++i)
                if (forced_zero(b, i, n) && !bands.at(b, i).is_zero())
                    throw InvalidInput("band wrap violation: " + std::string(band_key(b)) + "_" +
                                       std::to_string(i) + " must be zero");
        CyclicHeptaMatrix m;
        m.n_ = n;
        m.bands_ = std::move(bands);
        return m;
    }

    static CyclicHeptaMatrix from_dense(const DenseMatrix<T>& dense) {
        const int n = dense.order();
        if (n < kMinOrder)
            throw InvalidInput("order too small: n = " + std::to_string(n) + ", need n >= 8");
        auto bands = HeptaBands<T>::zeros(n);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                const T& x = dense(i, j);
                if (x.is_zero()) continue;
                int o = wrapped_offset(i, j, n);
                if (o < -3 || o > 3 || forced_zero(static_cast<Band>(o + 3), i, n))
                    throw InvalidInput("pattern violation at (" + std::to_string(i) + "," +
                                       std::to_string(j) + ")");
                bands.at(static_cast<Band>(o + 3), i) = x;
            }
        return build(n, std::move(bands));
    }

    int order() const noexcept { return n_; }
    const HeptaBands<T>& bands() const noexcept { return bands_; }

    const T& band(Band b, int i) const {
        if (i < 1 || i > n_)
            throw InvalidInput("band index " + std::to_string(i) + " out of range");
        return bands_.at(b, i);
    }

    /// Entry at (i, j); zero off the band pattern.
    const T& get(int i, int j) const {
        if (i < 1 || i > n_ || j < 1 || j > n_)
            throw InvalidInput("index (" + std::to_string(i) + "," + std::to_string(j) +
                               ") out of range");
        int o = wrapped_offset(i, j, n_);
        if (o < -3 || o > 3) return zero_of<T>();
        return bands_.at(static_cast<Band>(o + 3), i);
    }

    DenseMatrix<T> to_dense() const {
        DenseMatrix<T> m(n_);
        for (Band b : kAllBands)
            for (int i = 1; i <= n_; ++i) {
                int j = (i - 1 + offset(b) + n_) % n_ + 1;
                m(i, j) = bands_.at(b, i);
            }
        return m;
    }

    /// Copy with one band entry replaced.
    CyclicHeptaMatrix with(Band b, int i, T value) const {
        auto bands = bands_;
        bands.at(b, i) = std::move(value);
        return build(n_, std::move(bands));
    }

    template <class F>
    auto map(F&& f) const -> CyclicHeptaMatrix<decltype(f(std::declval<const T&>()))> {
        using U = decltype(f(std::declval<const T&>()));
        HeptaBands<U> out;
        for (Band b : kAllBands) {
            out[b].reserve(bands_[b].size());
            for (const auto& x : bands_[b]) out[b].push_back(f(x));
        }
        return CyclicHeptaMatrix<U>::build(n_, std::move(out));
    }

    friend bool operator==(const CyclicHeptaMatrix&, const CyclicHeptaMatrix&) = default;

private:
    // Offset of column j from row i, reduced into (-n/2, n/2].
    static int wrapped_offset(int i, int j, int n) {
        int o = ((j - i) % n + n) % n;
        if (o > n / 2) o -= n;
        return o;
    }

    int n_ = 0;
    HeptaBands<T> bands_;
};

using ExactMatrix = CyclicHeptaMatrix<Rational>;
using FloatMatrix = CyclicHeptaMatrix<Real>;

}  // namespace chepta

namespace chepta {

/// H x in O(n) through the bands. x is 0-based storage of rows 1..n.
template <FieldScalar T>
std::vector<T> multiply(const CyclicHeptaMatrix<T>& h, const std::vector<T>& x) {
    const int n = h.order();
    if (static_cast<int>(x.size()) != n) throw InvalidInput("vector length does not match order");
    std::vector<T> y(x.size());
    for (int i = 1; i <= n; ++i) {
        T acc{};
        for (Band b : kAllBands) {
            const T& w = h.bands().at(b, i);
            if (w.is_zero()) continue;
            int j = (i - 1 + offset(b) + n) % n + 1;
            acc += w * x[static_cast<std::size_t>(j - 1)];
        }
        y[static_cast<std::size_t>(i - 1)] = std::move(acc);
    }
    return y;
}

}  // namespace chepta
