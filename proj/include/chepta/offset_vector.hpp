#pragma once

#include <cassert>
#include <string>
#include <vector>

#include "chepta/errors.hpp"

namespace chepta {

/// Vector addressed by indices lo..hi inclusive. An empty range has hi < lo.
template <class T>
class OffsetVector {
public:
    OffsetVector() = default;
    OffsetVector(int lo, int hi) : lo_(lo), hi_(hi), data_(hi >= lo ? hi - lo + 1 : 0) {}

    int lo() const noexcept { return lo_; }
    int hi() const noexcept { return hi_; }
    bool contains(int i) const noexcept { return i >= lo_ && i <= hi_; }
    std::size_t size() const noexcept { return data_.size(); }

    T& operator[](int i) {
        assert(contains(i));
        return data_[static_cast<std::size_t>(i - lo_)];
    }
    const T& operator[](int i) const {
        assert(contains(i));
        return data_[static_cast<std::size_t>(i - lo_)];
    }

    const T& at(int i) const {
        if (!contains(i))
            throw InvalidInput("index " + std::to_string(i) + " outside " + std::to_string(lo_) +
                               ".." + std::to_string(hi_));
        return (*this)[i];
    }

    auto begin() const { return data_.begin(); }
    auto end() const { return data_.end(); }

    template <class F>
    auto map(F&& f) const -> OffsetVector<decltype(f(std::declval<const T&>()))> {
        OffsetVector<decltype(f(std::declval<const T&>()))> r(lo_, hi_);
        for (int i = lo_; i <= hi_; ++i) r[i] = f((*this)[i]);
        return r;
    }

    friend bool operator==(const OffsetVector&, const OffsetVector&) = default;

private:
    int lo_ = 1;
    int hi_ = 0;
    std::vector<T> data_;
};

}  // namespace chepta
