#pragma once

#include <cmath>
#include <compare>
#include <string>

#include "chepta/op_counter.hpp"

namespace chepta {

/// binary64 scalar for the float backend. Arithmetic is plain IEEE; the
/// wrapper exists so operations are counted like the exact scalars.
struct Real {
    double v = 0.0;

    constexpr Real() = default;
    constexpr Real(double x) : v(x) {}  // NOLINT(google-explicit-constructor)

    bool is_zero() const noexcept { return v == 0.0; }
    std::string to_string() const;

    Real operator-() const { return Real(-v); }
    Real& operator+=(Real o) { ops::tick(); v += o.v; return *this; }
    Real& operator-=(Real o) { ops::tick(); v -= o.v; return *this; }
    Real& operator*=(Real o) { ops::tick(); v *= o.v; return *this; }
    Real& operator/=(Real o) { ops::tick(); v /= o.v; return *this; }

    friend Real operator+(Real a, Real b) { return a += b; }
    friend Real operator-(Real a, Real b) { return a -= b; }
    friend Real operator*(Real a, Real b) { return a *= b; }
    friend Real operator/(Real a, Real b) { return a /= b; }

    friend bool operator==(Real a, Real b) = default;
    friend auto operator<=>(Real a, Real b) = default;
};

inline Real abs(Real x) { return Real(std::fabs(x.v)); }

}  // namespace chepta
