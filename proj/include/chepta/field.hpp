#pragma once

#include <concepts>
#include <string>

#include "chepta/ratfun.hpp"
#include "chepta/rational.hpp"
#include "chepta/real.hpp"

namespace chepta {

/// The scalar contract every matrix algorithm is written against.
template <class T>
concept FieldScalar = std::regular<T> && requires(T a, const T& b) {
    { a += b } -> std::same_as<T&>;
    { a -= b } -> std::same_as<T&>;
    { a *= b } -> std::same_as<T&>;
    { a /= b } -> std::same_as<T&>;
    { -b } -> std::convertible_to<T>;
    { b.is_zero() } -> std::convertible_to<bool>;
    { b.to_string() } -> std::convertible_to<std::string>;
};

static_assert(FieldScalar<Rational>);
static_assert(FieldScalar<RatFun>);
static_assert(FieldScalar<Real>);

template <FieldScalar T>
inline const T& zero_of() {
    static const T z{};
    return z;
}

/// Exact embeddings and conversions between backends.
inline RatFun lift(const Rational& x) { return RatFun(x); }
inline Real to_real(const Rational& x) { return Real(x.to_double()); }

}  // namespace chepta
