#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "chepta/op_counter.hpp"

namespace chepta {

/// Exact rational number. Always held in lowest terms with a positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(long num, long den);
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    /// Parses "p/q", a plain integer, or a terminating decimal such as "-1.25".
    static Rational parse(std::string_view text);

    const mpq_class& raw() const noexcept { return q_; }
    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }

    bool is_zero() const noexcept { return sgn(q_) == 0; }
    int sign() const noexcept { return sgn(q_); }
    double to_double() const { return q_.get_d(); }

    /// Canonical text: "p" when the denominator is one, otherwise "p/q".
    std::string to_string() const { return q_.get_str(); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }

    Rational& operator+=(const Rational& o) { ops::tick(); q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { ops::tick(); q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { ops::tick(); q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class q_;
};

Rational abs(const Rational& x);
std::ostream& operator<<(std::ostream& os, const Rational& x);

}  // namespace chepta
