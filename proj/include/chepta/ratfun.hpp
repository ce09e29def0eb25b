#pragma once

#include <iosfwd>
#include <string>

#include "chepta/poly.hpp"
#include "chepta/rational.hpp"

namespace chepta {

/// Rational function num(t)/den(t) over the rationals, kept in canonical form:
/// fully reduced, monic denominator, denominator 1 for constants and zero.
class RatFun {
public:
    RatFun() : den_(Poly{1}) {}
    RatFun(long c) : RatFun(Rational(c)) {}  // NOLINT(google-explicit-constructor)
    RatFun(const Rational& c);               // NOLINT(google-explicit-constructor)
    explicit RatFun(Poly p);

    /// The indeterminate t.
    static RatFun t();

    const Poly& num() const noexcept { return num_; }
    const Poly& den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_constant() const noexcept { return num_.is_constant() && den_.is_constant(); }
    /// Largest of the numerator and denominator degrees.
    int degree() const noexcept;

    RatFun operator-() const;

    RatFun& operator+=(const RatFun& o);
    RatFun& operator-=(const RatFun& o);
    RatFun& operator*=(const RatFun& o);
    RatFun& operator/=(const RatFun& o);

    friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
    friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
    friend RatFun operator*(RatFun a, const RatFun& b) { return a *= b; }
    friend RatFun operator/(RatFun a, const RatFun& b) { return a /= b; }

    friend bool operator==(const RatFun& a, const RatFun& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string to_string() const;

    /// Largest admissible degree; exceeding it raises DegreeCapExceeded. Default 64.
    static int degree_cap() noexcept;
    static void set_degree_cap(int cap) noexcept;

private:
    friend RatFun ratfun_normalize(Poly num, Poly den);
    struct Raw {};
    RatFun(Raw, Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {}
    void check_cap() const;

    Poly num_;
    Poly den_;
};

/// Builds the canonical form of num/den. Throws DivisionByZero when den is zero.
RatFun ratfun_normalize(Poly num, Poly den);

/// Substitutes t = 0. Throws ContractViolation("pole at t=0") when the reduced
/// denominator vanishes there.
Rational eval_at_zero(const RatFun& x);

std::ostream& operator<<(std::ostream& os, const RatFun& x);

}  // namespace chepta
