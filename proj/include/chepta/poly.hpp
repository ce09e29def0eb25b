#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <vector>

#include "chepta/rational.hpp"

namespace chepta {

/// Univariate polynomial in t over the rationals.
///
/// Coefficient k multiplies t^k. The zero polynomial has no coefficients and
/// every other polynomial has a nonzero leading coefficient.
class Poly {
public:
    Poly() = default;
    explicit Poly(const Rational& c);
    explicit Poly(std::vector<mpq_class> coeffs);
    Poly(std::initializer_list<long> coeffs);

    /// The monomial t.
    static Poly t();

    bool is_zero() const noexcept { return c_.empty(); }
    bool is_constant() const noexcept { return c_.size() <= 1; }
    bool is_one() const;
    /// Degree, or -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }

    Rational coefficient(int k) const;
    const std::vector<mpq_class>& coefficients() const noexcept { return c_; }
    const mpq_class& leading() const { return c_.back(); }

    /// Value at t = 0.
    Rational constant_term() const;

    Poly monic() const;
    Poly scaled(const mpq_class& s) const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly operator-() const;

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    std::string to_string() const;

private:
    void trim();

    std::vector<mpq_class> c_;
};

struct PolyDivision {
    Poly quotient;
    Poly remainder;
};

/// Euclidean division; throws DivisionByZero for a zero divisor.
PolyDivision divmod(const Poly& num, const Poly& den);

/// Monic greatest common divisor. Throws InvalidInput("gcd undefined") when both are zero.
Poly poly_gcd(const Poly& p, const Poly& q);

}  // namespace chepta
