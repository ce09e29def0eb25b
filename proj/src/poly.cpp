#include "chepta/poly.hpp"

#include <algorithm>
#include <sstream>

#include "chepta/errors.hpp"

namespace chepta {

Poly::Poly(const Rational& c) {
    if (!c.is_zero()) c_.push_back(c.raw());
}

Poly::Poly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<long> coeffs) {
    c_.reserve(coeffs.size());
    for (long v : coeffs) c_.emplace_back(v);
    trim();
}

Poly Poly::t() { return Poly{0, 1}; }

bool Poly::is_one() const { return c_.size() == 1 && c_[0] == 1; }

void Poly::trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Rational Poly::coefficient(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return Rational();
    return Rational(c_[static_cast<std::size_t>(k)]);
}

Rational Poly::constant_term() const { return c_.empty() ? Rational() : Rational(c_[0]); }

Poly Poly::monic() const {
    if (c_.empty() || c_.back() == 1) return *this;
    mpq_class inv = 1 / c_.back();
    return scaled(inv);
}

Poly Poly::scaled(const mpq_class& s) const {
    if (sgn(s) == 0) return {};
    Poly r;
    r.c_.reserve(c_.size());
    for (const auto& x : c_) r.c_.emplace_back(x * s);
    return r;
}

Poly operator+(const Poly& a, const Poly& b) {
    const auto& big = a.c_.size() >= b.c_.size() ? a.c_ : b.c_;
    const auto& small = a.c_.size() >= b.c_.size() ? b.c_ : a.c_;
    Poly r;
    r.c_ = big;
    for (std::size_t k = 0; k < small.size(); ++k) r.c_[k] += small[k];
    r.trim();
    return r;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    Poly r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, mpq_class(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (sgn(a.c_[i]) == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.trim();
    return r;
}

std::string Poly::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const auto& x = c_[static_cast<std::size_t>(k)];
        if (sgn(x) == 0) continue;
        mpq_class mag = abs(x);
        if (first) {
            if (sgn(x) < 0) os << "-";
        } else {
            os << (sgn(x) < 0 ? " - " : " + ");
        }
        first = false;
        if (k == 0 || mag != 1) os << mag.get_str();
        if (k >= 1) os << "t";
        if (k >= 2) os << "^" << k;
    }
    return os.str();
}

PolyDivision divmod(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw DivisionByZero();
    if (num.degree() < den.degree()) return {Poly(), num};

    std::vector<mpq_class> rem = num.coefficients();
    const auto& d = den.coefficients();
    const std::size_t dd = d.size() - 1;
    std::vector<mpq_class> quot(rem.size() - dd, mpq_class(0));
    mpq_class lead_inv = 1 / d.back();
    for (std::size_t k = rem.size(); k-- > dd;) {
        if (sgn(rem[k]) == 0) continue;
        mpq_class factor = rem[k] * lead_inv;
        quot[k - dd] = factor;
        for (std::size_t j = 0; j <= dd; ++j) rem[k - dd + j] -= factor * d[j];
    }
    rem.resize(dd);
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly poly_gcd(const Poly& p, const Poly& q) {
    if (p.is_zero() && q.is_zero()) throw InvalidInput("gcd undefined");
    Poly a = p.monic();
    Poly b = q.monic();
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        if (b.is_constant()) return Poly{1};
        Poly r = divmod(a, b).remainder.monic();
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

}  // namespace chepta
