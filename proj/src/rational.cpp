#include "chepta/rational.hpp"

#include <cctype>
#include <ostream>

#include "chepta/errors.hpp"

namespace chepta {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

[[noreturn]] void bad(std::string_view text) {
    throw InvalidInput("malformed scalar \"" + std::string(text) + "\"");
}

}  // namespace

Rational::Rational(long num, long den) {
    if (den == 0) throw DivisionByZero();
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZero();
    ops::tick();
    q_ /= o.q_;
    return *this;
}

Rational Rational::parse(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.empty()) bad(text);

    bool negative = false;
    std::string_view body = s;
    if (body.front() == '-' || body.front() == '+') {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }

    mpq_class q;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        auto p = body.substr(0, slash);
        auto d = body.substr(slash + 1);
        if (!all_digits(p) || !all_digits(d)) bad(text);
        mpz_class den(std::string(d), 10);
        if (den == 0) throw InvalidInput("zero denominator in \"" + std::string(text) + "\"");
        q = mpq_class(mpz_class(std::string(p), 10), den);
    } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
        auto whole = body.substr(0, dot);
        auto frac = body.substr(dot + 1);
        if (whole.empty() && frac.empty()) bad(text);
        if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac))) bad(text);
        std::string digits = std::string(whole) + std::string(frac);
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
        q = mpq_class(mpz_class(digits, 10), scale);
    } else {
        if (!all_digits(body)) bad(text);
        q = mpq_class(mpz_class(std::string(body), 10));
    }
    q.canonicalize();
    if (negative) q = -q;
    return Rational(std::move(q));
}

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.to_string(); }

}  // namespace chepta
