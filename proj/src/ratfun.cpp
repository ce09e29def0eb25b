#include "chepta/ratfun.hpp"

#include <atomic>
#include <ostream>

#include "chepta/errors.hpp"
#include "chepta/op_counter.hpp"

namespace chepta {

namespace {

std::atomic<int> g_degree_cap{64};

}  // namespace

int RatFun::degree_cap() noexcept { return g_degree_cap.load(std::memory_order_relaxed); }

void RatFun::set_degree_cap(int cap) noexcept { g_degree_cap.store(cap, std::memory_order_relaxed); }

RatFun::RatFun(const Rational& c) : num_(c), den_(Poly{1}) {}

RatFun::RatFun(Poly p) : num_(std::move(p)), den_(Poly{1}) { check_cap(); }

RatFun RatFun::t() { return RatFun(Poly::t()); }

int RatFun::degree() const noexcept { return std::max(num_.degree(), den_.degree()); }

void RatFun::check_cap() const {
    if (degree() > degree_cap())
        throw DegreeCapExceeded("rational function degree " + std::to_string(degree()) +
                                " exceeds cap " + std::to_string(degree_cap()));
}

RatFun ratfun_normalize(Poly num, Poly den) {
    if (den.is_zero()) throw DivisionByZero();
    if (num.is_zero()) return RatFun();
    if (!den.is_constant()) {
        Poly g = poly_gcd(num, den);
        if (!g.is_one()) {
            num = divmod(num, g).quotient;
            den = divmod(den, g).quotient;
        }
    }
    if (den.leading() != 1) {
        mpq_class inv = 1 / den.leading();
        num = num.scaled(inv);
        den = den.scaled(inv);
    }
    RatFun r(RatFun::Raw{}, std::move(num), std::move(den));
    r.check_cap();
    return r;
}

RatFun RatFun::operator-() const { return RatFun(Raw{}, -num_, den_); }

RatFun& RatFun::operator+=(const RatFun& o) {
    ops::tick();
    if (den_.is_one() && o.den_.is_one()) {
        num_ = num_ + o.num_;
        check_cap();
        return *this;
    }
    if (den_ == o.den_) {
        *this = ratfun_normalize(num_ + o.num_, den_);
        return *this;
    }
    *this = ratfun_normalize(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    return *this;
}

RatFun& RatFun::operator-=(const RatFun& o) { return *this += -o; }

RatFun& RatFun::operator*=(const RatFun& o) {
    ops::tick();
    if (den_.is_one() && o.den_.is_one()) {
        num_ = num_ * o.num_;
        check_cap();
        return *this;
    }
    *this = ratfun_normalize(num_ * o.num_, den_ * o.den_);
    return *this;
}

RatFun& RatFun::operator/=(const RatFun& o) {
    if (o.is_zero()) throw DivisionByZero();
    ops::tick();
    *this = ratfun_normalize(num_ * o.den_, den_ * o.num_);
    return *this;
}

std::string RatFun::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

Rational eval_at_zero(const RatFun& x) {
    Rational d = x.den().constant_term();
    if (d.is_zero()) throw ContractViolation("pole at t=0");
    return x.num().constant_term() / d;
}

std::ostream& operator<<(std::ostream& os, const RatFun& x) { return os << x.to_string(); }

}  // namespace chepta
