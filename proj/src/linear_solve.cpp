#include "chepta/linear_solve.hpp"

#include <algorithm>
#include <cmath>
#include <future>

namespace chepta {

namespace {

template <class S>
std::vector<S> times(const DenseMatrix<S>& m, const std::vector<S>& r) {
    return m * r;
}

void check_length(int n, std::size_t len) {
    if (static_cast<std::size_t>(n) != len)
        throw InvalidInput("rhs has length " + std::to_string(len) + ", expected " + std::to_string(n));
}

}  // namespace

SolveReport<Rational> solve_via_inverse(const ExactMatrix& h, const std::vector<Rational>& r,
                                        const InvertOptions& opt) {
    check_length(h.order(), r.size());
    auto inv = invert(h, opt);
    SolveReport<Rational> rep;
    rep.x = times(inv.inverse, r);
    rep.det = inv.det;
    rep.method = SolveMethod::via_inverse;
    rep.pivot_overrides = static_cast<int>(inv.pivot_overrides.size());
    rep.c_substitutions = static_cast<int>(inv.c_substitutions.size());
    return rep;
}

SolveReport<Rational> solve_via_lu(const ExactFactorization& fac, const ExactMatrix& h,
                                   const std::vector<Rational>& r) {
    check_length(h.order(), r.size());
    auto det = determinant_from(fac);
    if (det.singular) throw SingularMatrix();

    SolveReport<Rational> rep;
    rep.det = det.value;
    rep.method = SolveMethod::via_lu;
    rep.pivot_overrides = det.pivot_overrides;
    if (const auto* sym = std::get_if<FactorData<RatFun>>(&fac)) {
        std::vector<RatFun> rt(r.begin(), r.end());
        for (const auto& xi : lu_solve(*sym, std::move(rt))) rep.x.push_back(eval_at_zero(xi));
    } else {
        rep.x = lu_solve(std::get<FactorData<Rational>>(fac), r);
    }
    return rep;
}

SolveReport<Rational> solve_via_lu(const ExactMatrix& h, const std::vector<Rational>& r) {
    return solve_via_lu(factorize(h), h, r);
}

SolveReport<Real> solve_via_lu(const FloatMatrix& h, const std::vector<Real>& r, const FloatOptions& opt) {
    check_length(h.order(), r.size());
    auto fd = factorize(h, opt);
    SolveReport<Real> rep;
    rep.backend = Backend::float64;
    rep.det = Real(1);
    for (int i = 1; i <= fd.n; ++i) rep.det *= fd.pivot[i];
    rep.x = lu_solve(fd, r);
    return rep;
}

SolveReport<Real> solve_via_inverse(const FloatMatrix& h, const std::vector<Real>& r,
                                    const FloatInvertOptions& opt) {
    check_length(h.order(), r.size());
    auto inv = invert(h, opt);
    SolveReport<Real> rep;
    rep.backend = Backend::float64;
    rep.method = SolveMethod::via_inverse;
    rep.det = inv.det;
    rep.x = times(inv.inverse, r);
    return rep;
}

std::vector<SolveReport<Rational>> solve_many(const ExactMatrix& h,
                                              const std::vector<std::vector<Rational>>& rhs,
                                              bool parallel) {
    const auto fac = factorize(h);
    std::vector<SolveReport<Rational>> out;
    out.reserve(rhs.size());
    if (!parallel) {
        for (const auto& r : rhs) out.push_back(solve_via_lu(fac, h, r));
        return out;
    }
    std::vector<std::future<SolveReport<Rational>>> jobs;
    jobs.reserve(rhs.size());
    for (const auto& r : rhs)
        jobs.push_back(std::async(std::launch::async, [&fac, &h, &r] { return solve_via_lu(fac, h, r); }));
    for (auto& j : jobs) out.push_back(j.get());
    return out;
}

bool residual_is_zero(const ExactMatrix& h, const std::vector<Rational>& x, const std::vector<Rational>& r) {
    return multiply(h, x) == r;
}

double relative_residual(const FloatMatrix& h, const std::vector<Real>& x, const std::vector<Real>& r) {
    const auto hx = multiply(h, x);
    double res = 0.0, xn = 0.0, rn = 0.0, hn = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        res = std::max(res, std::fabs(hx[i].v - r[i].v));
        xn = std::max(xn, std::fabs(x[i].v));
        rn = std::max(rn, std::fabs(r[i].v));
    }
    for (int i = 1; i <= h.order(); ++i) {
        double row = 0.0;
        for (Band b : kAllBands) row += std::fabs(h.bands().at(b, i).v);
        hn = std::max(hn, row);
    }
    const double denom = hn * xn + rn;
    return denom == 0.0 ? res : res / denom;
}

}  // namespace chepta
