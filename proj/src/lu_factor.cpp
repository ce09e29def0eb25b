#include "chepta/lu_factor.hpp"

#include <algorithm>
#include <cmath>

namespace chepta {

namespace {

// Replaces an identically zero pivot by t and records the row.
auto symbolic_guard(FactorData<RatFun>& fd) {
    return [&fd](int i, RatFun& pivot) {
        if (pivot.is_zero()) {
            pivot = RatFun::t();
            fd.pivot_overrides.push_back(i);
        }
        return true;
    };
}

double largest_entry(const FloatMatrix& h) {
    double scale = 0.0;
    for (Band b : kAllBands)
        for (const auto& x : h.bands()[b]) scale = std::max(scale, std::fabs(x.v));
    return scale;
}

template <class T>
T product_of_pivots(const FactorData<T>& fd) {
    T p(1);
    for (int i = 1; i <= fd.n; ++i) p *= fd.pivot[i];
    return p;
}

}  // namespace

ExactFactorization factorize(const ExactMatrix& h) {
    auto fd = FactorData<Rational>::sized(h.order());
    detail::BorderedLu<Rational> lu(h, fd);
    const int stop = lu.run(1, [](int, const Rational& pivot) { return !pivot.is_zero(); });
    if (stop == 0) return fd;

    // First zero pivot: lift everything computed so far and resume symbolically
    // from the point of the override.
    const auto hs = h.map(lift);
    auto sym = fd.map(lift);
    sym.pivot[stop] = RatFun::t();
    sym.pivot_overrides.push_back(stop);
    detail::BorderedLu<RatFun> slu(hs, sym);
    slu.after_pivot(stop);
    slu.run(stop + 1, symbolic_guard(sym));
    return sym;
}

FactorData<RatFun> factorize(const CyclicHeptaMatrix<RatFun>& h) {
    auto fd = FactorData<RatFun>::sized(h.order());
    detail::BorderedLu<RatFun> lu(h, fd);
    lu.run(1, symbolic_guard(fd));
    return fd;
}

FactorData<Real> factorize(const FloatMatrix& h, const FloatOptions& opt) {
    const double threshold = opt.tol * std::max(1.0, largest_entry(h));
    auto fd = FactorData<Real>::sized(h.order());
    detail::BorderedLu<Real> lu(h, fd);
    lu.run(1, [threshold](int i, const Real& pivot) {
        if (!(std::fabs(pivot.v) >= threshold)) throw NearSingularPivot(i);
        return true;
    });
    return fd;
}

FactorData<RatFun> as_symbolic(const ExactFactorization& fac) {
    if (const auto* sym = std::get_if<FactorData<RatFun>>(&fac)) return *sym;
    return std::get<FactorData<Rational>>(fac).map(lift);
}

const std::vector<int>& pivot_overrides(const ExactFactorization& fac) {
    return std::visit([](const auto& fd) -> const std::vector<int>& { return fd.pivot_overrides; }, fac);
}

CyclicHeptaMatrix<RatFun> with_pivot_perturbation(const CyclicHeptaMatrix<RatFun>& h,
                                                  const std::vector<int>& overrides) {
    if (overrides.empty()) return h;
    auto bands = h.bands();
    for (int i : overrides) bands.at(Band::diag, i) += RatFun::t();
    return CyclicHeptaMatrix<RatFun>::build(h.order(), std::move(bands));
}

DetResult<Rational> determinant_from(const FactorData<RatFun>& fd) {
    DetResult<Rational> r;
    r.value = eval_at_zero(product_of_pivots(fd));
    r.pivot_overrides = static_cast<int>(fd.pivot_overrides.size());
    r.singular = r.value.is_zero();
    return r;
}

DetResult<Rational> determinant_from(const ExactFactorization& fac) {
    if (const auto* sym = std::get_if<FactorData<RatFun>>(&fac)) return determinant_from(*sym);
    DetResult<Rational> r;
    r.value = product_of_pivots(std::get<FactorData<Rational>>(fac));
    r.singular = r.value.is_zero();
    return r;
}

DetResult<Rational> determinant(const ExactMatrix& h) { return determinant_from(factorize(h)); }

DetResult<Rational> determinant(const CyclicHeptaMatrix<RatFun>& h) {
    return determinant_from(factorize(h));
}

DetResult<Real> determinant(const FloatMatrix& h, const FloatOptions& opt) {
    DetResult<Real> r;
    r.value = product_of_pivots(factorize(h, opt));
    return r;
}

}  // namespace chepta
