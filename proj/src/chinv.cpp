#include "chepta/chinv.hpp"

#include <algorithm>

namespace chepta {

namespace {

DenseMatrix<Rational> evaluate_at_zero(const DenseMatrix<RatFun>& s) {
    return s.map([](const RatFun& x) { return eval_at_zero(x); });
}

// Runs the symbolic pipeline on an already perturbed H(t).
InverseResult<Rational> invert_symbolic(const CyclicHeptaMatrix<RatFun>& ht, bool parallel) {
    auto fd = factorize(ht);
    auto det = determinant_from(fd);
    if (det.singular) throw SingularMatrix();
    const auto hp = with_pivot_perturbation(ht, fd.pivot_overrides);
    InverseResult<Rational> r;
    r.inverse = evaluate_at_zero(chinv(hp, fd, parallel));
    r.det = det.value;
    r.pivot_overrides = fd.pivot_overrides;
    return r;
}

}  // namespace

std::vector<int> zero_c_positions(const ExactMatrix& h) {
    std::vector<int> out;
    for (int i = 1; i <= h.order() - 5; ++i)
        if (h.band(Band::sup3, i).is_zero()) out.push_back(i);
    return out;
}

InverseResult<Rational> invert(const ExactMatrix& h, const InvertOptions& opt) {
    const int n = h.order();
    const auto c_subs = zero_c_positions(h);
    std::vector<int> b_subs;
    if (opt.apply_b_substitution)
        for (int i = 6; i <= n; ++i)
            if (h.band(Band::sub2, i).is_zero()) b_subs.push_back(i);

    if (!c_subs.empty() || !b_subs.empty()) {
        // C_i is a genuine entry of H, so the whole computation, determinant
        // included, runs on H(t).
        auto bands = h.map(lift).bands();
        for (int i : c_subs) bands.at(Band::sup3, i) = RatFun::t();
        for (int i : b_subs) bands.at(Band::sub2, i) = RatFun::t();
        auto r = invert_symbolic(CyclicHeptaMatrix<RatFun>::build(n, std::move(bands)), opt.parallel_seeds);
        r.c_substitutions = c_subs;
        r.b_substitutions = b_subs;
        return r;
    }

    auto fac = factorize(h);
    if (std::holds_alternative<FactorData<RatFun>>(fac)) {
        const auto& fd = std::get<FactorData<RatFun>>(fac);
        auto det = determinant_from(fd);
        if (det.singular) throw SingularMatrix();
        const auto hp = with_pivot_perturbation(h.map(lift), fd.pivot_overrides);
        InverseResult<Rational> r;
        r.inverse = evaluate_at_zero(chinv(hp, fd, opt.parallel_seeds));
        r.det = det.value;
        r.pivot_overrides = fd.pivot_overrides;
        return r;
    }

    const auto& fd = std::get<FactorData<Rational>>(fac);
    InverseResult<Rational> r;
    r.det = determinant_from(fac).value;
    r.inverse = chinv(h, fd, opt.parallel_seeds);
    return r;
}

InverseResult<Real> invert(const FloatMatrix& h, const FloatInvertOptions& opt) {
    const auto fd = factorize(h, opt.factor);
    InverseResult<Real> r;
    r.det = Real(1);
    for (int i = 1; i <= fd.n; ++i) r.det *= fd.pivot[i];

    if (opt.route == FloatInverseRoute::column_recursion) {
        r.inverse = chinv(h, fd, opt.parallel_seeds);
        return r;
    }

    const int n = fd.n;
    const auto seeds = seed_columns(fd, opt.parallel_seeds);
    DenseMatrix<Real> s(n);
    constexpr int kBlock = 16;
    for (int j0 = 1; j0 <= n - 5; j0 += kBlock) lu_solve_unit_block(fd, s, j0, std::min(n - 5, j0 + kBlock - 1));
    for (int j = n - 4; j <= n; ++j) {
        const auto& c = seeds.column(j);
        for (int i = 1; i <= n; ++i) s(i, j) = c[static_cast<std::size_t>(i - 1)];
    }
    r.inverse = std::move(s);
    return r;
}

}  // namespace chepta
