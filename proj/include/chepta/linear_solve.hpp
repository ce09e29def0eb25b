#pragma once

#include <vector>

#include "chepta/chinv.hpp"
#include "chepta/hepta_matrix.hpp"
#include "chepta/lu_factor.hpp"

namespace chepta {

enum class Backend { exact, float64 };
enum class SolveMethod { via_inverse, via_lu };

template <class S>
struct SolveReport {
    std::vector<S> x;
    S det{};
    SolveMethod method = SolveMethod::via_lu;
    Backend backend = Backend::exact;
    int pivot_overrides = 0;
    int c_substitutions = 0;
};

/// x = S r with S the exact inverse.
SolveReport<Rational> solve_via_inverse(const ExactMatrix& h, const std::vector<Rational>& r,
                                        const InvertOptions& opt = {});

/// Forward and back substitution through the bordered factors; evaluated at
/// t = 0 when pivot overrides fired. Throws SingularMatrix.
SolveReport<Rational> solve_via_lu(const ExactFactorization& fac, const ExactMatrix& h,
                                   const std::vector<Rational>& r);
SolveReport<Rational> solve_via_lu(const ExactMatrix& h, const std::vector<Rational>& r);

SolveReport<Real> solve_via_lu(const FloatMatrix& h, const std::vector<Real>& r,
                               const FloatOptions& opt = {});
SolveReport<Real> solve_via_inverse(const FloatMatrix& h, const std::vector<Real>& r,
                                    const FloatInvertOptions& opt = {});

/// Independent right-hand sides sharing one factorization, optionally on
/// separate threads.
std::vector<SolveReport<Rational>> solve_many(const ExactMatrix& h,
                                              const std::vector<std::vector<Rational>>& rhs,
                                              bool parallel = false);

bool residual_is_zero(const ExactMatrix& h, const std::vector<Rational>& x,
                      const std::vector<Rational>& r);

/// ||H x - r||_inf / (||H||_inf ||x||_inf + ||r||_inf).
double relative_residual(const FloatMatrix& h, const std::vector<Real>& x, const std::vector<Real>& r);

}  // namespace chepta
