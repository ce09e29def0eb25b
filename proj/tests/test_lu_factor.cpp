#include "doctest.h"

#include "chepta/dense_oracle.hpp"
#include "chepta/errors.hpp"
#include "chepta/lu_factor.hpp"
#include "chepta/op_counter.hpp"
#include "chepta/random_instance.hpp"
#include "support.hpp"

using namespace chepta;

namespace {

constexpr std::array<Profile, 4> kProfiles = {Profile::general, Profile::diagonally_dominant,
                                              Profile::zero_pivot_prone, Profile::zero_c};

ExactMatrix identity(int n) {
    auto b = HeptaBands<Rational>::zeros(n);
    for (auto& x : b[Band::diag]) x = Rational(1);
    return ExactMatrix::build(n, b);
}

template <class T>
bool all_zero(const OffsetVector<T>& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

// L U against H + t sum_{overrides} E_ii over rational functions.
bool lu_identity_holds(const ExactMatrix& h) {
    auto fac = factorize(h);
    auto sym = as_symbolic(fac);
    auto [L, U] = materialize_lu(sym);
    DenseMatrix<RatFun> want = h.to_dense().map([](const Rational& x) { return lift(x); });
    for (int i : sym.pivot_overrides) want(i, i) += RatFun::t();
    return L * U == want;
}

}  // namespace

TEST_CASE("identity factors trivially") {
    auto fac = factorize(identity(10));
    REQUIRE(std::holds_alternative<FactorData<Rational>>(fac));
    const auto& f = std::get<FactorData<Rational>>(fac);
    for (const auto& a : f.pivot) CHECK(a == Rational(1));
    CHECK(all_zero(f.lower1));
    CHECK(all_zero(f.lower2));
    CHECK(all_zero(f.lower3));
    CHECK(all_zero(f.upper1));
    CHECK(all_zero(f.upper2));
    CHECK(all_zero(f.row_penult));
    CHECK(all_zero(f.row_last));
    CHECK(all_zero(f.col_penult));
    CHECK(all_zero(f.col_last));
    CHECK(f.pivot_overrides.empty());

    auto [L, U] = materialize_lu(f);
    CHECK(L == DenseMatrix<Rational>::identity(10));
    CHECK(U == DenseMatrix<Rational>::identity(10));
}

TEST_CASE("first-step values of the example") {
    auto fac = factorize(testing::example_matrix());
    REQUIRE(std::holds_alternative<FactorData<Rational>>(fac));
    const auto& f = std::get<FactorData<Rational>>(fac);
    CHECK(f.pivot[1] == Rational(1));
    CHECK(f.upper1[1] == Rational(-1));
    CHECK(f.upper2[1] == Rational(1));
    CHECK(f.col_last[1] == Rational(-1));
    CHECK(f.col_penult[1] == Rational(2));
    CHECK(f.row_penult[1] == Rational(3));
    CHECK(f.row_last[1] == Rational(2));
    CHECK(f.lower1[2] == Rational(1));
    CHECK(f.pivot_overrides.empty());
}

TEST_CASE("vectors live on their index ranges") {
    const int n = 12;
    auto fac = factorize(random_instance(n, 9, Profile::general));
    const auto& f = std::get<FactorData<Rational>>(fac);
    CHECK(f.pivot.lo() == 1);
    CHECK(f.pivot.hi() == n);
    CHECK(f.lower1.lo() == 2);
    CHECK(f.lower1.hi() == n - 2);
    CHECK(f.lower2.lo() == 3);
    CHECK(f.lower2.hi() == n - 2);
    CHECK(f.upper1.hi() == n - 3);
    CHECK(f.upper2.hi() == n - 4);
    CHECK(f.upper3.hi() == n - 5);
    CHECK(f.row_penult.hi() == n - 2);
    CHECK(f.row_last.hi() == n - 1);
    CHECK(f.col_penult.hi() == n - 2);
    CHECK(f.col_last.hi() == n - 1);
    CHECK_FALSE(f.lower1.contains(n - 1));
    CHECK_THROWS_AS(f.upper1.at(n - 2), InvalidInput);
}

TEST_CASE("zero first pivot is replaced by t") {
    ExactMatrix h = random_instance(10, 5, Profile::zero_pivot_prone);
    auto fac = factorize(h);
    REQUIRE(std::holds_alternative<FactorData<RatFun>>(fac));
    const auto& f = std::get<FactorData<RatFun>>(fac);
    CHECK(f.pivot[1] == RatFun::t());
    CHECK(f.pivot_overrides == std::vector<int>{1});
    CHECK(pivot_overrides(fac) == std::vector<int>{1});
}

TEST_CASE("lazy promotion agrees with a fully symbolic factorization") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        ExactMatrix h = random_instance(8 + static_cast<int>(seed % 9), seed, kProfiles[seed % 4]);
        auto lazy = as_symbolic(factorize(h));
        auto full = factorize(h.map([](const Rational& x) { return lift(x); }));
        CHECK(lazy == full);
    }
}

TEST_CASE("LU product identity") {
    CHECK(lu_identity_holds(testing::example_matrix()));
    CHECK(lu_identity_holds(testing::singular_example()));
    for (std::uint64_t seed = 0; seed < 60; ++seed)
        for (Profile p : kProfiles) CHECK(lu_identity_holds(random_instance(8 + static_cast<int>(seed % 13), seed, p)));
}

TEST_CASE("no overrides means L U = H over the rationals") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        ExactMatrix h = random_instance(9 + static_cast<int>(seed % 8), seed, Profile::general);
        auto fac = factorize(h);
        if (!std::holds_alternative<FactorData<Rational>>(fac)) continue;
        auto [L, U] = materialize_lu(std::get<FactorData<Rational>>(fac));
        CHECK(L * U == h.to_dense());
    }
}

TEST_CASE("stored pivots are never zero") {
    for (std::uint64_t seed = 0; seed < 40; ++seed)
        for (Profile p : kProfiles) {
            auto f = as_symbolic(factorize(random_instance(8 + static_cast<int>(seed % 13), seed, p)));
            for (const auto& a : f.pivot) CHECK_FALSE(a.is_zero());
        }
}

TEST_CASE("factorize is deterministic") {
    ExactMatrix h = random_instance(15, 77, Profile::zero_c);
    CHECK(factorize(h) == factorize(h));
}

TEST_CASE("determinant") {
    auto one = determinant(identity(10));
    CHECK(one.value == Rational(1));
    CHECK_FALSE(one.singular);

    ExactMatrix ex = testing::example_matrix();
    auto d = determinant(ex);
    CHECK(d.value == oracle::dense_det(ex.to_dense()));
    CHECK(d.value == Rational(-32715));
    CHECK_FALSE(d.singular);

    auto s = determinant(testing::singular_example());
    CHECK(s.value.is_zero());
    CHECK(s.singular);
}

TEST_CASE("determinant matches the dense oracle on random instances") {
    for (std::uint64_t seed = 0; seed < 50; ++seed)
        for (Profile p : kProfiles) {
            ExactMatrix h = random_instance(8 + static_cast<int>(seed % 13), seed * 31 + 1, p);
            CHECK(determinant(h).value == oracle::dense_det(h.to_dense()));
        }
}

TEST_CASE("determinant of a perturbed matrix keeps the shared t") {
    ExactMatrix h = random_instance(10, 3, Profile::zero_pivot_prone);
    auto sym = h.map([](const Rational& x) { return lift(x); });
    CHECK(determinant(sym).value == determinant(h).value);
}

TEST_CASE("float backend") {
    ExactMatrix h = random_instance(30, 2, Profile::diagonally_dominant);
    FloatMatrix hf = h.map([](const Rational& x) { return to_real(x); });
    double exact = determinant(h).value.to_double();
    double approx = determinant(hf).value.v;
    CHECK(std::abs(approx - exact) <= 1e-10 * std::abs(exact));

    ExactMatrix zp = random_instance(10, 2, Profile::zero_pivot_prone);
    FloatMatrix zpf = zp.map([](const Rational& x) { return to_real(x); });
    CHECK_THROWS_WITH_AS(factorize(zpf), "near-singular pivot at 1, use exact backend", NearSingularPivot);

    // A tiny first pivot is below tolerance relative to the largest entry.
    FloatMatrix tiny = zpf.with(Band::diag, 1, Real{1e-13});
    CHECK_THROWS_AS(factorize(tiny), NearSingularPivot);
    CHECK_NOTHROW(factorize(tiny, FloatOptions{1e-16}));
}

TEST_CASE("determinant cost grows linearly") {
    auto ops = [](int n) {
        ExactMatrix h = random_instance(n, 1, Profile::diagonally_dominant);
        ops::Tally tally;
        determinant(h);
        return tally.count();
    };
    const auto small = ops(500), large = ops(1000);
    CHECK(large <= small * 5 / 2);
    CHECK(large >= small);
}
