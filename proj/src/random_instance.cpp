#include "chepta/random_instance.hpp"

#include <random>
#include <set>

namespace chepta {

Profile parse_profile(std::string_view name) {
    if (name == "general") return Profile::general;
    if (name == "diagonally-dominant") return Profile::diagonally_dominant;
    if (name == "zero-pivot-prone") return Profile::zero_pivot_prone;
    if (name == "zero-C" || name == "zero-c") return Profile::zero_c;
    throw InvalidInput("unknown profile \"" + std::string(name) + "\"");
}

std::string_view profile_name(Profile p) noexcept {
    switch (p) {
        case Profile::general: return "general";
        case Profile::diagonally_dominant: return "diagonally-dominant";
        case Profile::zero_pivot_prone: return "zero-pivot-prone";
        case Profile::zero_c: return "zero-C";
    }
    return "general";
}

ExactMatrix random_instance(int n, std::uint64_t seed, Profile profile) {
    if (n < kMinOrder)
        throw InvalidInput("order too small: n = " + std::to_string(n) + ", need n >= 8");

    // mt19937_64's output sequence is fixed by the standard; the modulo mapping
    // keeps instances identical across standard library implementations.
    std::mt19937_64 rng(seed ^ (static_cast<std::uint64_t>(profile) << 56) ^
                        (static_cast<std::uint64_t>(n) << 40));
    auto uniform = [&](long lo, long hi) {
        return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
    };

    const bool dominant = profile == Profile::diagonally_dominant;
    auto bands = HeptaBands<Rational>::zeros(n);
    for (Band b : kAllBands) {
        for (int i = 1; i <= n; ++i) {
            if (forced_zero(b, i, n)) continue;
            if (b == Band::diag && dominant) {
                long mag = uniform(7, 9);
                bands.at(b, i) = Rational(uniform(0, 1) ? mag : -mag);
            } else {
                bands.at(b, i) = dominant ? Rational(uniform(0, 1) ? 1 : -1) : Rational(uniform(-9, 9));
            }
        }
    }

    if (profile == Profile::zero_pivot_prone) bands.at(Band::diag, 1) = Rational(0);
    if (profile == Profile::zero_c) {
        long count = uniform(1, 3);
        for (long c = 0; c < count; ++c) bands.at(Band::sup3, static_cast<int>(uniform(1, n - 5))) = Rational(0);
    }
    return ExactMatrix::build(n, std::move(bands));
}

}  // namespace chepta
