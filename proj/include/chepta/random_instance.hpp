#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "chepta/hepta_matrix.hpp"

namespace chepta {

enum class Profile {
    general,              ///< every free band entry uniform in [-9, 9]
    diagonally_dominant,  ///< off-diagonal band entries +-1, |d_i| in [7, 9]
    zero_pivot_prone,     ///< general with d_1 = 0, so the first pivot vanishes
    zero_c,               ///< general with one to three C_i = 0, i <= n-5
};

Profile parse_profile(std::string_view name);
std::string_view profile_name(Profile p) noexcept;

/// Deterministic integer test matrix for (n, seed, profile).
ExactMatrix random_instance(int n, std::uint64_t seed, Profile profile);

}  // namespace chepta
