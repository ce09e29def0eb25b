#pragma once

#include <cstdint>

namespace chepta::ops {

// Field operations performed by the calling thread. Every arithmetic operator
// of Rational, RatFun and Real bumps it by one.
inline thread_local std::uint64_t field_op_count = 0;

inline void tick() noexcept { ++field_op_count; }

/// Counts field operations executed on this thread during its lifetime.
class Tally {
public:
    Tally() noexcept : start_(field_op_count) {}
    std::uint64_t count() const noexcept { return field_op_count - start_; }

private:
    std::uint64_t start_;
};

}  // namespace chepta::ops
