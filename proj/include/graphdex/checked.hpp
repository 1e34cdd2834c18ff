#ifndef GRAPHDEX_CHECKED_HPP
#define GRAPHDEX_CHECKED_HPP

#include <cstdint>

#include "graphdex/errors.hpp"

namespace graphdex {

// Overflow-checked signed 64-bit arithmetic. Every invariant in this library
// is an exact integer; any computation that would wrap raises OverflowError
// instead.

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError();
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError();
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError();
    return r;
}

inline std::int64_t checked_pow(std::int64_t base, int exp) {
    std::int64_t r = 1;
    for (int i = 0; i < exp; ++i) r = checked_mul(r, base);
    return r;
}

}  // namespace graphdex

#endif  // GRAPHDEX_CHECKED_HPP
