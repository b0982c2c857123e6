// Mod-2 arithmetic helpers shared by both operation algebras.
#pragma once

#include <cstdint>

namespace qloop {

// Binomial coefficient mod 2 via Lucas: odd iff the bits of b are a subset of
// the bits of a. Zero for negative arguments or b > a.
inline bool binom2(long long a, long long b) {
    if (b < 0 || a < 0 || b > a) return false;
    return (static_cast<unsigned long long>(a) & static_cast<unsigned long long>(b)) ==
           static_cast<unsigned long long>(b);
}

inline bool is_pow2(long long v) { return v > 0 && (v & (v - 1)) == 0; }

}  // namespace qloop
