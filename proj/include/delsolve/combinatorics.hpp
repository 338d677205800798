#pragma once

#include "delsolve/scalar.hpp"

namespace delsolve {

/// Binomial coefficient with the vanishing convention used throughout the
/// delayed sine/cosine sums: binomial(a, b) = a!/(b!(a-b)!) for 0 <= b <= a
/// and 0 whenever b < 0, b > a, or a < 0. The a < 0 case is what makes the
/// trig series vanish automatically at negative arguments.
inline BigInt binomial(long a, long b) {
    if (a < 0 || b < 0 || b > a) return BigInt(0);
    BigInt result;
    mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    return result;
}

/// Unit step: 1 for t >= 0, else 0.
constexpr int unit_step(long t) { return t >= 0 ? 1 : 0; }

/// Kronecker delta: 1 iff t == l.
constexpr int kronecker_delta(long l, long t) { return t == l ? 1 : 0; }

}  // namespace delsolve
