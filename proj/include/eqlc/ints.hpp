#pragma once

#include <gmpxx.h>

namespace eqlc {

// Exact arithmetic everywhere: n! for n near 40 overflows 64 bits.
using Int = mpz_class;
using Rat = mpq_class;

inline Int factorial(int n) {
    Int r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

inline Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

}  // namespace eqlc
