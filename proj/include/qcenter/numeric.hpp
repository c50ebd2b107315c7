#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace qcenter {

using Rat = mpq_class;
using Int = mpz_class;

inline Int binomial(long n, long k) {
    if (k == 0) return 1;  // including n < 0, as in the multiset count C(d+c-1, c)
    if (k < 0 || n < 0 || k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

inline std::string rat_to_string(const Rat& q) { return q.get_str(); }

inline Rat rat_from_string(const std::string& s) {
    Rat q(s);
    q.canonicalize();
    return q;
}

}  // namespace qcenter
