#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace homcoh {

// All dimensions, multiplicities, Euler numbers and matrix entries are exact
// integers (GMP). Weight coordinates stay in int64: they are small by
// construction (bounded boxes, affine families evaluated at small offsets).
using Int = mpz_class;

inline Int binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

// Exact division; throws if the division leaves a remainder.
inline Int exact_div(const Int& a, const Int& b) {
    if (b == 0) throw std::invalid_argument("exact_div by zero");
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (r != 0) throw std::logic_error("exact_div: not divisible");
    return q;
}

inline std::string to_string(const Int& a) { return a.get_str(); }

// Rank of an integer matrix over Q, fraction-free (Bareiss).
inline long matrix_rank(std::vector<std::vector<Int>> m) {
    if (m.empty()) return 0;
    const size_t rows = m.size(), cols = m[0].size();
    long rank = 0;
    size_t pr = 0;
    Int prev = 1;
    for (size_t pc = 0; pc < cols && pr < rows; ++pc) {
        size_t sel = pr;
        while (sel < rows && m[sel][pc] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[pr], m[sel]);
        for (size_t i = pr + 1; i < rows; ++i) {
            for (size_t j = pc + 1; j < cols; ++j)
                m[i][j] = exact_div(m[pr][pc] * m[i][j] - m[i][pc] * m[pr][j], prev);
            m[i][pc] = 0;
        }
        prev = m[pr][pc];
        ++pr;
        ++rank;
    }
    return rank;
}

}  // namespace homcoh
