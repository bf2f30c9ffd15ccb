#pragma once

#include <cstdint>
#include <span>

#include "ocdna/algebra.hpp"

namespace ocdna {

/// sum of (i+1) * x[i].
std::int64_t vt(std::span<const int> x);
std::int64_t digit_sum(std::span<const int> x);

/// Floor-safe residue in [0, mod).
std::int64_t mod_floor(std::int64_t v, std::int64_t mod);

/// The binary x of length |y|+1 with y in D_1(x) and VT(x) = a (mod N).
/// Throws DecodeError unless exactly one candidate exists.
Digits vt_decode_one_deletion(std::span<const int> y, std::int64_t a, std::int64_t N);

/// psi(x)[i] = x[i] - x[i+1] mod q, last symbol kept.
Digits psi(std::span<const int> x, int q);
Digits psi_inverse(std::span<const int> z, int q);
/// VT(psi(x)) mod q*|x|.
std::int64_t psi_syndrome(std::span<const int> x, int q);

/// The q-ary x of length n with y in D_1(x) and VT(psi(x)) = a (mod qn).
Digits qary_decode_one_deletion(std::span<const int> y, std::int64_t a, int q, int n);

// ---- single limited-magnitude error code C(n; Q, a) ----------------------

struct LmeLayout {
    int n = 0;
    int Q = 0;
    int m = 0;                  ///< ceil(log_Q n)
    std::vector<int> check_pos; ///< 0-based positions Q^j - 1, j < m
    std::vector<int> info_pos;  ///< everything outside check_pos and n-1
};

/// Throws std::invalid_argument unless Q >= 3 and n >= 2.
LmeLayout lme_layout(int n, int Q);
int lme_message_length(int n, int Q);
Digits lme_encode(std::span<const int> message, std::int64_t a, int Q, int n);
/// Corrects at most one +-1 change (no wrap-around).
Digits lme_decode(std::span<const int> y, std::int64_t a, int Q);
Digits lme_extract(std::span<const int> c, int Q);
bool lme_contains(std::span<const int> c, std::int64_t a, int Q);

/// Recovers x from y (at most one substitution) given VT(x) mod 2n(q-1)
/// and Sum(x) mod q.
Digits qary_decode_one_substitution(std::span<const int> y, std::int64_t vt_mod,
                                    std::int64_t sum_mod, int q);

} // namespace ocdna
