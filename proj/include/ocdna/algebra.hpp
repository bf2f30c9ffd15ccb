#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ocdna {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Digits = std::vector<int>;

// ---- integers -------------------------------------------------------------

/// C(n, r); zero when r < 0 or r > n or n < 0. Throws std::overflow_error
/// when the result does not fit 64 bits.
std::uint64_t binom_u64(std::int64_t n, std::int64_t r);
BigInt binom(std::int64_t n, std::int64_t r);
BigInt big_pow(const BigInt& base, unsigned exponent);

bool is_prime(std::uint64_t n);
/// Smallest prime p with m < p < 2m.
std::uint64_t next_prime_bertrand(std::uint64_t m);
/// Smallest prime p >= m.
std::uint64_t next_prime_at_least(std::uint64_t m);

/// Smallest L with base^L >= bound (so bound == 1 gives 0).
int ceil_log(std::uint64_t base, const BigInt& bound);

/// Least-significant-digit-first base expansion of value, padded to
/// ceil_log(base, bound) digits. Requires value < bound.
Digits expand_base(std::uint64_t value, std::uint64_t base, std::uint64_t bound);
BigInt compose_base(std::span<const int> digits, std::uint64_t base);

// ---- constant-weight enumeration -----------------------------------------

/// Lexicographic index (1-based, 100 < 010 < 001) of a weight-w binary
/// sequence; rejects a weight mismatch.
BigInt cw_rank(std::span<const int> a, int w);
/// Inverse of cw_rank by greedy descent.
Digits cw_unrank(const BigInt& index, int n, int w);

// ---- prime fields ---------------------------------------------------------

class PrimeField {
public:
    explicit PrimeField(std::uint64_t p);

    std::uint64_t p() const { return p_; }
    std::uint64_t reduce(std::int64_t v) const;
    std::uint64_t reduce(const BigInt& v) const;
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
    std::uint64_t inv(std::uint64_t a) const;

private:
    std::uint64_t p_;
};

using ModMatrix = std::vector<std::vector<std::uint64_t>>;

std::uint64_t det_mod_p(ModMatrix a, const PrimeField& f);
/// Gaussian elimination; throws SingularMatrixError when det A == 0.
std::vector<std::uint64_t> solve_mod_p(ModMatrix a, std::vector<std::uint64_t> b,
                                       const PrimeField& f);

// ---- tableaux and the shaped Vandermonde determinant ---------------------

struct Partition {
    std::vector<int> parts; ///< nonincreasing, nonnegative

    Partition() = default;
    explicit Partition(std::vector<int> p);
    int size() const { return static_cast<int>(parts.size()); }
};

using Tableau = std::vector<std::vector<int>>;

/// Visits every semistandard tableau of shape lambda with entries in
/// [1, lambda.size()].
void for_each_sst(const Partition& lambda, const std::function<void(const Tableau&)>& visit);
std::vector<Tableau> enumerate_ssts(const Partition& lambda);

BigInt schur_eval(const Partition& lambda, std::span<const BigInt> x);
std::uint64_t schur_eval(const Partition& lambda, std::span<const std::uint64_t> x,
                         const PrimeField& f);

/// det of the matrix whose r-th row (0-based) is x^(lambda_{s-r} + r).
std::uint64_t vandermonde_shape_det(const Partition& lambda, std::span<const std::uint64_t> x,
                                    const PrimeField& f);

/// Prime threshold above which every square minor of the t x k power matrix
/// is invertible.
std::uint64_t f_threshold(int k, int t);

/// Exhaustive check of all s x s minors (1 <= s <= t) of the t x k matrix
/// with entry (j, i) = i^j, j = 0..t-1, i = 1..k.
bool all_submatrices_invertible(int k, int t, std::uint64_t p);

} // namespace ocdna
