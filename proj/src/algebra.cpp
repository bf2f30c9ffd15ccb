#include "ocdna/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "ocdna/errors.hpp"

namespace ocdna {

std::uint64_t binom_u64(std::int64_t n, std::int64_t r) {
    if (n < 0 || r < 0 || r > n) return 0;
    r = std::min(r, n - r);
    unsigned __int128 acc = 1;
    for (std::int64_t i = 1; i <= r; ++i) {
        // acc * (n - r + i) / i stays integral at every step.
        acc = acc * static_cast<unsigned __int128>(n - r + i);
        acc /= static_cast<unsigned __int128>(i);
        if (acc > std::numeric_limits<std::uint64_t>::max())
            throw std::overflow_error("binomial C(" + std::to_string(n) + "," + std::to_string(r) +
                                      ") exceeds 64 bits");
    }
    return static_cast<std::uint64_t>(acc);
}

BigInt binom(std::int64_t n, std::int64_t r) {
    if (n < 0 || r < 0 || r > n) return 0;
    r = std::min(r, n - r);
    BigInt acc = 1;
    for (std::int64_t i = 1; i <= r; ++i) {
        acc *= (n - r + i);
        acc /= i;
    }
    return acc;
}

BigInt big_pow(const BigInt& base, unsigned exponent) {
    return boost::multiprecision::pow(base, exponent);
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d <= n / d; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::uint64_t next_prime_bertrand(std::uint64_t m) {
    if (m < 2) throw std::invalid_argument("next_prime_bertrand needs m >= 2");
    for (std::uint64_t p = m + 1; p < 2 * m; ++p)
        if (is_prime(p)) return p;
    throw std::logic_error("no prime in (m, 2m)");  // unreachable for m >= 2
}

std::uint64_t next_prime_at_least(std::uint64_t m) {
    std::uint64_t p = std::max<std::uint64_t>(m, 2);
    while (!is_prime(p)) ++p;
    return p;
}

int ceil_log(std::uint64_t base, const BigInt& bound) {
    if (base < 2) throw std::invalid_argument("ceil_log needs base >= 2");
    int len = 0;
    BigInt acc = 1;
    while (acc < bound) {
        acc *= base;
        ++len;
    }
    return len;
}

Digits expand_base(std::uint64_t value, std::uint64_t base, std::uint64_t bound) {
    if (base < 2) throw std::invalid_argument("expand_base needs base >= 2");
    if (value >= bound)
        throw std::invalid_argument("expand_base: value " + std::to_string(value) +
                                    " not below bound " + std::to_string(bound));
    const int len = ceil_log(base, bound);
    Digits out(len);
    for (int i = 0; i < len; ++i) {
        out[i] = static_cast<int>(value % base);
        value /= base;
    }
    return out;
}

BigInt compose_base(std::span<const int> digits, std::uint64_t base) {
    BigInt acc = 0;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
        if (*it < 0 || static_cast<std::uint64_t>(*it) >= base)
            throw std::invalid_argument("compose_base: digit out of range");
        acc = acc * base + *it;
    }
    return acc;
}

BigInt cw_rank(std::span<const int> a, int w) {
    BigInt index = 1;
    int seen = 0;
    for (std::size_t pos = 0; pos < a.size(); ++pos) {
        if (a[pos] == 0) continue;
        if (a[pos] != 1) throw std::invalid_argument("cw_rank: sequence is not binary");
        ++seen;
        index += binom(static_cast<std::int64_t>(pos), seen);
    }
    if (seen != w)
        throw std::invalid_argument("cw_rank: weight " + std::to_string(seen) + " != " +
                                    std::to_string(w));
    return index;
}

Digits cw_unrank(const BigInt& index, int n, int w) {
    if (w < 0 || w > n) throw std::invalid_argument("cw_unrank: weight out of range");
    if (index < 1 || index > binom(n, w))
        throw std::invalid_argument("cw_unrank: index out of range");
    Digits a(n, 0);
    BigInt rest = index - 1;
    int n0 = n;
    int w0 = w;
    while (w0 >= 1) {
        const BigInt c = binom(n0 - 1, w0);
        if (rest >= c) {
            a[n0 - 1] = 1;
            rest -= c;
            --w0;
        }
        --n0;
    }
    return a;
}

// ---- PrimeField -----------------------------------------------------------

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
    if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
}

std::uint64_t PrimeField::reduce(std::int64_t v) const {
    const auto sp = static_cast<std::int64_t>(p_);
    std::int64_t r = v % sp;
    if (r < 0) r += sp;
    return static_cast<std::uint64_t>(r);
}

std::uint64_t PrimeField::reduce(const BigInt& v) const {
    BigInt r = v % p_;
    if (r < 0) r += p_;
    return r.convert_to<std::uint64_t>();
}

std::uint64_t PrimeField::add(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) + b) % p_);
}

std::uint64_t PrimeField::sub(std::uint64_t a, std::uint64_t b) const {
    return add(a % p_, p_ - b % p_);
}

std::uint64_t PrimeField::mul(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p_);
}

std::uint64_t PrimeField::pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t result = 1 % p_;
    a %= p_;
    while (e > 0) {
        if (e & 1) result = mul(result, a);
        a = mul(a, a);
        e >>= 1;
    }
    return result;
}

std::uint64_t PrimeField::inv(std::uint64_t a) const {
    if (a % p_ == 0) throw std::domain_error("zero has no inverse");
    return pow(a, p_ - 2);
}

// ---- linear algebra -------------------------------------------------------

namespace {

void require_square(const ModMatrix& a) {
    for (const auto& row : a)
        if (row.size() != a.size()) throw std::invalid_argument("matrix is not square");
}

} // namespace

std::uint64_t det_mod_p(ModMatrix a, const PrimeField& f) {
    require_square(a);
    const std::size_t s = a.size();
    std::uint64_t det = 1 % f.p();
    for (auto& row : a)
        for (auto& v : row) v %= f.p();
    for (std::size_t col = 0; col < s; ++col) {
        std::size_t piv = col;
        while (piv < s && a[piv][col] == 0) ++piv;
        if (piv == s) return 0;
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = f.sub(0, det);
        }
        det = f.mul(det, a[col][col]);
        const std::uint64_t inv = f.inv(a[col][col]);
        for (std::size_t r = col + 1; r < s; ++r) {
            if (a[r][col] == 0) continue;
            const std::uint64_t factor = f.mul(a[r][col], inv);
            for (std::size_t c = col; c < s; ++c) a[r][c] = f.sub(a[r][c], f.mul(factor, a[col][c]));
        }
    }
    return det;
}

std::vector<std::uint64_t> solve_mod_p(ModMatrix a, std::vector<std::uint64_t> b,
                                       const PrimeField& f) {
    require_square(a);
    const std::size_t s = a.size();
    if (b.size() != s) throw std::invalid_argument("right-hand side has wrong length");
    for (auto& row : a)
        for (auto& v : row) v %= f.p();
    for (auto& v : b) v %= f.p();
    for (std::size_t col = 0; col < s; ++col) {
        std::size_t piv = col;
        while (piv < s && a[piv][col] == 0) ++piv;
        if (piv == s) throw SingularMatrixError("matrix is singular modulo " + std::to_string(f.p()));
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        const std::uint64_t inv = f.inv(a[col][col]);
        for (std::size_t c = col; c < s; ++c) a[col][c] = f.mul(a[col][c], inv);
        b[col] = f.mul(b[col], inv);
        for (std::size_t r = 0; r < s; ++r) {
            if (r == col || a[r][col] == 0) continue;
            const std::uint64_t factor = a[r][col];
            for (std::size_t c = col; c < s; ++c) a[r][c] = f.sub(a[r][c], f.mul(factor, a[col][c]));
            b[r] = f.sub(b[r], f.mul(factor, b[col]));
        }
    }
    return b;
}

// ---- tableaux -------------------------------------------------------------

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 0) throw std::invalid_argument("partition parts must be nonnegative");
        if (i > 0 && parts[i] > parts[i - 1])
            throw std::invalid_argument("partition parts must be nonincreasing");
    }
}

namespace {

void fill_cell(Tableau& t, const Partition& lambda, int row, int col,
               const std::function<void(const Tableau&)>& visit) {
    const int s = lambda.size();
    if (row == s) {
        visit(t);
        return;
    }
    if (col == lambda.parts[row]) {
        fill_cell(t, lambda, row + 1, 0, visit);
        return;
    }
    int lo = 1;
    if (col > 0) lo = std::max(lo, t[row][col - 1]);
    if (row > 0) lo = std::max(lo, t[row - 1][col] + 1);
    for (int v = lo; v <= s; ++v) {
        t[row][col] = v;
        fill_cell(t, lambda, row, col + 1, visit);
    }
}

} // namespace

void for_each_sst(const Partition& lambda, const std::function<void(const Tableau&)>& visit) {
    Tableau t(lambda.size());
    for (int r = 0; r < lambda.size(); ++r) t[r].assign(lambda.parts[r], 0);
    fill_cell(t, lambda, 0, 0, visit);
}

std::vector<Tableau> enumerate_ssts(const Partition& lambda) {
    std::vector<Tableau> out;
    for_each_sst(lambda, [&](const Tableau& t) { out.push_back(t); });
    return out;
}

BigInt schur_eval(const Partition& lambda, std::span<const BigInt> x) {
    if (static_cast<int>(x.size()) != lambda.size())
        throw std::invalid_argument("schur_eval: need one variable per part");
    BigInt total = 0;
    for_each_sst(lambda, [&](const Tableau& t) {
        BigInt term = 1;
        for (const auto& row : t)
            for (int v : row) term *= x[v - 1];
        total += term;
    });
    return total;
}

std::uint64_t schur_eval(const Partition& lambda, std::span<const std::uint64_t> x,
                         const PrimeField& f) {
    if (static_cast<int>(x.size()) != lambda.size())
        throw std::invalid_argument("schur_eval: need one variable per part");
    std::uint64_t total = 0;
    for_each_sst(lambda, [&](const Tableau& t) {
        std::uint64_t term = 1 % f.p();
        for (const auto& row : t)
            for (int v : row) term = f.mul(term, x[v - 1]);
        total = f.add(total, term);
    });
    return total;
}

std::uint64_t vandermonde_shape_det(const Partition& lambda, std::span<const std::uint64_t> x,
                                    const PrimeField& f) {
    const int s = lambda.size();
    if (static_cast<int>(x.size()) != s)
        throw std::invalid_argument("vandermonde_shape_det: need one variable per part");
    ModMatrix m(s, std::vector<std::uint64_t>(s));
    for (int r = 0; r < s; ++r) {
        const auto exponent = static_cast<std::uint64_t>(lambda.parts[s - 1 - r] + r);
        for (int c = 0; c < s; ++c) m[r][c] = f.pow(x[c], exponent);
    }
    return det_mod_p(std::move(m), f);
}

std::uint64_t f_threshold(int k, int t) {
    if (t < 2 || t > k) throw std::invalid_argument("f_threshold needs 2 <= t <= k");
    if (t == 2) return static_cast<std::uint64_t>(k);
    if (t == 3) return 2 * static_cast<std::uint64_t>(k);
    const double lk = std::log(static_cast<double>(k));
    const double lt = std::log(static_cast<double>(t));
    const int s0 = std::min(static_cast<int>(std::floor((t - 1) * lk / (2 * lk - lt))) + 1, t - 1);
    const BigInt v = big_pow(t, static_cast<unsigned>(s0 * (s0 - 1) / 2)) *
                     big_pow(k, static_cast<unsigned>(s0 * (t - s0)));
    if (v > std::numeric_limits<std::uint64_t>::max())
        throw std::overflow_error("f_threshold exceeds 64 bits");
    return v.convert_to<std::uint64_t>();
}

namespace {

// All size-s subsets of {0..n-1} as index vectors, in lexicographic order.
std::vector<std::vector<int>> subsets(int n, int s) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(s);
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == s) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i <= n - (s - depth); ++i) {
            cur[depth] = i;
            rec(i + 1, depth + 1);
        }
    };
    rec(0, 0);
    return out;
}

} // namespace

bool all_submatrices_invertible(int k, int t, std::uint64_t p) {
    if (t < 1 || t > k) throw std::invalid_argument("need 1 <= t <= k");
    const PrimeField f(p);
    for (int s = 1; s <= t; ++s) {
        const auto row_sets = subsets(t, s);
        const auto col_sets = subsets(k, s);
        for (const auto& rows : row_sets)
            for (const auto& cols : col_sets) {
                ModMatrix m(s, std::vector<std::uint64_t>(s));
                for (int r = 0; r < s; ++r)
                    for (int c = 0; c < s; ++c)
                        m[r][c] = f.pow(static_cast<std::uint64_t>(cols[c] + 1),
                                        static_cast<std::uint64_t>(rows[r]));
                if (det_mod_p(std::move(m), f) == 0) return false;
            }
    }
    return true;
}

} // namespace ocdna
