#include "ocdna/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ocdna {

namespace {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

void check_qkn(int q, int k, int n) {
    if (q < 2 || k < 2) throw std::invalid_argument("bounds need q >= 2 and k >= 2");
    if (n < 1) throw std::invalid_argument("bounds need n >= 1");
}

BigInt ipow(int base, int e) {
    if (e < 0) throw std::invalid_argument("negative exponent");
    return big_pow(BigInt(base), static_cast<unsigned>(e));
}

BigInt bpow(const BigInt& base, int e) {
    if (e < 0) throw std::invalid_argument("negative exponent");
    return big_pow(base, static_cast<unsigned>(e));
}

BoundReport make(std::string family, Rational value, bool asym, int q, int k, int n,
                 std::vector<int> budgets, std::string note = {}) {
    BoundReport r;
    r.family = std::move(family);
    r.value = std::move(value);
    r.asymptotic = asym;
    r.q = q;
    r.k = k;
    r.n = n;
    r.budgets = std::move(budgets);
    r.note = std::move(note);
    return r;
}

// Positions (1-based) and values of the nonzero budgets.
struct NonZero {
    std::vector<int> pos;
    std::vector<int> val;
    int total = 0;
};

NonZero nonzero_of(const std::vector<int>& budgets) {
    NonZero nz;
    for (std::size_t i = 0; i < budgets.size(); ++i) {
        if (budgets[i] < 0) throw std::invalid_argument("budgets must be nonnegative");
        if (budgets[i] > 0) {
            nz.pos.push_back(static_cast<int>(i) + 1);
            nz.val.push_back(budgets[i]);
            nz.total += budgets[i];
        }
    }
    if (nz.pos.empty()) throw std::invalid_argument("at least one budget must be nonzero");
    return nz;
}

BigInt self_power_product(const std::vector<int>& vals) {
    BigInt prod = 1;
    for (int v : vals) prod *= ipow(v, v);
    return prod;
}

// |{1 < j < m : l_j - l_{j-1} = 1}| over the 1-based index window [from, from+len).
int adjacent_count(const std::vector<int>& pos, int from, int len) {
    int c = 0;
    for (int j = 2; j < len; ++j)
        if (pos[from + j - 1] - pos[from + j - 2] == 1) ++c;
    return c;
}

void check_budget_size(int k, const std::vector<int>& budgets) {
    if (static_cast<int>(budgets.size()) != k) throw std::invalid_argument("need exactly k budgets");
}

} // namespace

double log10_big(const BigInt& v) {
    if (v <= 0) throw std::domain_error("log10 of a nonpositive value");
    const std::string s = v.str();
    constexpr std::size_t lead = 17;
    if (s.size() <= lead) return std::log10(std::stod(s));
    return std::log10(std::stod(s.substr(0, lead))) + static_cast<double>(s.size() - lead);
}

BigInt BoundReport::floor() const { return numerator(value) / denominator(value); }

double BoundReport::log10() const { return log10_big(numerator(value)) - log10_big(denominator(value)); }

std::string BoundReport::value_string() const {
    if (denominator(value) == 1) return numerator(value).str();
    return numerator(value).str() + "/" + denominator(value).str();
}

BigInt q_size(int q, int k) {
    if (q < 1 || k < 0) throw std::invalid_argument("q_size needs q >= 1, k >= 0");
    return binom(k + q - 1, q - 1);
}

BoundReport sp_bound_per_row(int q, int k, int n, const std::vector<int>& budgets) {
    check_qkn(q, k, n);
    check_budget_size(k, budgets);
    if (!std::is_sorted(budgets.begin(), budgets.end(), std::greater<>()))
        throw std::invalid_argument("budgets must be sorted nonincreasing");
    if (budgets.back() < 1) throw std::invalid_argument("budgets must be positive");
    const int ek = budgets.back();
    BigInt inner = 0;
    for (int l = 1; l <= q - 1; ++l) inner += binom(l + k - 1, l);
    const BigInt denom = binom(n, ek) * bpow(inner, ek) + 1;
    return make("sp-per-row", Rational(bpow(q_size(q, k), n), denom), false, q, k, n, budgets);
}

BoundReport sp_bound_total(int q, int k, int n, int e) {
    check_qkn(q, k, n);
    if (e < 1) throw std::invalid_argument("sp_bound_total needs e >= 1");
    const BigInt denom = binom(n, e) * ipow(q - 1, e) + 1;
    return make("sp-total", Rational(bpow(q_size(q, k), n), denom), false, q, k, n, {e});
}

BigInt n0_value(int q, int k, int l) {
    if (l < 1 || l > q - 1) throw std::invalid_argument("l must lie in [1, q-1]");
    return q_size(q, k) - BigInt(q - l) * q_size(l, k - 1) - q_size(l, k);
}

BoundReport asym_bound_total(int q, int k, int n, int e, int l) {
    check_qkn(q, k, n);
    if (e < 1) throw std::invalid_argument("asym_bound_total needs e >= 1");
    const BigInt n0 = n0_value(q, k, l);
    if (n0 <= 0) throw std::logic_error("n0 is not positive");
    const BigInt num = bpow(q_size(q, k), n + e) * ipow(e, e);
    const BigInt den = bpow(n0 * (q - 1 + l), e) * ipow(n, e);
    return make("asym-total", Rational(num, den), true, q, k, n, {e}, "l=" + std::to_string(l));
}

BoundReport asym_bound_total_best(int q, int k, int n, int e) {
    BoundReport best = asym_bound_total(q, k, n, e, 1);
    for (int l = 2; l <= q - 1; ++l) {
        BoundReport r = asym_bound_total(q, k, n, e, l);
        if (r.value < best.value) best = std::move(r);
    }
    return best;
}

BoundReport asym_bound_general(int q, int k, int n, const std::vector<int>& budgets) {
    check_qkn(q, k, n);
    check_budget_size(k, budgets);
    const NonZero nz = nonzero_of(budgets);
    const int m = static_cast<int>(nz.pos.size());
    if (m > q) throw std::invalid_argument("more than q nonzero budgets; use bound_m_gt_q");
    const int e = nz.total;
    const int last = nz.val.back();
    const BigInt num = bpow(q_size(q, k), n + e) * self_power_product(nz.val);
    const BigInt den = ipow(2, adjacent_count(nz.pos, 0, m)) * ipow(q - 1, last) *
                       bpow(binom(q, m), e - last) * ipow(n, e);
    return make("asym-general", Rational(num, den), true, q, k, n, budgets);
}

BoundReport asym_bound_thm3(int q, int k, int n, const std::vector<int>& budgets, Thm3Variant variant) {
    check_qkn(q, k, n);
    check_budget_size(k, budgets);
    const NonZero nz = nonzero_of(budgets);
    const int m = static_cast<int>(nz.pos.size());
    if (m > q) throw std::invalid_argument("more than q nonzero budgets");
    const int e = nz.total;
    const bool last_adjacent = m >= 2 && nz.pos[m - 1] - nz.pos[m - 2] == 1;
    const BigInt lead = bpow(q_size(q, k), n + e) * self_power_product(nz.val);
    switch (variant) {
    case Thm3Variant::I: {
        if (m < 2) throw std::invalid_argument("variant i needs at least two nonzero budgets");
        if (!last_adjacent) throw std::invalid_argument("variant i needs the last two nonzero rows adjacent");
        const BigInt den = ipow(2, adjacent_count(nz.pos, 0, m)) * bpow(binom(q, m) * n, e);
        return make("asym-thm3-i", Rational(lead, den), true, q, k, n, budgets);
    }
    case Thm3Variant::II: {
        if (m != 1) throw std::invalid_argument("variant ii needs exactly one nonzero budget");
        const BigInt den = bpow(BigInt(n) * q * (q - 1), e);
        return make("asym-thm3-ii", Rational(lead, den), true, q, k, n, budgets);
    }
    case Thm3Variant::III: {
        if (m != 2) throw std::invalid_argument("variant iii needs exactly two nonzero budgets");
        if (!last_adjacent) throw std::invalid_argument("variant iii needs the two nonzero rows adjacent");
        const BigInt den = bpow(binom(q, 2) + 1, e) * ipow(n, e);
        return make("asym-thm3-iii", Rational(lead, den), true, q, k, n, budgets);
    }
    }
    throw std::invalid_argument("unknown variant");
}

BoundReport asym_bound_even_e(int q, int k, int n, int e) {
    check_qkn(q, k, n);
    if (e <= 0 || e % 2 != 0) throw std::invalid_argument("asym_bound_even_e needs a positive even e");
    const BigInt num = bpow(q_size(q, k), n + e) * ipow(e, e);
    const BigInt den = ipow(q * q - q + 2, e) * ipow(n, e);
    return make("asym-even-e", Rational(num, den), true, q, k, n, {e});
}

BoundReport bound_m_gt_q(int q, int k, int n, const std::vector<int>& budgets, int m0) {
    check_qkn(q, k, n);
    check_budget_size(k, budgets);
    const NonZero nz = nonzero_of(budgets);
    const int m = static_cast<int>(nz.pos.size());
    if (m <= q) throw std::invalid_argument("at most q nonzero budgets; use asym_bound_general");
    if (m0 < 2 || m0 > q) throw std::invalid_argument("m0 must lie in [2, q]");
    const int s = m / m0;
    const int r = m % m0;
    int adj = 0;
    int e1 = 0; // block-final budgets
    int e2 = 0; // other budgets inside full blocks
    int e3 = 0; // remainder budgets
    for (int p = 0; p < s; ++p) {
        adj += adjacent_count(nz.pos, p * m0, m0);
        for (int j = 0; j < m0 - 1; ++j) e2 += nz.val[p * m0 + j];
        e1 += nz.val[p * m0 + m0 - 1];
    }
    for (int j = s * m0; j < m; ++j) e3 += nz.val[j];
    const int e = nz.total;
    const BigInt num = bpow(q_size(q, k), n + e) * self_power_product(nz.val);
    const BigInt den = ipow(2, adj) * ipow(q - 1, e1) * bpow(binom(q, m0), e2) *
                       bpow(binom(q, r), e3) * ipow(n, e);
    return make("asym-m-gt-q", Rational(num, den), true, q, k, n, budgets, "m0=" + std::to_string(m0));
}

BigInt t_count(int n, int k, int w) {
    if (w < 0 || w > n - 1) throw std::invalid_argument("t_count needs 0 <= w <= n-1");
    if (k < 1) throw std::invalid_argument("t_count needs k >= 1");
    return ipow(k, n - w) + BigInt(w) * (k - 1) * ipow(k, n - w - 1);
}

BigInt c_count(int n, int r, int w) {
    if (r < 1 || w < 0 || w > n) throw std::invalid_argument("c_count needs r >= 1 and 0 <= w <= n");
    if (r == 1) return (w == 0 || w == n) ? 1 : 0;
    if (w == 0 || w == n) return 0;
    const int up = (r + 1) / 2;
    const int down = r / 2;
    return binom(w - 1, up - 1) * binom(n - w - 1, down - 1) +
           binom(w - 1, down - 1) * binom(n - w - 1, up - 1);
}

BoundReport gspb_deletion_bound(int n, int k) {
    if (n < 2) throw std::invalid_argument("gspb_deletion_bound needs n >= 2");
    if (k < 2) throw std::invalid_argument("gspb_deletion_bound needs k >= 2");
    Rational total = 0;
    for (int w = 0; w <= n - 1; ++w) {
        const BigInt t = t_count(n, k, w);
        for (int r = 1; r <= 2 * w + 1; ++r) {
            const BigInt c = c_count(n - 1, r, w);
            if (c != 0) total += Rational(c * t, BigInt(r));
        }
    }
    std::vector<int> budgets(k, 0);
    budgets[0] = 1;
    return make("gspb-deletion", total, false, 2, k, n, budgets);
}

BigInt v_size(int k, int n) {
    if (n < 2) throw std::invalid_argument("v_size needs n >= 2");
    if (k < 1) throw std::invalid_argument("v_size needs k >= 1");
    return BigInt(k) * ipow(k + 1, n - 1) + BigInt(k - 1) * ipow(k + 1, n - 2) * (n - 1);
}

Rational m_qk(int q, int k) {
    if (q < 2 || k < 2) throw std::invalid_argument("m_qk needs q, k >= 2");
    BigInt sum = 0;
    for (int a = 0; a < q; ++a) {
        const BigInt c = binom(k + q - a - 2, k - 1);
        sum += c * c;
    }
    const BigInt qq = q_size(q, k);
    return Rational(1) - Rational(sum, qq * qq);
}

BoundReport asym_deletion_bound(int k, int n) {
    if (k < 2) throw std::invalid_argument("asym_deletion_bound needs k >= 2");
    const Rational value = Rational(BigInt(k + 1) * (k + 1), BigInt(2 * k)) * Rational(v_size(k, n), BigInt(n));
    std::vector<int> budgets(k, 0);
    budgets[0] = 1;
    return make("asym-deletion", value, true, 2, k, n, budgets);
}

} // namespace ocdna
