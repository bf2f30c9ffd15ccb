#include "ocdna/vt.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "ocdna/errors.hpp"

namespace ocdna {

std::int64_t vt(std::span<const int> x) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += static_cast<std::int64_t>(i + 1) * x[i];
    return s;
}

std::int64_t digit_sum(std::span<const int> x) {
    std::int64_t s = 0;
    for (int d : x) s += d;
    return s;
}

std::int64_t mod_floor(std::int64_t v, std::int64_t mod) {
    if (mod <= 0) throw std::invalid_argument("modulus must be positive");
    const std::int64_t r = v % mod;
    return r < 0 ? r + mod : r;
}

namespace {

// Every distinct sequence obtained by inserting one symbol from [0, q) into y.
std::set<Digits> insertions(std::span<const int> y, int q) {
    std::set<Digits> out;
    for (std::size_t pos = 0; pos <= y.size(); ++pos) {
        for (int s = 0; s < q; ++s) {
            Digits x(y.begin(), y.end());
            x.insert(x.begin() + static_cast<std::ptrdiff_t>(pos), s);
            out.insert(std::move(x));
        }
    }
    return out;
}

template <class Pred>
Digits unique_candidate(const std::set<Digits>& cands, Pred keep, const char* what) {
    const Digits* found = nullptr;
    for (const auto& c : cands) {
        if (!keep(c)) continue;
        if (found) throw DecodeError(std::string(what) + ": several candidates match the syndrome");
        found = &c;
    }
    if (!found) throw DecodeError(std::string(what) + ": no candidate matches the syndrome");
    return *found;
}

} // namespace

Digits vt_decode_one_deletion(std::span<const int> y, std::int64_t a, std::int64_t N) {
    for (int d : y)
        if (d != 0 && d != 1) throw std::invalid_argument("vt_decode_one_deletion needs a binary sequence");
    const std::int64_t target = mod_floor(a, N);
    return unique_candidate(
        insertions(y, 2), [&](const Digits& x) { return mod_floor(vt(x), N) == target; }, "binary deletion decode");
}

Digits psi(std::span<const int> x, int q) {
    Digits z(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        z[i] = i + 1 < x.size() ? static_cast<int>(mod_floor(x[i] - x[i + 1], q)) : x[i];
    return z;
}

Digits psi_inverse(std::span<const int> z, int q) {
    Digits x(z.size());
    for (std::size_t r = z.size(); r-- > 0;)
        x[r] = r + 1 < z.size() ? static_cast<int>(mod_floor(z[r] + x[r + 1], q)) : z[r];
    return x;
}

std::int64_t psi_syndrome(std::span<const int> x, int q) {
    const auto n = static_cast<std::int64_t>(x.size());
    if (n == 0) return 0;
    return mod_floor(vt(psi(x, q)), q * n);
}

Digits qary_decode_one_deletion(std::span<const int> y, std::int64_t a, int q, int n) {
    if (static_cast<int>(y.size()) + 1 != n) throw std::invalid_argument("received length must be n-1");
    for (int d : y)
        if (d < 0 || d >= q) throw std::invalid_argument("symbol out of range");
    const std::int64_t target = mod_floor(a, static_cast<std::int64_t>(q) * n);
    return unique_candidate(
        insertions(y, q), [&](const Digits& x) { return psi_syndrome(x, q) == target; }, "q-ary deletion decode");
}

LmeLayout lme_layout(int n, int Q) {
    if (Q < 3) throw std::invalid_argument("limited-magnitude code needs Q >= 3");
    if (n < 2) throw std::invalid_argument("limited-magnitude code needs n >= 2");
    LmeLayout L;
    L.n = n;
    L.Q = Q;
    L.m = ceil_log(static_cast<std::uint64_t>(Q), BigInt(n));
    std::int64_t power = 1;
    for (int j = 0; j < L.m; ++j) {
        L.check_pos.push_back(static_cast<int>(power - 1));
        power *= Q;
    }
    if (L.check_pos.back() >= n - 1) throw std::invalid_argument("layout needs n > Q^(m-1)");
    for (int i = 0; i < n - 1; ++i)
        if (!std::binary_search(L.check_pos.begin(), L.check_pos.end(), i)) L.info_pos.push_back(i);
    return L;
}

int lme_message_length(int n, int Q) { return static_cast<int>(lme_layout(n, Q).info_pos.size()); }

Digits lme_encode(std::span<const int> message, std::int64_t a, int Q, int n) {
    const LmeLayout L = lme_layout(n, Q);
    if (message.size() != L.info_pos.size())
        throw std::invalid_argument("message length must be " + std::to_string(L.info_pos.size()));
    Digits c(n, 0);
    for (std::size_t i = 0; i < message.size(); ++i) {
        if (message[i] < 0 || message[i] >= Q) throw std::invalid_argument("message symbol out of range");
        c[L.info_pos[i]] = message[i];
    }
    const std::int64_t mod = 2 * static_cast<std::int64_t>(n) + 1;
    const std::int64_t d = mod_floor(a - vt(c), mod);
    auto write_checks = [&](std::int64_t v) {
        for (int j = 0; j < L.m; ++j) {
            c[L.check_pos[j]] = static_cast<int>(v % Q);
            v /= Q;
        }
    };
    if (d >= 1 && d < n) {
        write_checks(d);
    } else if (d >= n && d < 2 * static_cast<std::int64_t>(n)) {
        write_checks(d - n);
        c[n - 1] = 1;
    } else if (d == 2 * static_cast<std::int64_t>(n)) {
        c[n - 1] = 2;
    }
    return c;
}

Digits lme_decode(std::span<const int> y, std::int64_t a, int Q) {
    const auto n = static_cast<std::int64_t>(y.size());
    Digits c(y.begin(), y.end());
    const std::int64_t delta = mod_floor(vt(y) - a, 2 * n + 1);
    if (delta == 0) return c;
    std::int64_t pos;
    int change;
    if (delta <= n) {
        pos = delta;
        change = -1;
    } else {
        pos = 2 * n + 1 - delta;
        change = +1;
    }
    int& s = c[static_cast<std::size_t>(pos - 1)];
    s += change;
    if (s < 0 || s >= Q) throw DecodeError("limited-magnitude decode left the symbol range");
    return c;
}

Digits lme_extract(std::span<const int> c, int Q) {
    const LmeLayout L = lme_layout(static_cast<int>(c.size()), Q);
    Digits out;
    out.reserve(L.info_pos.size());
    for (int p : L.info_pos) out.push_back(c[p]);
    return out;
}

bool lme_contains(std::span<const int> c, std::int64_t a, int Q) {
    for (int d : c)
        if (d < 0 || d >= Q) return false;
    const auto n = static_cast<std::int64_t>(c.size());
    return mod_floor(vt(c) - a, 2 * n + 1) == 0;
}

Digits qary_decode_one_substitution(std::span<const int> y, std::int64_t vt_mod, std::int64_t sum_mod, int q) {
    if (q < 2) throw std::invalid_argument("q must be at least 2");
    const auto n = static_cast<std::int64_t>(y.size());
    Digits x(y.begin(), y.end());
    const std::int64_t d1 = mod_floor(digit_sum(y) - sum_mod, q);
    if (d1 == 0) return x;
    const std::int64_t span = n * (q - 1);
    const std::int64_t d2 = mod_floor(vt(y) - vt_mod, 2 * span);
    std::int64_t pos;
    std::int64_t delta;
    if (d2 < span) {
        delta = d1;
        if (d2 % delta != 0) throw DecodeError("substitution position is not integral");
        pos = d2 / delta;
    } else if (d2 > span) {
        delta = d1 - q;
        if ((d2 - 2 * span) % delta != 0) throw DecodeError("substitution position is not integral");
        pos = (d2 - 2 * span) / delta;
    } else {
        // The last symbol moved between 0 and q-1; its received value says which way.
        pos = n;
        delta = y[n - 1] == q - 1 ? q - 1 : -(q - 1);
    }
    if (pos < 1 || pos > n) throw DecodeError("substitution position out of range");
    int& s = x[static_cast<std::size_t>(pos - 1)];
    s -= static_cast<int>(delta);
    if (s < 0 || s >= q) throw DecodeError("substitution decode left the symbol range");
    return x;
}

} // namespace ocdna
