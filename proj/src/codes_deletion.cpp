#include "ocdna/codes_deletion.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "ocdna/errors.hpp"
#include "ocdna/vt.hpp"

namespace ocdna {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t mod) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % mod);
}

std::uint64_t powmod(std::uint64_t base, int e, std::uint64_t mod) {
    std::uint64_t r = 1 % mod;
    for (int i = 0; i < e; ++i) r = mulmod(r, base % mod, mod);
    return r;
}

std::uint64_t umod(std::int64_t v, std::uint64_t mod) {
    return static_cast<std::uint64_t>(mod_floor(v, static_cast<std::int64_t>(mod)));
}

// Row indices whose received length is n-1; throws unless every row has
// length n or n-1.
std::vector<int> short_rows(const ReceivedRows& r, int q, int k, int n) {
    if (r.q != q || r.k != k || r.n != n || static_cast<int>(r.rows.size()) != k)
        throw std::invalid_argument("received rows do not match the code parameters");
    std::vector<int> out;
    for (int i = 0; i < k; ++i) {
        const int len = static_cast<int>(r.rows[i].size());
        if (len == n - 1)
            out.push_back(i);
        else if (len != n)
            throw DecodeError("row " + std::to_string(i) + " lost more than one symbol");
    }
    return out;
}

Word word_or_fail(int q, const std::vector<Digits>& rows) {
    try {
        return Word::from_rows(q, rows);
    } catch (const std::invalid_argument& e) {
        throw DecodeError(std::string("decoded rows do not form a word: ") + e.what());
    }
}

// Solves sum_{l} coeff(j_r, rows_l) v_l = rhs_r over F_p, with coefficients
// (row index + 1)^j.
std::vector<std::uint64_t> solve_power_system(const std::vector<int>& rows, const std::vector<int>& powers,
                                              const std::vector<std::uint64_t>& rhs, std::uint64_t p) {
    const PrimeField f(p);
    const std::size_t s = rows.size();
    ModMatrix a(s, std::vector<std::uint64_t>(s));
    for (std::size_t r = 0; r < s; ++r)
        for (std::size_t c = 0; c < s; ++c) a[r][c] = f.pow(static_cast<std::uint64_t>(rows[c] + 1), powers[r]);
    return solve_mod_p(std::move(a), rhs, f);
}

} // namespace

// ---- C1D -------------------------------------------------------------------

C1DCode::C1DCode(int k, int n, int a) : k_(k), n_(n), a_(a) {
    if (k < 1) throw std::invalid_argument("C1D needs k >= 1");
    if (n < 3) throw std::invalid_argument("C1D needs n >= 3");
    if (a < 0 || a > n) throw std::invalid_argument("C1D needs 0 <= a <= n");
    const int m = ceil_log(static_cast<std::uint64_t>(k + 1), BigInt(n + 1));
    std::int64_t power = 1;
    for (int j = 0; j < m; ++j) {
        check_pos_.push_back(static_cast<int>(power - 1));
        power *= k + 1;
    }
    for (int i = 0; i < n; ++i)
        if (!std::binary_search(check_pos_.begin(), check_pos_.end(), i)) info_pos_.push_back(i);
}

bool C1DCode::contains(const Word& w) const {
    if (w.q() != 2 || w.k() != k_ || w.n() != n_) return false;
    return mod_floor(vt(w.ranks()) - a_, n_ + 1) == 0;
}

Word C1DCode::encode(std::span<const int> message) const {
    if (static_cast<int>(message.size()) != message_length())
        throw std::invalid_argument("C1D message must have " + std::to_string(message_length()) + " symbols");
    std::vector<int> c(n_, 0);
    for (std::size_t i = 0; i < message.size(); ++i) {
        if (message[i] < 0 || message[i] > k_) throw std::invalid_argument("C1D message symbol out of range");
        c[info_pos_[i]] = message[i];
    }
    std::int64_t d = mod_floor(a_ - vt(c), n_ + 1);
    for (int p : check_pos_) {
        c[p] = static_cast<int>(d % (k_ + 1));
        d /= k_ + 1;
    }
    return Word::from_ranks(2, k_, c);
}

Word C1DCode::decode(const ReceivedRows& received) const {
    const auto shorts = short_rows(received, 2, k_, n_);
    if (shorts.size() > 1) throw DecodeError("C1D corrects a single deletion in total");
    std::vector<Digits> rows = received.rows;
    if (!shorts.empty()) {
        const int r = shorts[0];
        std::int64_t target = a_;
        for (int i = 0; i < k_; ++i)
            if (i != r) target -= vt(rows[i]);
        rows[r] = vt_decode_one_deletion(rows[r], target, n_ + 1);
    }
    return word_or_fail(2, rows);
}

std::vector<int> C1DCode::message_of(const Word& codeword) const {
    std::vector<int> out;
    for (int p : info_pos_) out.push_back(codeword.rank(p));
    return out;
}

// ---- congruence codes ------------------------------------------------------

CongruenceCode::CongruenceCode(Kind kind, int q, int k, int n, std::vector<std::int64_t> targets, std::uint64_t p)
    : kind_(kind), q_(q), k_(k), n_(n), targets_(std::move(targets)), p_(p) {
    if (k < 1 || n < 1) throw std::invalid_argument("congruence code needs k, n >= 1");
    if (targets_.empty()) throw std::invalid_argument("congruence code needs at least one target");
    switch (kind_) {
    case Kind::Binary:
        if (q != 2) throw std::invalid_argument("binary congruence code needs q = 2");
        if (!is_prime(p) || p <= static_cast<std::uint64_t>(std::max(k - 1, n)))
            throw std::invalid_argument("binary congruence code needs a prime p > max(k-1, n)");
        break;
    case Kind::QArySingle:
        if (q < 2) throw std::invalid_argument("q-ary congruence code needs q >= 2");
        if (targets_.size() != 1) throw std::invalid_argument("single-deletion congruence code takes one target");
        p_ = static_cast<std::uint64_t>(q) * n;
        break;
    case Kind::QAryT:
        if (q < 2) throw std::invalid_argument("q-ary congruence code needs q >= 2");
        if (!is_prime(p) || p <= static_cast<std::uint64_t>(std::max<std::int64_t>(k - 1, static_cast<std::int64_t>(q) * n)))
            throw std::invalid_argument("q-ary congruence code needs a prime p > max(k-1, qn)");
        break;
    }
    if (t() > k) throw std::invalid_argument("more targets than rows");
    for (auto a : targets_)
        if (a < 0 || static_cast<std::uint64_t>(a) >= p_) throw std::invalid_argument("target out of range");
}

std::int64_t CongruenceCode::row_value(std::span<const int> row) const {
    if (kind_ == Kind::Binary) return vt(row);
    return psi_syndrome(row, q_);
}

std::vector<std::int64_t> CongruenceCode::syndromes(const Word& w) const {
    if (w.q() != q_ || w.k() != k_ || w.n() != n_) throw std::invalid_argument("word does not match the code");
    std::vector<std::uint64_t> vals(k_);
    for (int i = 0; i < k_; ++i) vals[i] = umod(row_value(w.row(i)), p_);
    std::vector<std::int64_t> out(targets_.size());
    for (int j = 0; j < t(); ++j) {
        std::uint64_t acc = 0;
        for (int i = 0; i < k_; ++i) acc = (acc + mulmod(powmod(i + 1, j, p_), vals[i], p_)) % p_;
        out[j] = static_cast<std::int64_t>(acc);
    }
    return out;
}

bool CongruenceCode::contains(const Word& w) const {
    if (w.q() != q_ || w.k() != k_ || w.n() != n_) return false;
    return syndromes(w) == targets_;
}

Word CongruenceCode::decode(const ReceivedRows& received) const {
    const auto shorts = short_rows(received, q_, k_, n_);
    if (static_cast<int>(shorts.size()) > t()) throw DecodeError("more damaged rows than the code corrects");
    std::vector<Digits> rows = received.rows;
    if (shorts.empty()) return word_or_fail(q_, rows);
    std::vector<bool> damaged(k_, false);
    for (int r : shorts) damaged[r] = true;
    const std::size_t s = shorts.size();
    std::vector<int> powers(s);
    std::vector<std::uint64_t> rhs(s);
    for (std::size_t l = 0; l < s; ++l) {
        powers[l] = static_cast<int>(l);
        std::int64_t acc = targets_[l];
        std::uint64_t v = umod(acc, p_);
        for (int i = 0; i < k_; ++i) {
            if (damaged[i]) continue;
            const std::uint64_t term = mulmod(powmod(i + 1, powers[l], p_), umod(row_value(rows[i]), p_), p_);
            v = (v + p_ - term) % p_;
        }
        rhs[l] = v;
    }
    std::vector<std::uint64_t> values;
    if (kind_ == Kind::QArySingle)
        values = rhs;
    else
        values = solve_power_system(shorts, powers, rhs, p_);
    for (std::size_t l = 0; l < s; ++l) {
        const int r = shorts[l];
        const auto v = static_cast<std::int64_t>(values[l]);
        if (kind_ == Kind::Binary) {
            rows[r] = vt_decode_one_deletion(rows[r], v, static_cast<std::int64_t>(p_));
        } else {
            if (v >= static_cast<std::int64_t>(q_) * n_) throw DecodeError("recovered syndrome exceeds qn");
            rows[r] = qary_decode_one_deletion(rows[r], v, q_, n_);
        }
    }
    return word_or_fail(q_, rows);
}

ErrorModel CongruenceCode::channel_model() const {
    if (kind_ == Kind::QArySingle) return ErrorModel::del_total(1);
    return ErrorModel::del_t_rows(std::vector<int>(t(), 1));
}

// ---- marker constructions --------------------------------------------------

MarkerDeletionCode::MarkerDeletionCode(Kind kind, int q, int k, int t, int m, std::uint64_t modulus)
    : kind_(kind), q_(q), k_(k), t_(t), m_(m), modulus_(modulus) {
    const auto Q = static_cast<std::uint64_t>(alphabet_size(q, k));
    delta_ = ceil_log(Q, BigInt(modulus));
    one_rank_ = letter_rank(Letter(q, Digits(k, 1)));
}

MarkerDeletionCode MarkerDeletionCode::c2d(int k, int t, int m, std::uint64_t p) {
    if (k < 2) throw std::invalid_argument("C2D needs k >= 2");
    if (t < 2 || t > k) throw std::invalid_argument("C2D needs 2 <= t <= k");
    if (static_cast<std::uint64_t>(m) < f_threshold(k, t))
        throw std::invalid_argument("C2D needs m >= f(k,t) = " + std::to_string(f_threshold(k, t)));
    if (m < 2) throw std::invalid_argument("C2D needs m >= 2");
    if (!is_prime(p) || p <= static_cast<std::uint64_t>(m)) throw std::invalid_argument("C2D needs a prime p > m");
    return MarkerDeletionCode(Kind::C2D, 2, k, t, m, p);
}

MarkerDeletionCode MarkerDeletionCode::c3d(int q, int k, int m) {
    if (q < 3) throw std::invalid_argument("C3D needs q >= 3");
    if (k < 2) throw std::invalid_argument("C3D needs k >= 2");
    if (m < 3) throw std::invalid_argument("C3D needs m >= 3");
    return MarkerDeletionCode(Kind::C3D, q, k, 1, m, static_cast<std::uint64_t>(q) * m);
}

MarkerDeletionCode MarkerDeletionCode::c4d(int q, int k, int t, int m, std::uint64_t p) {
    if (q < 3) throw std::invalid_argument("C4D needs q >= 3");
    if (k < 2) throw std::invalid_argument("C4D needs k >= 2");
    if (t < 2 || t > k) throw std::invalid_argument("C4D needs 2 <= t <= k");
    if (static_cast<std::uint64_t>(m) < f_threshold(k, t))
        throw std::invalid_argument("C4D needs m >= f(k,t) = " + std::to_string(f_threshold(k, t)));
    if (m < 2) throw std::invalid_argument("C4D needs m >= 2");
    if (!is_prime(p) || p <= static_cast<std::uint64_t>(q) * m)
        throw std::invalid_argument("C4D needs a prime p > qm");
    return MarkerDeletionCode(Kind::C4D, q, k, t, m, p);
}

std::int64_t MarkerDeletionCode::row_syndrome(std::span<const int> row) const {
    if (kind_ == Kind::C2D) return vt(row);
    return psi_syndrome(row, q_);
}

std::vector<std::uint64_t> MarkerDeletionCode::block_values(const Word& payload) const {
    if (payload.q() != q_ || payload.k() != k_ || payload.n() != m_)
        throw std::invalid_argument("payload must be a q x k word with m columns");
    std::vector<std::uint64_t> s(k_);
    for (int i = 0; i < k_; ++i) s[i] = umod(row_syndrome(payload.row(i)), modulus_);
    std::vector<std::uint64_t> out(t_);
    for (int j = 0; j < t_; ++j) {
        std::uint64_t acc = 0;
        for (int i = 0; i < k_; ++i) acc = (acc + mulmod(powmod(i + 1, j, modulus_), s[i], modulus_)) % modulus_;
        out[j] = acc;
    }
    return out;
}

Word MarkerDeletionCode::encode(const Word& payload) const {
    const auto values = block_values(payload);
    std::vector<int> ranks = payload.ranks();
    const auto Q = static_cast<std::uint64_t>(alphabet_size(q_, k_));
    for (int j = 0; j < t_; ++j) {
        ranks.push_back(0);
        ranks.push_back(one_rank_);
        for (int d : expand_base(values[j], Q, modulus_)) ranks.push_back(d);
    }
    return Word::from_ranks(q_, k_, ranks);
}

Word MarkerDeletionCode::encode(std::span<const int> payload_ranks) const {
    if (static_cast<int>(payload_ranks.size()) != m_)
        throw std::invalid_argument("payload must have " + std::to_string(m_) + " symbols");
    return encode(Word::from_ranks(q_, k_, payload_ranks));
}

Word MarkerDeletionCode::payload_of(const Word& codeword) const {
    auto r = codeword.ranks();
    r.resize(m_);
    return Word::from_ranks(q_, k_, r);
}

bool MarkerDeletionCode::contains(const Word& w) const {
    if (w.q() != q_ || w.k() != k_ || w.n() != n()) return false;
    return encode(payload_of(w)) == w;
}

int MarkerDeletionCode::locate_segment(std::span<const int> y) const {
    if (static_cast<int>(y.size()) != n() - 1) throw std::invalid_argument("short row must have length n-1");
    if (y[marker_pos(0)] != 0) return 0;
    if (y[marker_pos(t_ - 1)] == 0) return t_;
    for (int s = 1; s < t_; ++s)
        if (y[marker_pos(s)] != 0) return s;
    throw DecodeError("markers do not localise the deletion");
}

Digits MarkerDeletionCode::decode_row(std::span<const int> prefix, std::int64_t value) const {
    if (kind_ == Kind::C2D) return vt_decode_one_deletion(prefix, value, static_cast<std::int64_t>(modulus_));
    if (value >= static_cast<std::int64_t>(q_) * m_) throw DecodeError("recovered syndrome exceeds qm");
    return qary_decode_one_deletion(prefix, value, q_, m_);
}

Word MarkerDeletionCode::decode(const ReceivedRows& received) const {
    const auto shorts = short_rows(received, q_, k_, n());
    if (static_cast<int>(shorts.size()) > t_) throw DecodeError("more damaged rows than the code corrects");
    std::vector<int> seg(k_, -1);
    for (int r : shorts) seg[r] = locate_segment(received.rows[r]);

    std::vector<Digits> rows(k_);
    std::vector<int> unknown;
    for (int i = 0; i < k_; ++i) {
        if (seg[i] == 0) {
            unknown.push_back(i);
            continue;
        }
        rows[i].assign(received.rows[i].begin(), received.rows[i].begin() + m_);
    }
    if (unknown.empty()) return word_or_fail(q_, rows);

    std::vector<bool> blocked(t_, false);
    for (int r : shorts)
        if (seg[r] >= 1) blocked[seg[r] - 1] = true;
    std::vector<int> chosen;
    for (int j = 0; j < t_ && chosen.size() < unknown.size(); ++j)
        if (!blocked[j]) chosen.push_back(j);
    if (chosen.size() < unknown.size()) throw DecodeError("not enough intact syndrome blocks");

    const auto Q = static_cast<std::uint64_t>(alphabet_size(q_, k_));
    auto read_block = [&](int j) {
        Digits digits(delta_);
        for (int d = 0; d < delta_; ++d) {
            const int col = marker_pos(j) + 2 + d;
            Digits column(k_);
            for (int r = 0; r < k_; ++r) {
                const int offset = (seg[r] >= 0 && seg[r] <= j) ? 1 : 0;
                column[r] = received.rows[r][col - offset];
            }
            if (!letter_is_valid(column, q_)) throw DecodeError("syndrome block holds an invalid column");
            digits[d] = letter_rank(Letter(q_, column));
        }
        const BigInt v = compose_base(digits, Q);
        if (v >= modulus_) throw DecodeError("syndrome block value exceeds the modulus");
        return v.convert_to<std::uint64_t>();
    };

    std::vector<bool> is_unknown(k_, false);
    for (int r : unknown) is_unknown[r] = true;
    std::vector<std::uint64_t> rhs(chosen.size());
    for (std::size_t l = 0; l < chosen.size(); ++l) {
        const int j = chosen[l];
        std::uint64_t v = read_block(j);
        for (int i = 0; i < k_; ++i) {
            if (is_unknown[i]) continue;
            const std::uint64_t s = umod(row_syndrome(rows[i]), modulus_);
            v = (v + modulus_ - mulmod(powmod(i + 1, j, modulus_), s, modulus_)) % modulus_;
        }
        rhs[l] = v;
    }
    std::vector<std::uint64_t> values;
    if (kind_ == Kind::C3D)
        values = rhs; // one row, block 0, coefficient 1
    else
        values = solve_power_system(unknown, chosen, rhs, modulus_);

    for (std::size_t l = 0; l < unknown.size(); ++l) {
        const int r = unknown[l];
        const std::span<const int> prefix(received.rows[r].data(), static_cast<std::size_t>(m_ - 1));
        rows[r] = decode_row(prefix, static_cast<std::int64_t>(values[l]));
    }
    return word_or_fail(q_, rows);
}

ErrorModel MarkerDeletionCode::channel_model() const {
    if (kind_ == Kind::C3D) return ErrorModel::del_total(1);
    return ErrorModel::del_t_rows(std::vector<int>(t_, 1));
}

} // namespace ocdna
