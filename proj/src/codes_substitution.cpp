#include "ocdna/codes_substitution.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>

#include "ocdna/errors.hpp"
#include "ocdna/vt.hpp"

namespace ocdna {

namespace {

int imod(std::int64_t v, int mod) { return static_cast<int>(mod_floor(v, mod)); }

void check_rows_shape(const ReceivedRows& r, int q, int k, int n) {
    if (r.q != q || r.k != k || r.n != n || static_cast<int>(r.rows.size()) != k)
        throw std::invalid_argument("received rows do not match the code parameters");
    for (const auto& row : r.rows) {
        if (static_cast<int>(row.size()) != n) throw DecodeError("substitution channel keeps the row length");
        for (int d : row)
            if (d < 0 || d >= q) throw DecodeError("received symbol out of range");
    }
}

Word word_or_fail(int q, const std::vector<Digits>& rows) {
    try {
        return Word::from_rows(q, rows);
    } catch (const std::invalid_argument& e) {
        throw DecodeError(std::string("decoded rows do not form a word: ") + e.what());
    }
}

Digits column_of(const std::vector<Digits>& rows, int j) {
    Digits c(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) c[i] = rows[i][j];
    return c;
}

void set_column(std::vector<Digits>& rows, int j, const Digits& c) {
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i][j] = c[i];
}

Word constant_column_word(int q, int k, int value) { return Word::from_columns(q, k, {Digits(k, value)}); }

// Concatenates words of equal height left to right.
Word concat(int q, int k, const std::vector<Word>& parts) {
    std::vector<Digits> cols;
    for (const auto& w : parts)
        for (int j = 0; j < w.n(); ++j) cols.emplace_back(w.column(j).begin(), w.column(j).end());
    return Word::from_columns(q, k, cols);
}

Word slice(const Word& w, int from, int len) {
    std::vector<Digits> cols;
    for (int j = from; j < from + len; ++j) cols.emplace_back(w.column(j).begin(), w.column(j).end());
    return Word::from_columns(w.q(), w.k(), cols);
}

Word digit_block(int q, int k, std::uint64_t value, std::uint64_t bound) {
    const auto Q = static_cast<std::uint64_t>(alphabet_size(q, k));
    const Digits d = expand_base(value, Q, bound);
    return Word::from_ranks(q, k, d);
}

// Ranks of columns [from, from+len) read from rows; DecodeError on an invalid column.
std::uint64_t read_digit_block(const std::vector<Digits>& rows, int q, int from, int len) {
    const int k = static_cast<int>(rows.size());
    Digits ranks;
    for (int j = from; j < from + len; ++j) {
        const Digits c = column_of(rows, j);
        if (!letter_is_valid(c, q)) throw DecodeError("check block column is not a valid letter");
        ranks.push_back(letter_rank(Letter(q, c)));
    }
    const BigInt v = compose_base(ranks, static_cast<std::uint64_t>(alphabet_size(q, k)));
    return static_cast<std::uint64_t>(v);
}

} // namespace

// ---- Hamming ---------------------------------------------------------------

HammingCode::HammingCode(int l, int Q) : l_(l), Q_(Q) {
    if (l < 0) throw std::invalid_argument("Hamming length must be nonnegative");
    if (!is_prime(static_cast<std::uint64_t>(Q))) throw std::invalid_argument("Hamming field size must be prime");
    if (l < 3) return;
    r_ = 1;
    while ((big_pow(BigInt(Q), r_) - 1) / (Q - 1) < l) ++r_;
    // Projective columns in lexicographic order (first entry most significant).
    std::vector<Digits> cols;
    Digits v(r_, 0);
    const BigInt total = big_pow(BigInt(Q), r_);
    for (BigInt idx = 0; idx < total; ++idx) {
        BigInt x = idx;
        for (int b = r_ - 1; b >= 0; --b) {
            v[b] = static_cast<int>(x % Q);
            x /= Q;
        }
        const auto first = std::find_if(v.begin(), v.end(), [](int d) { return d != 0; });
        if (first != v.end() && *first == 1) cols.push_back(v);
    }
    auto is_unit = [](const Digits& c) { return std::count(c.begin(), c.end(), 0) + 1 == static_cast<long>(c.size()); };
    int excess = static_cast<int>(cols.size()) - l;
    for (auto it = cols.end(); excess > 0 && it != cols.begin();) {
        --it;
        if (!is_unit(*it)) {
            it = cols.erase(it);
            --excess;
        }
    }
    if (excess > 0) throw std::invalid_argument("Hamming length below the redundancy");
    H_.assign(r_, Digits(l, 0));
    unit_pos_.assign(r_, -1);
    for (int j = 0; j < l; ++j) {
        for (int b = 0; b < r_; ++b) H_[b][j] = cols[j][b];
        if (is_unit(cols[j])) {
            const int b = static_cast<int>(std::find(cols[j].begin(), cols[j].end(), 1) - cols[j].begin());
            unit_pos_[b] = j;
        } else {
            info_pos_.push_back(j);
        }
    }
}

BigInt HammingCode::size() const { return big_pow(BigInt(Q_), static_cast<unsigned>(dimension())); }

Digits HammingCode::encode(std::span<const int> message) const {
    if (static_cast<int>(message.size()) != dimension())
        throw std::invalid_argument("Hamming message length must be " + std::to_string(dimension()));
    if (l_ < 3) return Digits(l_, 1);
    Digits c(l_, 0);
    for (std::size_t i = 0; i < info_pos_.size(); ++i) {
        if (message[i] < 0 || message[i] >= Q_) throw std::invalid_argument("Hamming message symbol out of range");
        c[info_pos_[i]] = message[i];
    }
    for (int b = 0; b < r_; ++b) {
        std::int64_t s = 0;
        for (int j : info_pos_) s += static_cast<std::int64_t>(H_[b][j]) * c[j];
        c[unit_pos_[b]] = imod(-s, Q_);
    }
    return c;
}

Digits HammingCode::message_of(std::span<const int> codeword) const {
    Digits out;
    for (int j : info_pos_) out.push_back(codeword[j]);
    return out;
}

Digits HammingCode::syndrome(std::span<const int> word) const {
    Digits s(r_, 0);
    for (int b = 0; b < r_; ++b) {
        std::int64_t acc = 0;
        for (int j = 0; j < l_; ++j) acc += static_cast<std::int64_t>(H_[b][j]) * word[j];
        s[b] = imod(acc, Q_);
    }
    return s;
}

bool HammingCode::contains(std::span<const int> word) const {
    if (static_cast<int>(word.size()) != l_) return false;
    for (int d : word)
        if (d < 0 || d >= Q_) return false;
    if (l_ < 3) return std::all_of(word.begin(), word.end(), [](int d) { return d == 1; });
    const Digits s = syndrome(word);
    return std::all_of(s.begin(), s.end(), [](int d) { return d == 0; });
}

Digits HammingCode::decode(std::span<const int> word) const {
    if (static_cast<int>(word.size()) != l_) throw std::invalid_argument("Hamming word has the wrong length");
    if (l_ < 3) return Digits(l_, 1);
    Digits c(word.begin(), word.end());
    const Digits s = syndrome(word);
    const auto first = std::find_if(s.begin(), s.end(), [](int d) { return d != 0; });
    if (first == s.end()) return c;
    const PrimeField f(static_cast<std::uint64_t>(Q_));
    const int scale = *first;
    const auto inv = static_cast<std::int64_t>(f.inv(static_cast<std::uint64_t>(scale)));
    Digits col(r_);
    for (int b = 0; b < r_; ++b) col[b] = imod(s[b] * inv, Q_);
    for (int j = 0; j < l_; ++j) {
        bool match = true;
        for (int b = 0; b < r_ && match; ++b) match = H_[b][j] == col[b];
        if (match) {
            c[j] = imod(c[j] - scale, Q_);
            return c;
        }
    }
    throw DecodeError("Hamming syndrome matches no column");
}

std::vector<Digits> HammingCode::generator() const {
    std::vector<Digits> g;
    for (int i = 0; i < dimension(); ++i) {
        Digits msg(dimension(), 0);
        msg[i] = 1;
        g.push_back(encode(msg));
    }
    return g;
}

// ---- Doll ------------------------------------------------------------------

BigInt DollCode::layer_count(int l) const {
    return binom(n_, l) * big_pow(BigInt(a1_.size()), static_cast<unsigned>(n_ - l)) * inner_[l].size();
}

DollCode::DollCode(int q, int k, int n) : q_(q), k_(k), n_(n), m_(0) {
    if (q < 2) throw std::invalid_argument("q must be at least 2");
    if (k < 2) throw std::invalid_argument("this code needs k >= 2");
    if (n < 1) throw std::invalid_argument("n must be positive");
    const auto letters = all_letters(q, k);
    a2_index_.assign(letters.size(), -1);
    for (const auto& L : letters) {
        const int r = letter_rank(L);
        if (L[0] == 0 && L[1] == 0) {
            a1_.push_back(r);
        } else {
            a2_index_[r] = static_cast<int>(a2_.size());
            a2_.push_back(r);
        }
    }
    if (!is_prime(a2_.size()))
        throw std::invalid_argument("the letters outside A1 number " + std::to_string(a2_.size()) + ", not a prime");
    for (int l = 0; l <= n; ++l) inner_.emplace_back(l, static_cast<int>(a2_.size()));
    total_ = 0;
    for (int l = 0; l <= n; ++l) total_ += layer_count(l);
    const BigInt base = message_base();
    if (q == 2) {
        m_ = doll_m(n, k);
    } else {
        BigInt p = base;
        while (p <= total_) {
            ++m_;
            p *= base;
        }
    }
    if (big_pow(base, static_cast<unsigned>(m_)) > total_)
        throw std::logic_error("message space exceeds the code size");
}

std::vector<int> DollCode::project(std::span<const int> ranks) const {
    std::vector<int> out;
    for (int r : ranks)
        if (a2_index_.at(r) >= 0) out.push_back(a2_index_[r]);
    return out;
}

bool DollCode::contains(const Word& w) const {
    if (w.q() != q_ || w.k() != k_ || w.n() != n_) return false;
    const auto d = project(w.ranks());
    return inner_[d.size()].contains(d);
}

Word DollCode::codeword_at(const BigInt& index) const {
    if (index < 1 || index > total_) throw std::out_of_range("codeword index out of range");
    BigInt N1 = index;
    int l = 0;
    while (N1 > layer_count(l)) N1 -= layer_count(l++);
    const BigInt A1pow = big_pow(BigInt(a1_.size()), static_cast<unsigned>(n_ - l));
    const BigInt per = binom(n_, l) * A1pow;
    const BigInt temp1 = (N1 + per - 1) / per;
    const HammingCode& C = inner_[l];
    Digits msg(C.dimension());
    {
        BigInt v = temp1 - 1;
        for (auto& d : msg) {
            d = static_cast<int>(v % a2_.size());
            v /= a2_.size();
        }
    }
    const Digits s = C.encode(msg);
    const BigInt N2 = N1 - (temp1 - 1) * per;
    const BigInt temp2 = (N2 + A1pow - 1) / A1pow;
    const Digits support = cw_unrank(temp2, n_, l);
    BigInt N3 = N2 - (temp2 - 1) * A1pow - 1;
    std::vector<int> ranks(n_);
    std::size_t si = 0;
    for (int j = 0; j < n_; ++j) {
        if (support[j]) {
            ranks[j] = a2_[s[si++]];
        } else {
            ranks[j] = a1_[static_cast<std::size_t>(N3 % a1_.size())];
            N3 /= a1_.size();
        }
    }
    return Word::from_ranks(q_, k_, ranks);
}

BigInt DollCode::index_of(const Word& w) const {
    if (!contains(w)) throw DecodeError("word is not a codeword");
    const auto ranks = w.ranks();
    Digits support(n_, 0);
    std::vector<int> s, z;
    for (int j = 0; j < n_; ++j) {
        const int r = ranks[j];
        if (a2_index_[r] >= 0) {
            support[j] = 1;
            s.push_back(a2_index_[r]);
        } else {
            z.push_back(static_cast<int>(std::find(a1_.begin(), a1_.end(), r) - a1_.begin()));
        }
    }
    const int l = static_cast<int>(s.size());
    const BigInt A1pow = big_pow(BigInt(a1_.size()), static_cast<unsigned>(n_ - l));
    const BigInt per = binom(n_, l) * A1pow;
    const BigInt N3 = compose_base(z, a1_.size()) + 1;
    const BigInt temp2 = cw_rank(support, l);
    const BigInt temp1 = compose_base(inner_[l].message_of(s), a2_.size()) + 1;
    BigInt N = N3 + (temp2 - 1) * A1pow + (temp1 - 1) * per;
    for (int i = 0; i < l; ++i) N += layer_count(i);
    return N;
}

Word DollCode::encode(std::span<const int> message) const {
    if (static_cast<int>(message.size()) != m_)
        throw std::invalid_argument("message length must be " + std::to_string(m_));
    for (int d : message)
        if (d < 0 || d >= message_base()) throw std::invalid_argument("message symbol out of range");
    return codeword_at(compose_base(message, static_cast<std::uint64_t>(message_base())) + 1);
}

std::vector<int> DollCode::message_of(const Word& codeword) const {
    BigInt v = index_of(codeword) - 1;
    if (v >= big_pow(BigInt(message_base()), static_cast<unsigned>(m_)))
        throw DecodeError("codeword index lies outside the message space");
    std::vector<int> out(m_);
    for (auto& d : out) {
        d = static_cast<int>(v % message_base());
        v /= message_base();
    }
    return out;
}

Word DollCode::correct(const ReceivedRows& received) const {
    check_rows_shape(received, q_, k_, n_);
    std::vector<Digits> rows = received.rows;
    int repaired = 0;
    bool need_inner = true;
    for (int j = 0; j < n_; ++j) {
        Digits c = column_of(rows, j);
        if (letter_is_valid(c, q_)) continue;
        if (!letter_is_valid(std::span<const int>(c).subspan(1), q_) || ++repaired > 1)
            throw DecodeError("invalid columns are not explained by one first-row substitution");
        if (c[1] == 0) {
            c[0] = 0;
            need_inner = false;
        } else {
            c[0] = c[1];
        }
        set_column(rows, j, c);
    }
    Word w = Word::from_rows(q_, rows);
    if (!need_inner) {
        if (!contains(w)) throw DecodeError("repaired word is not a codeword");
        return w;
    }
    auto ranks = w.ranks();
    const auto d = project(ranks);
    const Digits fixed = inner_[d.size()].decode(d);
    std::size_t si = 0;
    for (auto& r : ranks) {
        if (a2_index_[r] < 0) continue;
        const Digits old = letter_unrank(r, q_, k_).digits();
        Digits repl = letter_unrank(a2_[fixed[si++]], q_, k_).digits();
        if (!std::equal(old.begin() + 1, old.end(), repl.begin() + 1))
            throw DecodeError("correction would touch a row other than the first");
        r = letter_rank(Letter(q_, repl));
    }
    return Word::from_ranks(q_, k_, ranks);
}

std::string DollCode::table_csv() const {
    std::ostringstream os;
    os << "l,binom,a1_power,inner_size,generator\n";
    for (int l = 0; l <= n_; ++l) {
        const auto& C = inner_[l];
        os << l << ',' << binom(n_, l) << ',' << big_pow(BigInt(a1_.size()), static_cast<unsigned>(n_ - l)) << ','
           << C.size() << ',';
        if (l < 3) {
            os << std::string(static_cast<std::size_t>(l), '1');
        } else {
            const auto g = C.generator();
            for (std::size_t i = 0; i < g.size(); ++i) {
                if (i) os << '|';
                for (int d : g[i]) os << d;
            }
        }
        os << '\n';
    }
    return os.str();
}

BigInt doll_size(int n, int k) { return DollCode(2, k, n).size(); }

int doll_m(int n, int k) {
    if (k < 2 || n < 1) throw std::invalid_argument("doll_m needs k >= 2 and n >= 1");
    const BigInt top = big_pow(BigInt(k + 1), n + 1) - big_pow(BigInt(k - 1), n + 1);
    const BigInt den = 4 * BigInt(n + 1);
    int m = 0;
    BigInt p = k + 1;
    while (p * den <= top) {
        ++m;
        p *= k + 1;
    }
    return m;
}

// ---- binary single composite substitution -----------------------------------

Cecc1Binary::Cecc1Binary(int k, int n, int a) : k_(k), n_(n), a_(a) {
    if (k < 2) throw std::invalid_argument("this code needs k >= 2");
    if (n < 2) throw std::invalid_argument("this code needs n >= 2");
    if (a < 0 || a > 2 * n) throw std::invalid_argument("need 0 <= a <= 2n");
    lme_layout(n, k + 1);
}

int Cecc1Binary::message_length() const { return lme_message_length(n_, k_ + 1); }

bool Cecc1Binary::contains(const Word& w) const {
    if (w.q() != 2 || w.k() != k_ || w.n() != n_) return false;
    return lme_contains(w.ranks(), a_, k_ + 1);
}

Word Cecc1Binary::encode(std::span<const int> message) const {
    return Word::from_ranks(2, k_, lme_encode(message, a_, k_ + 1, n_));
}

std::vector<int> Cecc1Binary::message_of(const Word& codeword) const { return lme_extract(codeword.ranks(), k_ + 1); }

Word Cecc1Binary::decode(const ReceivedRows& received) const {
    check_rows_shape(received, 2, k_, n_);
    std::vector<int> ranks(n_);
    int bad = -1;
    for (int j = 0; j < n_; ++j) {
        const Digits c = column_of(received.rows, j);
        const int ones = static_cast<int>(std::count(c.begin(), c.end(), 1));
        if (!letter_is_valid(c, 2)) {
            if (bad >= 0) throw DecodeError("more than one invalid column");
            bad = j;
        }
        ranks[j] = ones;
    }
    if (bad < 0) return Word::from_ranks(2, k_, lme_decode(ranks, a_, k_ + 1));
    const int w = ranks[bad];
    int chosen = -1;
    for (int cand : {w - 1, w + 1}) {
        if (cand < 0 || cand > k_) continue;
        ranks[bad] = cand;
        if (lme_contains(ranks, a_, k_ + 1)) {
            if (chosen >= 0) throw DecodeError("two repairs satisfy the checksum");
            chosen = cand;
        }
    }
    if (chosen < 0) throw DecodeError("no repair of the invalid column satisfies the checksum");
    ranks[bad] = chosen;
    return Word::from_ranks(2, k_, ranks);
}

// ---- q-ary single composite substitution -----------------------------------

Q1Checksums q1cecc_checksums(const Word& x, std::uint64_t p1, std::uint64_t p2) {
    const int q = x.q();
    std::int64_t sum = 0, vts = 0, sq = 0;
    for (const auto& row : x.rows()) {
        sum += digit_sum(row);
        vts += vt(row);
        for (int d : row) sq += static_cast<std::int64_t>(d) * d;
    }
    return {mod_floor(sum, 2 * q - 1), mod_floor(vts, static_cast<std::int64_t>(p1)),
            mod_floor(sq, static_cast<std::int64_t>(p2))};
}

Word q1cecc_decode(const ReceivedRows& received, const Q1Checksums& sums, std::uint64_t p1, std::uint64_t p2) {
    const int q = received.q, k = received.k, n = received.n;
    if (q < 3) throw std::invalid_argument("this decoder needs q > 2");
    check_rows_shape(received, q, k, n);
    std::vector<Digits> rows = received.rows;
    std::int64_t sum = 0, vts = 0, sq = 0;
    for (const auto& row : rows) {
        sum += digit_sum(row);
        vts += vt(row);
        for (int d : row) sq += static_cast<std::int64_t>(d) * d;
    }
    const std::int64_t d1 = mod_floor(sum - sums.digit_sum, 2 * q - 1);
    if (d1 == 0) return word_or_fail(q, rows);
    const std::int64_t delta = d1 < q ? d1 : d1 - (2 * q - 1);

    for (int j = 0; j < n; ++j) {
        Digits c = column_of(rows, j);
        if (letter_is_valid(c, q)) continue;
        int r = 0;
        while (r + 1 < k && c[r] <= c[r + 1]) ++r;
        if (delta > 0)
            c[r] -= static_cast<int>(delta);
        else
            c[r + 1] -= static_cast<int>(delta);
        set_column(rows, j, c);
        return word_or_fail(q, rows);
    }

    const PrimeField f1(p1), f2(p2);
    const std::uint64_t d2 = f1.reduce(vts - sums.vt_sum);
    std::uint64_t pos = f1.mul(f1.inv(f1.reduce(delta)), d2);
    if (pos == 0) pos = p1;
    if (pos > static_cast<std::uint64_t>(n)) throw DecodeError("substituted column index out of range");
    const std::uint64_t d3 = f2.reduce(sq - sums.square_sum);
    const std::uint64_t dinv = f2.inv(f2.reduce(delta));
    const std::uint64_t alpha = f2.mul(f2.inv(2), f2.sub(f2.mul(d3, dinv), f2.reduce(delta)));
    const int j = static_cast<int>(pos) - 1;
    Digits c = column_of(rows, j);
    const auto wrong = static_cast<int>(static_cast<std::int64_t>(alpha) + delta);
    const auto it = std::find(c.begin(), c.end(), wrong);
    if (alpha >= static_cast<std::uint64_t>(q) || it == c.end())
        throw DecodeError("substituted value not found in the located column");
    *it = static_cast<int>(alpha);
    std::sort(c.begin(), c.end());
    set_column(rows, j, c);
    return word_or_fail(q, rows);
}

C1SCode::C1SCode(int q, int k, int m, std::uint64_t p1, std::uint64_t p2)
    : q_(q), k_(k), m_(m), p1_(p1), p2_(p2) {
    if (q < 3) throw std::invalid_argument("this code needs q > 2");
    if (k < 2) throw std::invalid_argument("this code needs k >= 2");
    if (m < q) throw std::invalid_argument("this code needs m >= q");
    if (!is_prime(p1) || p1 < static_cast<std::uint64_t>(m)) throw std::invalid_argument("p1 must be a prime >= m");
    if (!is_prime(p2) || p2 < static_cast<std::uint64_t>(q)) throw std::invalid_argument("p2 must be a prime >= q");
    delta_ = ceil_log(static_cast<std::uint64_t>(alphabet_size(q, k)), BigInt(p1) * p2);
}

Word C1SCode::encode(const Word& payload) const {
    if (payload.q() != q_ || payload.k() != k_ || payload.n() != m_)
        throw std::invalid_argument("payload must be a " + std::to_string(k_) + " x " + std::to_string(m_) + " word");
    const Q1Checksums s = q1cecc_checksums(payload, p1_, p2_);
    const int hi = static_cast<int>(s.digit_sum / q_), lo = static_cast<int>(s.digit_sum % q_);
    const std::uint64_t packed = static_cast<std::uint64_t>(s.vt_sum) * p2_ + static_cast<std::uint64_t>(s.square_sum);
    return concat(q_, k_,
                  {payload, constant_column_word(q_, k_, hi), constant_column_word(q_, k_, lo),
                   digit_block(q_, k_, packed, p1_ * p2_)});
}

Word C1SCode::encode(std::span<const int> payload_ranks) const { return encode(Word::from_ranks(q_, k_, payload_ranks)); }

bool C1SCode::contains(const Word& w) const {
    if (w.q() != q_ || w.k() != k_ || w.n() != n()) return false;
    return encode(payload_of(w)) == w;
}

Word C1SCode::payload_of(const Word& codeword) const { return slice(codeword, 0, m_); }

Word C1SCode::decode(const ReceivedRows& received) const {
    check_rows_shape(received, q_, k_, n());
    std::vector<Digits> payload;
    for (const auto& row : received.rows) payload.emplace_back(row.begin(), row.begin() + m_);
    const Digits hi = column_of(received.rows, m_), lo = column_of(received.rows, m_ + 1);
    auto constant = [](const Digits& c) { return std::all_of(c.begin(), c.end(), [&](int d) { return d == c[0]; }); };
    if (!constant(hi) || !constant(lo)) return word_or_fail(q_, payload);
    const std::int64_t a1 = static_cast<std::int64_t>(q_) * hi[0] + lo[0];
    std::int64_t sum = 0;
    for (const auto& row : payload) sum += digit_sum(row);
    if (mod_floor(sum - a1, 2 * q_ - 1) == 0) return word_or_fail(q_, payload);
    const std::uint64_t packed = read_digit_block(received.rows, q_, m_ + 2, delta_);
    if (packed >= p1_ * p2_) throw DecodeError("packed checksum out of range");
    const Q1Checksums sums{a1, static_cast<std::int64_t>(packed / p2_), static_cast<std::int64_t>(packed % p2_)};
    ReceivedRows inner{q_, k_, m_, payload};
    return q1cecc_decode(inner, sums, p1_, p2_);
}

// ---- t-row substitution ----------------------------------------------------

C2SCode::C2SCode(int q, int k, int t, int m, std::uint64_t p) : q_(q), k_(k), t_(t), m_(m), p_(p) {
    if (q < 2) throw std::invalid_argument("q must be at least 2");
    if (t < 2 || t > k) throw std::invalid_argument("need 2 <= t <= k");
    if (m < 1) throw std::invalid_argument("m must be positive");
    const std::uint64_t row_mod = 2ULL * m * (q - 1);
    if (!is_prime(p) || p <= row_mod || p <= f_threshold(k, t))
        throw std::invalid_argument("p must be a prime above max(2m(q-1), f(k,t)) = " +
                                    std::to_string(std::max(row_mod, f_threshold(k, t))));
    delta_ = ceil_log(static_cast<std::uint64_t>(alphabet_size(q, k)), BigInt(p));
}

std::vector<std::uint64_t> C2SCode::block_values(const Word& payload) const {
    const PrimeField f(p_);
    const std::int64_t row_mod = 2LL * m_ * (q_ - 1);
    std::vector<std::uint64_t> out(t_, 0);
    const auto rows = payload.rows();
    for (int i = 0; i < k_; ++i) {
        const auto v = static_cast<std::uint64_t>(mod_floor(vt(rows[i]), row_mod));
        for (int j = 0; j < t_; ++j) out[j] = f.add(out[j], f.mul(f.pow(i + 1, j), v));
    }
    return out;
}

Word C2SCode::encode(const Word& payload) const {
    if (payload.q() != q_ || payload.k() != k_ || payload.n() != m_)
        throw std::invalid_argument("payload must be a " + std::to_string(k_) + " x " + std::to_string(m_) + " word");
    std::vector<Word> parts{payload};
    const auto rows = payload.rows();
    for (int i = 0; i < k_; ++i) {
        const int s = imod(digit_sum(rows[i]), q_);
        parts.push_back(constant_column_word(q_, k_, s));
        parts.push_back(constant_column_word(q_, k_, s));
    }
    for (std::uint64_t v : block_values(payload)) {
        const Word block = digit_block(q_, k_, v, p_);
        parts.push_back(block);
        const auto brows = block.rows();
        for (int i = 0; i < k_; ++i) parts.push_back(constant_column_word(q_, k_, imod(digit_sum(brows[i]), q_)));
    }
    return concat(q_, k_, parts);
}

Word C2SCode::encode(std::span<const int> payload_ranks) const { return encode(Word::from_ranks(q_, k_, payload_ranks)); }

bool C2SCode::contains(const Word& w) const {
    if (w.q() != q_ || w.k() != k_ || w.n() != n()) return false;
    return encode(payload_of(w)) == w;
}

Word C2SCode::payload_of(const Word& codeword) const { return slice(codeword, 0, m_); }

Word C2SCode::decode(const ReceivedRows& received) const {
    check_rows_shape(received, q_, k_, n());
    const auto& y = received.rows;
    std::vector<Digits> payload;
    for (const auto& row : y) payload.emplace_back(row.begin(), row.begin() + m_);

    std::vector<int> unknown;
    std::vector<bool> clean(k_);
    for (int i = 0; i < k_; ++i) {
        const int s = imod(digit_sum(payload[i]), q_);
        clean[i] = s == y[i][row_parity_pos(i, 0)] || s == y[i][row_parity_pos(i, 1)];
        if (!clean[i]) unknown.push_back(i);
    }
    if (static_cast<int>(unknown.size()) > t_) throw DecodeError("more than t rows disagree with their parity");
    if (unknown.empty()) return word_or_fail(q_, payload);

    std::vector<int> intact;
    for (int j = 0; j < t_ && intact.size() < unknown.size(); ++j) {
        bool ok = true;
        for (int i = 0; i < k_ && ok; ++i) {
            if (!clean[i]) continue;
            std::int64_t s = 0;
            for (int c = block_pos(j); c < block_pos(j) + delta_; ++c) s += y[i][c];
            ok = imod(s, q_) == y[i][block_parity_pos(j, i)];
        }
        if (ok) intact.push_back(j);
    }
    if (intact.size() < unknown.size()) throw DecodeError("too few intact check blocks");

    const PrimeField f(p_);
    const std::int64_t row_mod = 2LL * m_ * (q_ - 1);
    std::vector<std::uint64_t> rhs;
    for (int j : intact) {
        std::uint64_t v = f.reduce(static_cast<std::int64_t>(read_digit_block(y, q_, block_pos(j), delta_)));
        for (int i = 0; i < k_; ++i) {
            if (!clean[i]) continue;
            v = f.sub(v, f.mul(f.pow(i + 1, j), static_cast<std::uint64_t>(mod_floor(vt(payload[i]), row_mod))));
        }
        rhs.push_back(v);
    }
    const std::size_t s = unknown.size();
    ModMatrix a(s, std::vector<std::uint64_t>(s));
    for (std::size_t r = 0; r < s; ++r)
        for (std::size_t c = 0; c < s; ++c) a[r][c] = f.pow(static_cast<std::uint64_t>(unknown[c] + 1), intact[r]);
    const auto values = solve_mod_p(std::move(a), rhs, f);
    for (std::size_t c = 0; c < s; ++c) {
        const int i = unknown[c];
        if (values[c] >= static_cast<std::uint64_t>(row_mod)) throw DecodeError("recovered row syndrome out of range");
        payload[i] = qary_decode_one_substitution(payload[i], static_cast<std::int64_t>(values[c]),
                                                  y[i][row_parity_pos(i, 0)], q_);
    }
    return word_or_fail(q_, payload);
}

} // namespace ocdna
