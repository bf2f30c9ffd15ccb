#include "ocdna/alphabet.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace ocdna {

bool letter_is_valid(std::span<const int> digits, int q) {
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (digits[i] < 0 || digits[i] >= q) return false;
        if (i > 0 && digits[i] < digits[i - 1]) return false;
    }
    return true;
}

std::int64_t alphabet_size(int q, int k) {
    if (q < 0 || k < 0) throw std::invalid_argument("alphabet_size needs q, k >= 0");
    if (q == 0) return 0;
    const std::uint64_t v = binom_u64(k + q - 1, q - 1);
    if (v > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
        throw std::overflow_error("alphabet size exceeds 63 bits");
    return static_cast<std::int64_t>(v);
}

Letter::Letter(int q, Digits digits) : q_(q), digits_(std::move(digits)) {
    if (q < 1) throw std::invalid_argument("letter needs q >= 1");
    if (!letter_is_valid(digits_, q_)) throw std::invalid_argument("column is not a valid letter");
}

int Letter::weight(int symbol) const {
    int c = 0;
    for (int d : digits_) c += (d == symbol);
    return c;
}

// The weight value orders letters like a base-(k+1) number whose most
// significant digit is w_{q-1}. Counting the tuples (w_{q-1}, ..., w_1) with
// sum <= k that precede a given tuple gives the rank directly. Tuples of
// `vars` free entries with sum <= r number C(r + vars, vars).

int letter_rank(const Letter& letter) {
    const int q = letter.q();
    const int k = letter.k();
    std::uint64_t rank = 0;
    int remaining = k;
    for (int sym = q - 1; sym >= 1; --sym) {
        const int w = letter.weight(sym);
        for (int u = 0; u < w; ++u) rank += binom_u64(remaining - u + sym - 1, sym - 1);
        remaining -= w;
    }
    if (rank > static_cast<std::uint64_t>(std::numeric_limits<int>::max()))
        throw std::overflow_error("letter rank exceeds int range");
    return static_cast<int>(rank);
}

Letter letter_unrank(std::int64_t rank, int q, int k) {
    if (q < 1 || k < 0) throw std::invalid_argument("letter_unrank needs q >= 1, k >= 0");
    if (rank < 0 || rank >= alphabet_size(q, k))
        throw std::invalid_argument("rank " + std::to_string(rank) + " out of range for q=" +
                                    std::to_string(q) + ", k=" + std::to_string(k));
    auto rest = static_cast<std::uint64_t>(rank);
    std::vector<int> weights(q, 0);
    int remaining = k;
    for (int sym = q - 1; sym >= 1; --sym) {
        int u = 0;
        for (;; ++u) {
            const std::uint64_t c = binom_u64(remaining - u + sym - 1, sym - 1);
            if (rest < c) break;
            rest -= c;
        }
        weights[sym] = u;
        remaining -= u;
    }
    weights[0] = remaining;
    Digits digits;
    digits.reserve(k);
    for (int sym = 0; sym < q; ++sym) digits.insert(digits.end(), weights[sym], sym);
    return Letter(q, std::move(digits));
}

std::vector<Letter> all_letters(int q, int k) {
    const std::int64_t size = alphabet_size(q, k);
    std::vector<Letter> out;
    out.reserve(static_cast<std::size_t>(size));
    for (std::int64_t r = 0; r < size; ++r) out.push_back(letter_unrank(r, q, k));
    return out;
}

// ---- Word -----------------------------------------------------------------

Word::Word(int q, int k, int n) : q_(q), k_(k), n_(n), data_(static_cast<std::size_t>(k) * n, 0) {
    if (q < 1 || k < 1 || n < 0) throw std::invalid_argument("word needs q >= 1, k >= 1, n >= 0");
}

Word Word::from_rows(int q, const std::vector<Digits>& rows) {
    if (rows.empty()) throw std::invalid_argument("word needs at least one row");
    const int k = static_cast<int>(rows.size());
    const int n = static_cast<int>(rows[0].size());
    for (const auto& r : rows)
        if (static_cast<int>(r.size()) != n) throw std::invalid_argument("rows have unequal lengths");
    Word w(q, k, n);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < k; ++i) w.data_[static_cast<std::size_t>(j) * k + i] = rows[i][j];
        if (!letter_is_valid(w.column(j), q))
            throw std::invalid_argument("column " + std::to_string(j + 1) + " is not nondecreasing");
    }
    return w;
}

Word Word::from_columns(int q, int k, const std::vector<Digits>& columns) {
    Word w(q, k, static_cast<int>(columns.size()));
    for (std::size_t j = 0; j < columns.size(); ++j) {
        if (static_cast<int>(columns[j].size()) != k || !letter_is_valid(columns[j], q))
            throw std::invalid_argument("column " + std::to_string(j + 1) + " is not a valid letter");
        std::copy(columns[j].begin(), columns[j].end(), w.data_.begin() + static_cast<std::ptrdiff_t>(j * k));
    }
    return w;
}

Word Word::from_ranks(int q, int k, std::span<const int> ranks) {
    Word w(q, k, static_cast<int>(ranks.size()));
    for (std::size_t j = 0; j < ranks.size(); ++j) {
        const Letter l = letter_unrank(ranks[j], q, k);
        std::copy(l.digits().begin(), l.digits().end(), w.data_.begin() + static_cast<std::ptrdiff_t>(j * k));
    }
    return w;
}

Letter Word::letter(int j) const {
    auto c = column(j);
    return Letter(q_, Digits(c.begin(), c.end()));
}

Digits Word::row(int i) const {
    Digits r(n_);
    for (int j = 0; j < n_; ++j) r[j] = at(i, j);
    return r;
}

std::vector<Digits> Word::rows() const {
    std::vector<Digits> out(k_);
    for (int i = 0; i < k_; ++i) out[i] = row(i);
    return out;
}

int Word::rank(int j) const { return letter_rank(letter(j)); }

std::vector<int> Word::ranks() const {
    std::vector<int> out(n_);
    for (int j = 0; j < n_; ++j) out[j] = rank(j);
    return out;
}

std::vector<Digits> word_rows(const Word& w) { return w.rows(); }

Word word_from_rows(int q, const std::vector<Digits>& rows) { return Word::from_rows(q, rows); }

std::vector<Word> all_words(int q, int k, int n) {
    const std::int64_t size = alphabet_size(q, k);
    std::vector<Word> out;
    std::vector<int> ranks(n, 0);
    while (true) {
        out.push_back(Word::from_ranks(q, k, ranks));
        int pos = n - 1;
        while (pos >= 0 && ranks[pos] == size - 1) ranks[pos--] = 0;
        if (pos < 0) break;
        ++ranks[pos];
    }
    return out;
}

} // namespace ocdna
