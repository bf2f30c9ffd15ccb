#include <doctest.h>

#include <set>

#include "ocdna/algebra.hpp"
#include "ocdna/codes_deletion.hpp"
#include "ocdna/vt.hpp"

using namespace ocdna;

namespace {

std::vector<std::vector<int>> all_rank_seqs(int base, int len) {
    std::vector<std::vector<int>> out;
    std::vector<int> d(len, 0);
    while (true) {
        out.push_back(d);
        int i = len - 1;
        while (i >= 0 && d[i] == base - 1) d[i--] = 0;
        if (i < 0) break;
        ++d[i];
    }
    return out;
}

ReceivedRows drop(const Word& w, const std::vector<std::pair<int, int>>& cuts) {
    ReceivedRows r = ReceivedRows::of(w);
    for (auto [row, pos] : cuts) r.rows[row].erase(r.rows[row].begin() + pos);
    return r;
}

// Every pattern where a set of at most t rows each loses one symbol.
template <class F>
void for_each_pattern(int k, int n, int t, F&& f) {
    f(std::vector<std::pair<int, int>>{});
    for (unsigned mask = 1; mask < (1u << k); ++mask) {
        const int rows = __builtin_popcount(mask);
        if (rows > t) continue;
        std::vector<int> which;
        for (int i = 0; i < k; ++i)
            if (mask >> i & 1u) which.push_back(i);
        std::vector<int> pos(rows, 0);
        while (true) {
            std::vector<std::pair<int, int>> cuts;
            for (int j = 0; j < rows; ++j) cuts.push_back({which[j], pos[j]});
            f(cuts);
            int j = rows - 1;
            while (j >= 0 && pos[j] == n - 1) pos[j--] = 0;
            if (j < 0) break;
            ++pos[j];
        }
    }
}

std::vector<int> sample_ranks(SplitMix64& rng, int len, int base) {
    std::vector<int> r(len);
    for (auto& v : r) v = static_cast<int>(rng.below(static_cast<std::uint64_t>(base)));
    return r;
}

} // namespace

TEST_CASE("single composite deletion code examples") {
    const C1DCode code(2, 3, 0);
    CHECK(code.redundancy() == 2);
    CHECK(code.check_positions() == std::vector<int>{0, 2});
    CHECK(code.contains(Word(2, 2, 3)));
    const Word ex = Word::from_ranks(2, 2, std::vector<int>{0, 2, 0});
    CHECK(code.contains(ex));
    CHECK_FALSE(C1DCode(2, 3, 1).contains(ex));
    CHECK(code.encode(std::vector<int>{2}) == ex);
    CHECK(code.encode(std::vector<int>{1}).ranks() == std::vector<int>{2, 1, 0});
    CHECK(code.decode(ReceivedRows::of(ex)) == ex);
    CHECK(code.decode(drop(ex, {{0, 1}})) == ex);
    CHECK(code.message_of(ex) == std::vector<int>{2});
}

TEST_CASE("single composite deletion code: sweeps") {
    for (int k = 1; k <= 3; ++k)
        for (int n = 3; n <= 6; ++n)
            for (int a = 0; a <= n; a += (n > 4 ? n : 1)) {
                const C1DCode code(k, n, a);
                std::set<Word> image;
                for (const auto& msg : all_rank_seqs(k + 1, code.message_length())) {
                    const Word c = code.encode(msg);
                    CHECK(code.contains(c));
                    CHECK(code.message_of(c) == msg);
                    image.insert(c);
                    for (int row = 0; row < k; ++row)
                        for (int pos = 0; pos < n; ++pos) CHECK(code.decode(drop(c, {{row, pos}})) == c);
                }
                std::int64_t expect = 1;
                for (int i = 0; i < code.message_length(); ++i) expect *= k + 1;
                CHECK(static_cast<std::int64_t>(image.size()) == expect);
            }
}

TEST_CASE("single composite deletion code passes the oracle") {
    for (int k = 1; k <= 3; ++k)
        for (int n = 3; n <= 5; ++n) {
            const C1DCode code(k, n, 0);
            std::vector<Word> book;
            for (const auto& w : all_words(2, k, n))
                if (code.contains(w)) book.push_back(w);
            CHECK(oracle_is_code(book, ErrorModel::del_total(1)).is_code);
        }
}

TEST_CASE("congruence codes") {
    using K = CongruenceCode::Kind;
    CHECK_THROWS(CongruenceCode(K::Binary, 2, 3, 4, {0, 0}, 4));
    CHECK_THROWS(CongruenceCode(K::Binary, 2, 3, 4, {0, 0}, 3));
    const CongruenceCode code(K::Binary, 2, 3, 4, {0, 0}, 5);
    CHECK(code.contains(Word(2, 3, 4)));
    CHECK(code.channel_model().describe() == ErrorModel::del_t_rows({1, 1}).describe());

    // Syndromes recomputed by hand: sum_i i^j VT(row_i) mod p with 1-based rows.
    const Word w = Word::from_rows(2, {{0, 1, 0, 0}, {0, 1, 1, 0}, {1, 1, 1, 0}});
    const std::int64_t s0 = (2 + 5 + 6) % 5, s1 = (1 * 2 + 2 * 5 + 3 * 6) % 5;
    CHECK(code.syndromes(w) == std::vector<std::int64_t>{s0, s1});

    const CongruenceCode qs(K::QArySingle, 3, 2, 3, {0});
    CHECK(qs.contains(Word(3, 2, 3)));
    const Word z = Word::from_ranks(3, 2, std::vector<int>{1, 4, 5});
    std::int64_t sum = 0;
    for (const auto& row : z.rows()) sum += psi_syndrome(row, 3);
    CHECK(qs.syndromes(z) == std::vector<std::int64_t>{sum % 9});

    // Deletions in rows 1 and 3.
    const CongruenceCode cls(K::Binary, 2, 3, 4, code.syndromes(w), 5);
    CHECK(cls.decode(drop(w, {{0, 1}, {2, 3}})) == w);
}

TEST_CASE("congruence codes: exhaustive decoding and oracle") {
    using K = CongruenceCode::Kind;
    int checked = 0;
    for (std::int64_t a0 = 0; a0 < 5; ++a0)
        for (std::int64_t a1 = 0; a1 < 5; ++a1) {
            const CongruenceCode code(K::Binary, 2, 3, 4, {a0, a1}, 5);
            std::vector<Word> book;
            for (const auto& w : all_words(2, 3, 4))
                if (code.contains(w)) book.push_back(w);
            for (const auto& c : book)
                for_each_pattern(3, 4, 2, [&](const auto& cuts) {
                    CHECK(code.decode(drop(c, cuts)) == c);
                    ++checked;
                });
            CHECK(oracle_is_code(book, code.channel_model()).is_code);
        }
    CHECK(checked > 0);

    const CongruenceCode q1(K::QArySingle, 3, 2, 3, {4});
    const CongruenceCode qt(K::QAryT, 3, 2, 3, {1, 2}, 11);
    for (const auto& w : all_words(3, 2, 3)) {
        if (q1.contains(w))
            for_each_pattern(2, 3, 1, [&](const auto& cuts) { CHECK(q1.decode(drop(w, cuts)) == w); });
        if (qt.contains(w))
            for_each_pattern(2, 3, 2, [&](const auto& cuts) { CHECK(qt.decode(drop(w, cuts)) == w); });
    }
}

TEST_CASE("binary marker code example") {
    const auto code = MarkerDeletionCode::c2d(2, 2, 4, 5);
    CHECK(code.delta() == 2);
    CHECK(code.n() == 12);
    CHECK(code.redundancy() == 2 * 2 + 2 * 2);
    const Word c = code.encode(std::vector<int>{1, 0, 2, 1});
    CHECK(c.ranks() == std::vector<int>{1, 0, 2, 1, 0, 2, 1, 0, 0, 2, 1, 1});
    CHECK(code.contains(c));
    CHECK(code.payload_of(c).ranks() == std::vector<int>{1, 0, 2, 1});
    CHECK(code.encode(std::vector<int>{0, 0, 0, 0}).ranks() == std::vector<int>{0, 0, 0, 0, 0, 2, 0, 0, 0, 2, 0, 0});
    CHECK(code.decode(ReceivedRows::of(c)) == code.payload_of(c));
    CHECK(code.decode(drop(c, {{0, 0}})) == code.payload_of(c));

    const Digits row0 = c.row(0);
    Digits early = row0, late = row0;
    early.erase(early.begin());
    late.pop_back();
    CHECK(code.locate_segment(early) == 0);
    CHECK(code.locate_segment(late) == 2);

    CHECK_THROWS(MarkerDeletionCode::c2d(2, 2, 4, 4));
    CHECK_THROWS(MarkerDeletionCode::c2d(2, 3, 4, 5));
    CHECK_THROWS(MarkerDeletionCode::c2d(2, 2, 4, 3));
}

TEST_CASE("binary marker code: deletion sweeps") {
    SplitMix64 rng(21);
    for (auto [k, t, m] : std::vector<std::tuple<int, int, int>>{{2, 2, 4}, {3, 2, 4}, {3, 3, 6}}) {
        if (m < f_threshold(k, t)) m = static_cast<int>(f_threshold(k, t));
        const auto code = MarkerDeletionCode::c2d(k, t, m, next_prime_bertrand(static_cast<std::uint64_t>(m)));
        CHECK(code.n() == m + t * (code.delta() + 2));
        const int samples = k == 3 && t == 3 ? 2 : 20;
        for (int s = 0; s < samples; ++s) {
            const Word c = code.encode(sample_ranks(rng, m, k + 1));
            CHECK(code.contains(c));
            const Word payload = code.payload_of(c);
            for_each_pattern(k, code.n(), t, [&](const auto& cuts) { CHECK(code.decode(drop(c, cuts)) == payload); });
        }
    }
}

TEST_CASE("q-ary single marker code") {
    const auto code = MarkerDeletionCode::c3d(3, 2, 3);
    CHECK(code.t() == 1);
    CHECK(code.modulus() == 9);
    CHECK(code.redundancy() == 2 + code.delta());
    for (const auto& msg : all_rank_seqs(6, 3)) {
        const Word c = code.encode(msg);
        CHECK(code.contains(c));
        const Word payload = code.payload_of(c);
        CHECK(payload.ranks() == msg);
        for_each_pattern(2, code.n(), 1, [&](const auto& cuts) { CHECK(code.decode(drop(c, cuts)) == payload); });
    }
    // A deletion inside the check segment leaves the payload readable directly.
    const Word c = code.encode(std::vector<int>{5, 3, 1});
    Digits r = c.row(1);
    r.erase(r.begin() + code.n() - 1);
    CHECK(code.locate_segment(r) == 1);
    CHECK_THROWS(MarkerDeletionCode::c3d(2, 2, 3));
}

TEST_CASE("q-ary multi-row marker code") {
    const auto code = MarkerDeletionCode::c4d(3, 2, 2, 4, 13);
    CHECK(code.n() == 12);
    CHECK(code.redundancy() == 2 * 2 + 2 * code.delta());
    CHECK_THROWS(MarkerDeletionCode::c4d(3, 2, 2, 4, 11));
    SplitMix64 rng(5);
    for (int s = 0; s < 25; ++s) {
        const Word c = code.encode(sample_ranks(rng, 4, 6));
        CHECK(code.contains(c));
        const Word payload = code.payload_of(c);
        for_each_pattern(2, code.n(), 2, [&](const auto& cuts) { CHECK(code.decode(drop(c, cuts)) == payload); });
    }
}
