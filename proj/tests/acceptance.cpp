// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>

#include "ocdna/algebra.hpp"
#include "ocdna/bounds.hpp"
#include "ocdna/channel.hpp"
#include "ocdna/codes_deletion.hpp"
#include "ocdna/codes_substitution.hpp"
#include "ocdna/equivalence.hpp"
#include "ocdna/vt.hpp"

using namespace ocdna;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void expect(bool cond, const std::string& what) {
        if (!cond && ok) detail = what;
        ok = ok && cond;
    }
};

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

std::vector<int> sample_ranks(SplitMix64& rng, int len, int base) {
    std::vector<int> r(len);
    for (auto& v : r) v = static_cast<int>(rng.below(static_cast<std::uint64_t>(base)));
    return r;
}

std::int64_t choose(int n, int r) {
    if (r < 0 || r > n) return 0;
    std::int64_t v = 1;
    for (int i = 1; i <= r; ++i) v = v * (n - r + i) / i;
    return v;
}

ReceivedRows drop(const Word& w, const std::vector<std::pair<int, int>>& cuts) {
    ReceivedRows r = ReceivedRows::of(w);
    for (auto [row, pos] : cuts) r.rows[row].erase(r.rows[row].begin() + pos);
    return r;
}

// Calls f on every pattern of at most two rows, each losing one symbol.
template <class F>
void two_row_deletions(int k, int n, F&& f) {
    f(std::vector<std::pair<int, int>>{});
    for (int a = 0; a < k; ++a)
        for (int i = 0; i < n; ++i) {
            f(std::vector<std::pair<int, int>>{{a, i}});
            for (int b = a + 1; b < k; ++b)
                for (int j = 0; j < n; ++j) f(std::vector<std::pair<int, int>>{{a, i}, {b, j}});
        }
}

std::vector<ReceivedRows> single_subs(const Word& w, const std::vector<int>& rows) {
    std::vector<ReceivedRows> out;
    for (int r : rows)
        for (int j = 0; j < w.n(); ++j)
            for (int v = 0; v < w.q(); ++v) {
                if (v == w.at(r, j)) continue;
                ReceivedRows rr = ReceivedRows::of(w);
                rr.rows[r][j] = v;
                out.push_back(std::move(rr));
            }
    return out;
}

std::vector<Digits> all_seqs(int q, int n) {
    std::vector<Digits> out;
    for (const auto& r : all_rank_seqs(q, n)) out.push_back(r);
    return out;
}

// ---------------------------------------------------------------------------

Outcome ball_sizes() {
    Outcome o;
    for (int q = 2; q <= 4; ++q)
        for (int k = 1; k <= 4; ++k) {
            std::int64_t full = 0;
            for (int l = 1; l <= q - 1; ++l) full += choose(l + k - 1, l);
            for (const auto& L : all_letters(q, k)) {
                const Word w = Word::from_columns(q, k, {L.digits()});
                const auto total = static_cast<std::int64_t>(valid_sub_ball_total(w, 1).size()) - 1;
                const auto per_row = static_cast<std::int64_t>(valid_sub_ball_per_row(w, std::vector<int>(k, 1)).size()) - 1;
                o.expect(total == q - 1 + L[k - 1] - L[0], "total-budget ball size");
                o.expect(per_row == full, "per-row ball size");
            }
        }
    return o;
}

Outcome gspb_identity() {
    Outcome o;
    for (int n = 2; n <= 12; ++n)
        for (int k = 2; k <= 5; ++k) {
            BigInt sum = 0;
            for (int w = 0; w <= n - 1; ++w)
                for (int r = 1; r <= 2 * w + 1; ++r) sum += c_count(n - 1, r, w) * t_count(n, k, w);
            o.expect(sum == v_size(k, n), "n=" + std::to_string(n) + " k=" + std::to_string(k));
        }
    return o;
}

Outcome error_space() {
    Outcome o;
    for (int k = 1; k <= 3; ++k)
        for (int n = 2; n <= 6; ++n) {
            std::set<ReceivedRows> all;
            std::vector<int> e(k, 0);
            e[0] = 1;
            for (const auto& w : all_words(2, k, n))
                for (auto& r : raw_received_set(w, ErrorModel::del_per_row(e))) all.insert(std::move(r));
            o.expect(BigInt(all.size()) == v_size(k, n), "k=" + std::to_string(k) + " n=" + std::to_string(n));
        }
    return o;
}

Outcome c1d_validity() {
    Outcome o;
    for (int k : {2, 3})
        for (int n : {3, 4, 5}) {
            const C1DCode code(k, n, 0);
            std::vector<Word> book;
            for (const auto& w : all_words(2, k, n))
                if (code.contains(w)) book.push_back(w);
            o.expect(oracle_is_code(book, ErrorModel::del_total(1)).is_code, "oracle");
            for (const auto& c : book) {
                o.expect(code.decode(ReceivedRows::of(c)) == c, "clean decode");
                for (int row = 0; row < k; ++row)
                    for (int pos = 0; pos < n; ++pos) o.expect(code.decode(drop(c, {{row, pos}})) == c, "deletion decode");
            }
        }
    return o;
}

Outcome c1d_redundancy() {
    Outcome o;
    const int k = 2;
    for (int n = 3; n <= 6; ++n) {
        const C1DCode code(k, n, 0);
        const int m = ceil_log(k + 1, BigInt(n + 1));
        o.expect(code.redundancy() == m, "redundancy");
        std::set<Word> image;
        for (const auto& msg : all_rank_seqs(k + 1, n - m)) {
            const Word c = code.encode(msg);
            o.expect(code.contains(c), "membership");
            image.insert(c);
        }
        std::int64_t expect = 1;
        for (int i = 0; i < n - m; ++i) expect *= k + 1;
        o.expect(static_cast<std::int64_t>(image.size()) == expect, "image size at n=" + std::to_string(n));
    }
    return o;
}

Outcome doll_code() {
    Outcome o;
    const DollCode code(2, 2, 4);
    std::set<Word> image;
    for (const auto& msg : all_rank_seqs(3, code.message_length())) {
        const Word c = code.encode(msg);
        o.expect(code.contains(c), "membership");
        o.expect(code.message_of(c) == msg, "message recovery");
        image.insert(c);
        o.expect(code.correct(ReceivedRows::of(c)) == c, "clean");
        for (const auto& r : single_subs(c, {0})) o.expect(code.correct(r) == c, "first-row substitution");
    }
    std::int64_t expect = 1;
    for (int i = 0; i < code.message_length(); ++i) expect *= 3;
    o.expect(static_cast<std::int64_t>(image.size()) == expect, "distinct images");
    return o;
}

Outcome lme_code() {
    Outcome o;
    for (int Q = 3; Q <= 5; ++Q)
        for (int n = 2; n <= 7; ++n) {
            std::vector<std::int64_t> class_size(2 * n + 1, 0);
            for (const auto& x : all_seqs(Q, n)) {
                const std::int64_t a = mod_floor(vt(x), 2 * n + 1);
                ++class_size[a];
                if (a != 0) continue;
                for (int i = 0; i < n; ++i)
                    for (int d : {-1, 1}) {
                        Digits y = x;
                        y[i] += d;
                        if (y[i] < 0 || y[i] >= Q) continue;
                        o.expect(lme_decode(y, 0, Q) == x, "1-LME correction");
                    }
            }
            std::int64_t space = 1;
            for (int i = 0; i < n; ++i) space *= Q;
            const auto best = *std::max_element(class_size.begin(), class_size.end());
            o.expect(best * (2 * n + 1) >= space, "pigeonhole class size");
        }
    return o;
}

Outcome vandermonde() {
    Outcome o;
    for (int k = 2; k <= 5; ++k)
        for (int t = 2; t <= k; ++t)
            o.expect(all_submatrices_invertible(k, t, next_prime_bertrand(f_threshold(k, t))), "submatrix invertibility");
    SplitMix64 rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        const std::uint64_t p = std::vector<std::uint64_t>{5, 7, 11, 13, 17, 101}[rng.below(6)];
        const PrimeField f(p);
        const int s = 1 + static_cast<int>(rng.below(4));
        std::vector<int> parts(s);
        for (auto& v : parts) v = static_cast<int>(rng.below(4));
        std::sort(parts.rbegin(), parts.rend());
        std::vector<std::uint64_t> xs(s);
        for (auto& v : xs) v = rng.below(p);
        const auto lhs = vandermonde_shape_det(Partition(parts), xs, f);
        const auto rhs = f.mul(schur_eval(Partition(parts), xs, f), vandermonde_shape_det(Partition(std::vector<int>(s, 0)), xs, f));
        o.expect(lhs == rhs, "Schur factorisation");
    }
    return o;
}

Outcome marker_codes() {
    Outcome o;
    const auto bin = MarkerDeletionCode::c2d(2, 2, 4, 5);
    const auto qar = MarkerDeletionCode::c4d(3, 2, 2, 4, 13);
    o.expect(bin.delta() == ceil_log(3, BigInt(5)) && bin.n() == 4 + 2 * (bin.delta() + 2), "binary length");
    o.expect(bin.redundancy() == 2 * 2 + 2 * bin.delta(), "binary redundancy");
    o.expect(qar.delta() == ceil_log(6, BigInt(13)) && qar.n() == 4 + 2 * (qar.delta() + 2), "q-ary length");
    o.expect(qar.redundancy() == 2 * 2 + 2 * qar.delta(), "q-ary redundancy");
    SplitMix64 rng(9);
    for (const auto* code : {&bin, &qar}) {
        const int base = static_cast<int>(alphabet_size(code->q(), code->k()));
        for (int s = 0; s < 50; ++s) {
            const Word c = code->encode(sample_ranks(rng, code->m(), base));
            const Word payload = code->payload_of(c);
            two_row_deletions(code->k(), code->n(), [&](const auto& cuts) {
                o.expect(code->decode(drop(c, cuts)) == payload, "deletion pattern");
            });
        }
    }
    return o;
}

Outcome single_substitution_codes() {
    Outcome o;
    const C1SCode c1s(3, 2, 3, next_prime_at_least(3), next_prime_at_least(3));
    for (const auto& msg : all_rank_seqs(6, 3)) {
        const Word c = c1s.encode(msg);
        const Word payload = c1s.payload_of(c);
        for (const auto& r : single_subs(c, {0, 1})) o.expect(c1s.decode(r) == payload, "q-ary code");
    }
    for (int n = 2; n <= 6; ++n) {
        const Cecc1Binary code(3, n, 0);
        for (const auto& msg : all_rank_seqs(4, code.message_length())) {
            const Word c = code.encode(msg);
            for (const auto& r : single_subs(c, {0, 1, 2})) o.expect(code.decode(r) == c, "binary code");
        }
    }
    return o;
}

Outcome multi_row_substitution_code() {
    Outcome o;
    // m = 3 keeps the payload at least as long as one syndrome block.
    const int m = 3;
    const std::uint64_t p = next_prime_bertrand(std::max<std::uint64_t>(2 * m, f_threshold(3, 2)));
    const C2SCode code(2, 3, 2, m, p);
    SplitMix64 rng(12);
    std::vector<Word> sample;
    for (int s = 0; s < 50; ++s) {
        const Word c = code.encode(sample_ranks(rng, m, 4));
        const Word payload = code.payload_of(c);
        if (std::find(sample.begin(), sample.end(), c) == sample.end()) sample.push_back(c);
        o.expect(code.decode(ReceivedRows::of(c)) == payload, "clean");
        for (int a = 0; a < 3; ++a)
            for (const auto& r1 : single_subs(c, {a})) {
                o.expect(code.decode(r1) == payload, "one row");
                for (int b = a + 1; b < 3; ++b)
                    for (int j = 0; j < code.n(); ++j) {
                        ReceivedRows r2 = r1;
                        r2.rows[b][j] ^= 1;
                        o.expect(code.decode(r2) == payload, "two rows");
                    }
            }
    }
    o.expect(oracle_is_code(sample, ErrorModel::sub_t_rows({1, 1})).is_code, "oracle on sample");
    return o;
}

Outcome equivalence_transport() {
    Outcome o;
    SplitMix64 rng(100);
    const auto space = all_words(2, 3, 3);
    const auto cr = EquivalenceMap::parse("complement-reverse");
    const auto sh = EquivalenceMap::parse("shift");
    int shifted_codes = 0;
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Word> book;
        const std::size_t size = 2 + rng.below(6);
        while (book.size() < size) {
            const Word& w = space[rng.below(space.size())];
            if (std::find(book.begin(), book.end(), w) == book.end()) book.push_back(w);
        }
        for (const auto& e : std::vector<std::vector<int>>{{1, 0, 0}, {0, 1, 0}, {2, 1, 0}, {1, 1, 1}}) {
            const std::vector<int> rev(e.rbegin(), e.rend());
            o.expect(oracle_is_code(book, ErrorModel::sub_per_row(e)).is_code ==
                         oracle_is_code(transport_code(book, cr), ErrorModel::sub_per_row(rev)).is_code,
                     "complement-reverse");
        }
        const bool e1 = oracle_is_code(book, ErrorModel::sub_per_row({1, 0, 0})).is_code;
        const bool e2 = oracle_is_code(transport_code(book, sh), ErrorModel::sub_per_row({0, 1, 0})).is_code;
        o.expect(e1 == e2, "shift");
        shifted_codes += e1;
    }
    o.expect(shifted_codes > 0, "sample contains codes");
    return o;
}

Outcome bound_sanity() {
    Outcome o;
    for (int k : {2, 3})
        for (int n = 3; n <= 6; ++n) {
            const C1DCode code(k, n, 0);
            BigInt size = 0;
            for (const auto& w : all_words(2, k, n)) size += code.contains(w);
            o.expect(size <= gspb_deletion_bound(n, k).floor(), "C1D");
        }
    {
        const auto c2d = MarkerDeletionCode::c2d(2, 2, 4, 5);
        o.expect(BigInt(81) <= gspb_deletion_bound(c2d.n(), 2).floor(), "C2D");
    }
    for (int k : {2, 3})
        for (int n = 2; n <= 6; ++n) {
            const Cecc1Binary code(k, n, 0);
            BigInt size = 1;
            for (int i = 0; i < code.message_length(); ++i) size *= k + 1;
            o.expect(size <= sp_bound_total(2, k, n, 1).floor(), "binary substitution code");
        }
    {
        const C1SCode code(3, 2, 3, 3, 3);
        o.expect(BigInt(216) <= sp_bound_total(3, 2, code.n(), 1).floor(), "C1S");
        const C2SCode c2s(2, 3, 2, 3, 7);
        o.expect(BigInt(64) <= sp_bound_total(2, 3, c2s.n(), 1).floor(), "C2S");
    }
    for (int n = 2; n <= 7; ++n) {
        // The full VT class C(n;Q,0) is a single-substitution code over Q symbols.
        for (int k = 2; k <= 4; ++k) {
            const int Q = k + 1;
            BigInt size = 0;
            for (const auto& x : all_seqs(Q, n)) size += mod_floor(vt(x), 2 * n + 1) == 0;
            o.expect(size <= sp_bound_total(2, k, n, 1).floor(), "limited-magnitude class");
        }
    }
    return o;
}

} // namespace

int main() {
    struct Criterion {
        const char* id;
        const char* what;
        double limit_s;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {"AC1", "ball sizes of single letters", 1, ball_sizes},
        {"AC2", "generalized sphere packing identity", 1, gspb_identity},
        {"AC3", "first-row deletion error space size", 30, error_space},
        {"AC4", "single composite deletion code: oracle and round trips", 60, c1d_validity},
        {"AC5", "single composite deletion encoder image and redundancy", 60, c1d_redundancy},
        {"AC6", "enumerative code bijectivity and first-row correction", 60, doll_code},
        {"AC7", "limited-magnitude code correction and class sizes", 60, lme_code},
        {"AC8", "Vandermonde submatrices and Schur factorisation", 60, vandermonde},
        {"AC9", "marker deletion codes, binary and q-ary", 120, marker_codes},
        {"AC10", "single substitution codes, q-ary and binary", 60, single_substitution_codes},
        {"AC11", "multi-row substitution code", 120, multi_row_substitution_code},
        {"AC12", "equivalence maps preserve code verdicts", 60, equivalence_transport},
        {"AC13", "code sizes within sphere packing bounds", 60, bound_sanity},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out.ok = false;
            out.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (out.ok && secs > c.limit_s) {
            out.ok = false;
            out.detail = "over time limit";
        }
        failures += !out.ok;
        std::printf("%s %s %s (%.2f s)%s%s\n", out.ok ? "PASS" : "FAIL", c.id, c.what, secs,
                    out.detail.empty() ? "" : ": ", out.detail.c_str());
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
