#include <doctest.h>

#include <set>

#include "ocdna/channel.hpp"
#include "ocdna/errors.hpp"
#include "ocdna/vt.hpp"

using namespace ocdna;

namespace {

std::vector<Digits> all_seqs(int q, int n) {
    std::vector<Digits> out;
    Digits d(n, 0);
    while (true) {
        out.push_back(d);
        int i = n - 1;
        while (i >= 0 && d[i] == q - 1) d[i--] = 0;
        if (i < 0) break;
        ++d[i];
    }
    return out;
}

std::set<Digits> single_deletions(const Digits& x) {
    std::set<Digits> out;
    for (std::size_t i = 0; i < x.size(); ++i) {
        Digits y = x;
        y.erase(y.begin() + static_cast<std::ptrdiff_t>(i));
        out.insert(y);
    }
    return out;
}

} // namespace

TEST_CASE("checksum examples") {
    CHECK(vt(Digits{0, 1, 1}) == 5);
    CHECK(vt(Digits{0, 1, 1, 0}) == 5);
    CHECK(vt(Digits{0, 0, 0, 0}) == 0);
    CHECK(digit_sum(Digits{2, 1, 0}) == 3);
    CHECK(mod_floor(-1, 5) == 4);
    CHECK(mod_floor(10, 5) == 0);
}

TEST_CASE("binary single-deletion decoding") {
    CHECK(vt_decode_one_deletion(Digits{0, 1, 0}, 0, 5) == Digits{0, 1, 1, 0});
    CHECK(vt_decode_one_deletion(Digits{0, 0, 0}, 0, 5) == Digits{0, 0, 0, 0});
    CHECK(vt_decode_one_deletion(Digits{}, 1, 2) == Digits{1});
    for (int n = 1; n <= 8; ++n)
        for (const auto& x : all_seqs(2, n))
            for (std::int64_t N : {n + 1, 2 * n + 1})
                for (const auto& y : single_deletions(x))
                    CHECK(vt_decode_one_deletion(y, mod_floor(vt(x), N), N) == x);
}

TEST_CASE("differential map") {
    CHECK(psi(Digits{1, 2, 0}, 3) == Digits{2, 2, 0});
    CHECK(psi_inverse(Digits{2, 2, 0}, 3) == Digits{1, 2, 0});
    CHECK(psi(Digits{2, 2, 2, 2}, 3) == Digits{0, 0, 0, 2});
    for (int q = 2; q <= 4; ++q)
        for (int n = 1; n <= 5; ++n)
            for (const auto& x : all_seqs(q, n)) CHECK(psi_inverse(psi(x, q), q) == x);
}

TEST_CASE("q-ary single-deletion decoding") {
    for (int c = 0; c < 3; ++c) {
        const Digits x{c};
        CHECK(qary_decode_one_deletion(Digits{}, psi_syndrome(x, 3), 3, 1) == x);
    }
    const Digits x{0, 1, 0};
    CHECK(qary_decode_one_deletion(Digits{0, 0}, psi_syndrome(x, 3), 3, 3) == x);

    for (int q = 2; q <= 4; ++q)
        for (int n = 1; n <= 6; ++n)
            for (const auto& w : all_seqs(q, n))
                for (const auto& y : single_deletions(w)) CHECK(qary_decode_one_deletion(y, psi_syndrome(w, q), q, n) == w);

    // Binary case against a direct insertion search filtered by syndrome.
    SplitMix64 rng(100);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + static_cast<int>(rng.below(7));
        Digits w(n);
        for (auto& b : w) b = static_cast<int>(rng.below(2));
        Digits y = w;
        y.erase(y.begin() + static_cast<std::ptrdiff_t>(rng.below(n)));
        const std::int64_t a = psi_syndrome(w, 2);
        std::set<Digits> hits;
        for (int pos = 0; pos < n; ++pos)
            for (int b = 0; b < 2; ++b) {
                Digits c = y;
                c.insert(c.begin() + pos, b);
                if (psi_syndrome(c, 2) == a) hits.insert(c);
            }
        REQUIRE(hits.size() == 1);
        CHECK(qary_decode_one_deletion(y, a, 2, n) == *hits.begin());
    }
}

TEST_CASE("limited-magnitude code examples") {
    CHECK(lme_decode(Digits{0, 2}, 0, 3) == Digits{1, 2});
    CHECK(lme_decode(Digits{1, 2}, 0, 3) == Digits{1, 2});
    CHECK_THROWS(lme_layout(5, 2));
    const auto lay = lme_layout(9, 3);
    CHECK(lay.m == 2);
    CHECK(lay.check_pos == std::vector<int>{0, 2});
    CHECK(lme_message_length(9, 3) == 6);
    CHECK(lme_encode(Digits{}, 0, 3, 2) == Digits{0, 0});

    // n = 2, Q = 3: the image is exactly the VT class mod 5.
    for (std::int64_t a = 0; a < 5; ++a) {
        std::set<Digits> cls;
        for (const auto& c : all_seqs(3, 2))
            if (mod_floor(vt(c), 5) == a) cls.insert(c);
        for (const auto& c : all_seqs(3, 2)) CHECK(lme_contains(c, a, 3) == (cls.count(c) == 1));
    }
}

TEST_CASE("limited-magnitude encoder is systematic") {
    for (int n = 2; n <= 9; ++n) {
        const int len = lme_message_length(n, 3);
        const auto lay = lme_layout(n, 3);
        for (std::int64_t a = 0; a <= 2 * n; ++a)
            for (const auto& msg : all_seqs(3, len)) {
                const Digits c = lme_encode(msg, a, 3, n);
                REQUIRE(static_cast<int>(c.size()) == n);
                CHECK(mod_floor(vt(c), 2 * n + 1) == a);
                CHECK(lme_extract(c, 3) == msg);
                for (int i = 0; i < len; ++i) CHECK(c[lay.info_pos[i]] == msg[i]);
            }
    }
}

TEST_CASE("limited-magnitude decoder corrects every +-1 change") {
    for (int Q = 3; Q <= 5; ++Q)
        for (int n = 2; n <= (Q == 5 ? 6 : 7); ++n)
            for (const auto& x : all_seqs(Q, n)) {
                const std::int64_t a = mod_floor(vt(x), 2 * n + 1);
                CHECK(lme_decode(x, a, Q) == x);
                for (int i = 0; i < n; ++i)
                    for (int d : {-1, 1}) {
                        Digits y = x;
                        y[i] += d;
                        if (y[i] < 0 || y[i] >= Q) continue;
                        CHECK(lme_decode(y, a, Q) == x);
                    }
            }
}

TEST_CASE("q-ary single-substitution decoding") {
    CHECK(qary_decode_one_substitution(Digits{2, 2}, vt(Digits{1, 2}) % 8, 0, 3) == Digits{1, 2});
    for (int q = 2; q <= 4; ++q)
        for (int n = 1; n <= 6; ++n)
            for (const auto& x : all_seqs(q, n)) {
                const std::int64_t vm = mod_floor(vt(x), 2 * n * (q - 1));
                const std::int64_t sm = mod_floor(digit_sum(x), q);
                CHECK(qary_decode_one_substitution(x, vm, sm, q) == x);
                for (int i = 0; i < n; ++i)
                    for (int v = 0; v < q; ++v) {
                        if (v == x[i]) continue;
                        Digits y = x;
                        y[i] = v;
                        CHECK(qary_decode_one_substitution(y, vm, sm, q) == x);
                    }
            }
    // Last position flipped between 0 and q-1.
    const Digits x{1, 2, 0};
    Digits y = x;
    y[2] = 2;
    CHECK(qary_decode_one_substitution(y, mod_floor(vt(x), 12), digit_sum(x) % 3, 3) == x);
}
