#include <doctest.h>

#include <algorithm>

#include "ocdna/channel.hpp"
#include "ocdna/equivalence.hpp"

using namespace ocdna;

namespace {

Letter L(int q, Digits d) { return Letter(q, std::move(d)); }

std::vector<Word> sample_codebook(const std::vector<Word>& space, SplitMix64& rng) {
    const std::size_t size = 2 + rng.below(3);
    std::vector<Word> book;
    while (book.size() < std::min(size, space.size())) {
        const Word& w = space[rng.below(space.size())];
        if (std::find(book.begin(), book.end(), w) == book.end()) book.push_back(w);
    }
    std::sort(book.begin(), book.end());
    return book;
}

} // namespace

TEST_CASE("map examples") {
    CHECK(complement_reverse(L(2, {0, 0, 1})) == L(2, {0, 1, 1}));
    CHECK(complement_reverse(L(3, {0, 0, 0})) == L(3, {2, 2, 2}));
    CHECK(shift_map(L(2, {0, 1})) == L(2, {0, 0}));
    CHECK(shift_inverse(L(2, {0, 0})) == L(2, {0, 1}));
    CHECK(shift_map(L(2, {1, 1})) == L(2, {0, 1}));
}

TEST_CASE("maps are bijections on every alphabet") {
    for (int q = 2; q <= 4; ++q)
        for (int k = 1; k <= 4; ++k) {
            const auto letters = all_letters(q, k);
            std::vector<Letter> images;
            for (const auto& s : letters) {
                CHECK(complement_reverse(complement_reverse(s)) == s);
                CHECK(shift_inverse(shift_map(s)) == s);
                CHECK(shift_map(shift_inverse(s)) == s);
                images.push_back(shift_map(s));
            }
            std::sort(images.begin(), images.end());
            CHECK(std::adjacent_find(images.begin(), images.end()) == images.end());
        }
}

TEST_CASE("named maps and transport") {
    const auto cr = EquivalenceMap::parse("complement-reverse");
    const auto sh = EquivalenceMap::parse("shift");
    const auto si = EquivalenceMap::parse("shift-inverse");
    CHECK(cr.name() == "complement-reverse");
    CHECK(sh.inverted().name() == "shift-inverse");
    CHECK(si.inverted().name() == "shift");
    CHECK_THROWS(EquivalenceMap::parse("rotate"));

    CHECK(transport_code({}, sh).empty());
    const auto book = all_words(3, 2, 2);
    for (const auto& m : {cr, sh, si}) {
        const auto there = transport_code(book, m);
        CHECK(there.size() == book.size());
        CHECK(transport_code(there, m.inverted()) == book);
    }
    const Word w = Word::from_columns(2, 2, {{0, 1}, {1, 1}});
    CHECK(sh.apply(w) == Word::from_columns(2, 2, {{0, 0}, {0, 1}}));
}

TEST_CASE("codes stay codes under the maps") {
    SplitMix64 rng(7);
    int agreements = 0, codes_seen = 0;
    for (int q = 2; q <= 3; ++q)
        for (int k = 2; k <= 3; ++k)
            for (int n = 1; n <= 3; ++n) {
                const auto space = all_words(q, k, n);
                for (int trial = 0; trial < 25; ++trial) {
                    const auto book = sample_codebook(space, rng);
                    const auto flipped = transport_code(book, EquivalenceMap::parse("complement-reverse"));
                    const auto shifted = transport_code(book, EquivalenceMap::parse("shift"));
                    for (int row = 0; row < k; ++row) {
                        std::vector<int> e(k, 0), mirrored(k, 0);
                        e[row] = 1;
                        mirrored[k - 1 - row] = 1;
                        const bool base = oracle_is_code(book, ErrorModel::sub_per_row(e)).is_code;
                        codes_seen += base;
                        CHECK(base == oracle_is_code(flipped, ErrorModel::sub_per_row(mirrored)).is_code);
                        CHECK(oracle_is_code(book, ErrorModel::del_per_row(e)).is_code ==
                              oracle_is_code(flipped, ErrorModel::del_per_row(mirrored)).is_code);
                        if (row + 1 < k) {
                            std::vector<int> next(k, 0);
                            next[row + 1] = 1;
                            CHECK(base == oracle_is_code(shifted, ErrorModel::sub_per_row(next)).is_code);
                        }
                        ++agreements;
                    }
                    std::vector<int> two(k, 0);
                    two[0] = 1;
                    two[k - 1] = 2;
                    std::vector<int> owt(two.rbegin(), two.rend());
                    CHECK(oracle_is_code(book, ErrorModel::sub_per_row(two)).is_code ==
                          oracle_is_code(flipped, ErrorModel::sub_per_row(owt)).is_code);
                }
            }
    CHECK(agreements > 0);
    CHECK(codes_seen > 0);
}
