#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "ocdna/algebra.hpp"

namespace ocdna {

/// True iff digits is nondecreasing with entries in [0, q-1].
bool letter_is_valid(std::span<const int> digits, int q);

/// Number of nondecreasing length-k columns over q symbols, C(k+q-1, q-1).
/// Also defined for q = 1 and k = 0 (both give 1) and q = 0 (gives 0).
std::int64_t alphabet_size(int q, int k);

/// One ordered composite symbol: a nondecreasing column of k digits.
class Letter {
public:
    Letter(int q, Digits digits);

    int q() const { return q_; }
    int k() const { return static_cast<int>(digits_.size()); }
    const Digits& digits() const { return digits_; }
    int operator[](int i) const { return digits_[i]; }
    /// Occurrences of symbol in the column.
    int weight(int symbol) const;

    friend bool operator==(const Letter&, const Letter&) = default;
    friend auto operator<=>(const Letter&, const Letter&) = default;

private:
    int q_;
    Digits digits_;
};

/// Position of the letter in the ascending order of its weight value
/// sum_{i>=1} w_i (k+1)^(i-1). For q = 2 this is the number of ones.
int letter_rank(const Letter& letter);
Letter letter_unrank(std::int64_t rank, int q, int k);

/// All letters of the alphabet in rank order.
std::vector<Letter> all_letters(int q, int k);

/// A k x n matrix with valid columns, stored column-major.
class Word {
public:
    Word() = default;
    /// All-zero word.
    Word(int q, int k, int n);

    static Word from_rows(int q, const std::vector<Digits>& rows);
    static Word from_columns(int q, int k, const std::vector<Digits>& columns);
    static Word from_ranks(int q, int k, std::span<const int> ranks);

    int q() const { return q_; }
    int k() const { return k_; }
    int n() const { return n_; }

    int at(int row, int col) const { return data_[static_cast<std::size_t>(col) * k_ + row]; }
    std::span<const int> column(int j) const {
        return {data_.data() + static_cast<std::size_t>(j) * k_, static_cast<std::size_t>(k_)};
    }
    Letter letter(int j) const;
    Digits row(int i) const;
    std::vector<Digits> rows() const;
    int rank(int j) const;
    std::vector<int> ranks() const;

    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word&, const Word&) = default;

private:
    int q_ = 2;
    int k_ = 0;
    int n_ = 0;
    Digits data_;
};

std::vector<Digits> word_rows(const Word& w);
Word word_from_rows(int q, const std::vector<Digits>& rows);

/// Every word of length n over the alphabet, in rank-lexicographic order
/// (first column most significant). Intended for desk-scale sweeps.
std::vector<Word> all_words(int q, int k, int n);

} // namespace ocdna
