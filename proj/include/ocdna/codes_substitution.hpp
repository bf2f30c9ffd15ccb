#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ocdna/alphabet.hpp"
#include "ocdna/channel.hpp"

namespace ocdna {

/// Shortened Hamming code over F_Q (Q prime) of length l. For l >= 3 the
/// parity-check matrix keeps every unit column and drops the
/// lexicographically largest other projective columns. Lengths 0, 1, 2 give
/// the one-word codes {empty}, {1}, {11}.
class HammingCode {
public:
    HammingCode(int l, int Q);

    int length() const { return l_; }
    int field() const { return Q_; }
    int redundancy() const { return r_; }
    int dimension() const { return static_cast<int>(info_pos_.size()); }
    BigInt size() const;
    /// r x l, columns in lexicographic order (empty for l < 3).
    const std::vector<Digits>& parity_check() const { return H_; }
    const std::vector<int>& info_positions() const { return info_pos_; }

    Digits encode(std::span<const int> message) const;
    Digits message_of(std::span<const int> codeword) const;
    bool contains(std::span<const int> word) const;
    /// Corrects at most one symbol error.
    Digits decode(std::span<const int> word) const;
    Digits syndrome(std::span<const int> word) const;
    /// Generator rows, systematic on the information positions.
    std::vector<Digits> generator() const;

private:
    int l_;
    int Q_;
    int r_ = 0;
    std::vector<Digits> H_;    // rows
    std::vector<int> info_pos_;
    std::vector<int> unit_pos_; // unit_pos_[b]: column equal to e_b
};

/// Enumerative code for one substitution in the first row. Letters split
/// into A1 (first two entries zero) and A2; |A2| must be prime.
class DollCode {
public:
    DollCode(int q, int k, int n);

    int q() const { return q_; }
    int k() const { return k_; }
    int n() const { return n_; }
    int message_length() const { return m_; }
    int message_base() const { return static_cast<int>(alphabet_size(q_, k_)); }
    const std::vector<int>& a1_ranks() const { return a1_; }
    const std::vector<int>& a2_ranks() const { return a2_; }
    const BigInt& size() const { return total_; }
    /// C(n,l) |A1|^(n-l) |C(l)|.
    BigInt layer_count(int l) const;
    const HammingCode& inner(int l) const { return inner_[l]; }

    /// A2 symbols only, each replaced by its index within A2.
    std::vector<int> project(std::span<const int> ranks) const;
    bool contains(const Word& w) const;
    /// Codeword with 1-based index N in the (l, temp1, temp2, N3) order.
    Word codeword_at(const BigInt& index) const;
    BigInt index_of(const Word& w) const;
    Word encode(std::span<const int> message) const;
    std::vector<int> message_of(const Word& codeword) const;
    /// Repairs one substitution in the first row.
    Word correct(const ReceivedRows& received) const;
    Word decode(const ReceivedRows& received) const { return correct(received); }

    /// Rows l, C(n,l), |A1|^(n-l), |C(l)|, generator (rows joined by '|').
    std::string table_csv() const;

private:
    int q_;
    int k_;
    int n_;
    int m_;
    std::vector<int> a1_;
    std::vector<int> a2_;
    std::vector<int> a2_index_; // rank -> index in A2, or -1
    std::vector<HammingCode> inner_;
    BigInt total_;
};

BigInt doll_size(int n, int k);
/// floor(log_{k+1}(((k+1)^(n+1) - (k-1)^(n+1)) / (4(n+1)))).
int doll_m(int n, int k);

/// Binary single composite substitution code built on the limited-magnitude
/// code over ranks: VT(ranks) = a (mod 2n+1).
class Cecc1Binary {
public:
    Cecc1Binary(int k, int n, int a);

    int k() const { return k_; }
    int n() const { return n_; }
    int a() const { return a_; }
    int message_length() const;
    bool contains(const Word& w) const;
    Word encode(std::span<const int> message) const;
    std::vector<int> message_of(const Word& codeword) const;
    Word decode(const ReceivedRows& received) const;

private:
    int k_;
    int n_;
    int a_;
};

struct Q1Checksums {
    std::int64_t digit_sum;   ///< mod 2q-1
    std::int64_t vt_sum;      ///< mod p1
    std::int64_t square_sum;  ///< mod p2

    friend bool operator==(const Q1Checksums&, const Q1Checksums&) = default;
};

Q1Checksums q1cecc_checksums(const Word& x, std::uint64_t p1, std::uint64_t p2);
/// One substitution anywhere, given the three checksums of the original.
Word q1cecc_decode(const ReceivedRows& received, const Q1Checksums& sums, std::uint64_t p1, std::uint64_t p2);

/// Single composite substitution code for q > 2: payload, two constant
/// columns holding the digit sum mod 2q-1 as (a, b), then the packed
/// value vt_sum * p2 + square_sum in Delta base-Q digits.
class C1SCode {
public:
    C1SCode(int q, int k, int m, std::uint64_t p1, std::uint64_t p2);

    int q() const { return q_; }
    int k() const { return k_; }
    int m() const { return m_; }
    std::uint64_t p1() const { return p1_; }
    std::uint64_t p2() const { return p2_; }
    int delta() const { return delta_; }
    int n() const { return m_ + 2 + delta_; }

    Word encode(std::span<const int> payload_ranks) const;
    Word encode(const Word& payload) const;
    bool contains(const Word& w) const;
    Word payload_of(const Word& codeword) const;
    Word decode(const ReceivedRows& received) const;

private:
    int q_;
    int k_;
    int m_;
    std::uint64_t p1_;
    std::uint64_t p2_;
    int delta_;
};

/// t rows with one substitution each: payload, a duplicated constant
/// column per row holding Sum(x_i) mod q, then t blocks of Delta syndrome
/// digits followed by k constant block-parity columns.
class C2SCode {
public:
    C2SCode(int q, int k, int t, int m, std::uint64_t p);

    int q() const { return q_; }
    int k() const { return k_; }
    int t() const { return t_; }
    int m() const { return m_; }
    std::uint64_t p() const { return p_; }
    int delta() const { return delta_; }
    int n() const { return m_ + 2 * k_ + t_ * (delta_ + k_); }

    /// 0-based column positions.
    int row_parity_pos(int row, int copy) const { return m_ + 2 * row + copy; }
    int block_pos(int j) const { return m_ + 2 * k_ + j * (delta_ + k_); }
    int block_parity_pos(int j, int row) const { return block_pos(j) + delta_ + row; }

    std::vector<std::uint64_t> block_values(const Word& payload) const;
    Word encode(std::span<const int> payload_ranks) const;
    Word encode(const Word& payload) const;
    bool contains(const Word& w) const;
    Word payload_of(const Word& codeword) const;
    Word decode(const ReceivedRows& received) const;

private:
    int q_;
    int k_;
    int t_;
    int m_;
    std::uint64_t p_;
    int delta_;
};

} // namespace ocdna
