#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ocdna/alphabet.hpp"
#include "ocdna/channel.hpp"

namespace ocdna {

/// Binary single composite deletion code: sum_i VT(row_i) = a (mod n+1).
/// Letters are identified with their ranks (the number of ones).
class C1DCode {
public:
    C1DCode(int k, int n, int a);

    int k() const { return k_; }
    int n() const { return n_; }
    int a() const { return a_; }
    /// Number of check positions, ceil(log_{k+1}(n+1)).
    int redundancy() const { return static_cast<int>(check_pos_.size()); }
    int message_length() const { return n_ - redundancy(); }
    /// 0-based positions (k+1)^j - 1.
    const std::vector<int>& check_positions() const { return check_pos_; }

    bool contains(const Word& w) const;
    Word encode(std::span<const int> message) const;
    Word decode(const ReceivedRows& received) const;
    std::vector<int> message_of(const Word& codeword) const;

private:
    int k_;
    int n_;
    int a_;
    std::vector<int> check_pos_;
    std::vector<int> info_pos_;
};

/// Codes defined by row-syndrome congruences, with no encoder.
///   Binary:     sum_i i^j VT(row_i) = a_j (mod p), j < t
///   QArySingle: sum_i VT(psi(row_i)) = a (mod qn)
///   QAryT:      sum_i i^j [VT(psi(row_i)) mod qn] = a_j (mod p), j < t
class CongruenceCode {
public:
    enum class Kind { Binary, QArySingle, QAryT };

    CongruenceCode(Kind kind, int q, int k, int n, std::vector<std::int64_t> targets, std::uint64_t p = 0);

    Kind kind() const { return kind_; }
    int q() const { return q_; }
    int k() const { return k_; }
    int n() const { return n_; }
    int t() const { return static_cast<int>(targets_.size()); }
    std::uint64_t p() const { return p_; }
    const std::vector<std::int64_t>& targets() const { return targets_; }

    /// The syndrome vector of a word (the a_j it would satisfy).
    std::vector<std::int64_t> syndromes(const Word& w) const;
    bool contains(const Word& w) const;
    /// Up to t rows (one for QArySingle) may each have lost one symbol.
    Word decode(const ReceivedRows& received) const;
    ErrorModel channel_model() const;

private:
    std::int64_t row_value(std::span<const int> row) const;

    Kind kind_;
    int q_;
    int k_;
    int n_;
    std::vector<std::int64_t> targets_;
    std::uint64_t p_;
};

/// The marker-based constructions. A codeword is the m-column payload
/// followed, for j = 0..t-1, by an all-zero column, an all-one column and
/// Delta base-Q digits of sum_i i^j s_i mod modulus, where s_i is the row
/// syndrome.
///   C2D: q = 2, s_i = VT(x_i), modulus = prime p > m.
///   C3D: q >= 3, t = 1, s_i = VT(psi(x_i)) mod qm, modulus = qm.
///   C4D: q >= 3, s_i = VT(psi(x_i)) mod qm, modulus = prime p > qm.
class MarkerDeletionCode {
public:
    enum class Kind { C2D, C3D, C4D };

    static MarkerDeletionCode c2d(int k, int t, int m, std::uint64_t p);
    static MarkerDeletionCode c3d(int q, int k, int m);
    static MarkerDeletionCode c4d(int q, int k, int t, int m, std::uint64_t p);

    Kind kind() const { return kind_; }
    int q() const { return q_; }
    int k() const { return k_; }
    int t() const { return t_; }
    int m() const { return m_; }
    std::uint64_t modulus() const { return modulus_; }
    int delta() const { return delta_; }
    int n() const { return m_ + t_ * (delta_ + 2); }
    int redundancy() const { return n() - m_; }

    std::int64_t row_syndrome(std::span<const int> row) const;
    std::vector<std::uint64_t> block_values(const Word& payload) const;
    Word encode(const Word& payload) const;
    Word encode(std::span<const int> payload_ranks) const;
    bool contains(const Word& w) const;
    Word payload_of(const Word& codeword) const;
    /// Recovers the payload when at most t rows each lost one symbol.
    Word decode(const ReceivedRows& received) const;
    ErrorModel channel_model() const;

    /// 0-based segment holding the deletion of a short row: 0 for the
    /// payload segment, s >= 1 for the segment carrying digit block s-1.
    int locate_segment(std::span<const int> short_row) const;

private:
    MarkerDeletionCode(Kind kind, int q, int k, int t, int m, std::uint64_t modulus);
    int marker_pos(int j) const { return m_ + j * (delta_ + 2); }
    Digits decode_row(std::span<const int> prefix, std::int64_t value) const;

    Kind kind_;
    int q_;
    int k_;
    int t_;
    int m_;
    std::uint64_t modulus_;
    int delta_;
    int one_rank_;
};

} // namespace ocdna
