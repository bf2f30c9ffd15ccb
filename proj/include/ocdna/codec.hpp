#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "ocdna/alphabet.hpp"
#include "ocdna/channel.hpp"

namespace ocdna {

enum class Family { C1D, C2D, C3D, C4D, CongBinary, CongQArySingle, CongQAryT, Doll, Lme1, C1S, C2S };

std::string family_name(Family f);
/// c1d c2d c3d c4d cong-binary cong-q1 cong-qt doll lme1 c1s c2s.
Family parse_family(const std::string& name);

/// Parameters of one code instance. Unset primes (0) are filled by
/// resolve() with the conventional choice.
struct CodeSpec {
    Family family = Family::C1D;
    int q = 2;
    int k = 2;
    int n = 0; ///< block length where the family is given by n
    int m = 0; ///< payload length where the family is given by m
    int t = 1;
    std::vector<std::int64_t> a; ///< congruence targets
    std::uint64_t p = 0;
    std::uint64_t p1 = 0;
    std::uint64_t p2 = 0;

    /// Fills defaults and checks the fields the family needs.
    CodeSpec resolved() const;
    /// "key=value" pairs separated by spaces or newlines; '#' starts a comment.
    static CodeSpec parse(const std::string& text);
    std::string to_string() const;

    friend bool operator==(const CodeSpec&, const CodeSpec&) = default;
};

class Codec {
public:
    virtual ~Codec() = default;

    const CodeSpec& spec() const { return spec_; }
    int q() const { return spec_.q; }
    int k() const { return spec_.k; }
    virtual int block_length() const = 0;
    /// Length of a message as a rank vector over the alphabet.
    virtual int message_length() const = 0;
    virtual bool has_encoder() const { return true; }
    virtual ErrorModel channel_model() const = 0;

    virtual Word encode(std::span<const int> message) const = 0;
    virtual Word decode(const ReceivedRows& received) const = 0;
    virtual std::vector<int> message_of(const Word& codeword) const = 0;
    virtual bool contains(const Word& w) const = 0;

protected:
    explicit Codec(CodeSpec s) : spec_(std::move(s)) {}
    CodeSpec spec_;
};

std::unique_ptr<Codec> make_codec(const CodeSpec& spec);

} // namespace ocdna
