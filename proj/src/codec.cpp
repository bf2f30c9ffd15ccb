#include "ocdna/codec.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "ocdna/codes_deletion.hpp"
#include "ocdna/codes_substitution.hpp"
#include "ocdna/errors.hpp"

namespace ocdna {

namespace {

const std::vector<std::pair<Family, std::string>>& family_names() {
    static const std::vector<std::pair<Family, std::string>> names{
        {Family::C1D, "c1d"},         {Family::C2D, "c2d"},           {Family::C3D, "c3d"},
        {Family::C4D, "c4d"},         {Family::CongBinary, "cong-binary"}, {Family::CongQArySingle, "cong-q1"},
        {Family::CongQAryT, "cong-qt"}, {Family::Doll, "doll"},       {Family::Lme1, "lme1"},
        {Family::C1S, "c1s"},         {Family::C2S, "c2s"}};
    return names;
}

bool given_by_n(Family f) {
    switch (f) {
    case Family::C1D:
    case Family::CongBinary:
    case Family::CongQArySingle:
    case Family::CongQAryT:
    case Family::Doll:
    case Family::Lme1:
        return true;
    default:
        return false;
    }
}

std::int64_t target(const CodeSpec& s) { return s.a.empty() ? 0 : s.a.front(); }

void check_message(std::span<const int> msg, int len, std::int64_t base) {
    if (static_cast<int>(msg.size()) != len)
        throw std::invalid_argument("message must have " + std::to_string(len) + " symbols, got " +
                                    std::to_string(msg.size()));
    for (int d : msg)
        if (d < 0 || d >= base) throw std::invalid_argument("message symbol " + std::to_string(d) + " out of range");
}

void check_word(const Word& w, int q, int k, int n) {
    if (w.q() != q || w.k() != k || w.n() != n)
        throw std::invalid_argument("word shape does not match the code (q=" + std::to_string(q) +
                                    " k=" + std::to_string(k) + " n=" + std::to_string(n) + ")");
}

Word take_columns(const Word& w, int len) {
    std::vector<int> r = w.ranks();
    r.resize(static_cast<std::size_t>(len));
    return Word::from_ranks(w.q(), w.k(), r);
}

class C1DCodec final : public Codec {
public:
    explicit C1DCodec(const CodeSpec& s) : Codec(s), code_(s.k, s.n, static_cast<int>(target(s))) {}
    int block_length() const override { return code_.n(); }
    int message_length() const override { return code_.message_length(); }
    ErrorModel channel_model() const override { return ErrorModel::del_total(1); }
    Word encode(std::span<const int> msg) const override { return code_.encode(msg); }
    Word decode(const ReceivedRows& r) const override { return code_.decode(r); }
    std::vector<int> message_of(const Word& w) const override {
        check_word(w, 2, k(), block_length());
        return code_.message_of(w);
    }
    bool contains(const Word& w) const override { return code_.contains(w); }

private:
    C1DCode code_;
};

class MarkerCodec final : public Codec {
public:
    explicit MarkerCodec(const CodeSpec& s) : Codec(s), code_(build(s)) {}
    int block_length() const override { return code_.n(); }
    int message_length() const override { return code_.m(); }
    ErrorModel channel_model() const override { return code_.channel_model(); }
    Word encode(std::span<const int> msg) const override {
        check_message(msg, code_.m(), alphabet_size(q(), k()));
        return code_.encode(msg);
    }
    Word decode(const ReceivedRows& r) const override { return code_.encode(code_.decode(r)); }
    std::vector<int> message_of(const Word& w) const override {
        check_word(w, q(), k(), block_length());
        return code_.payload_of(w).ranks();
    }
    bool contains(const Word& w) const override { return code_.contains(w); }

private:
    static MarkerDeletionCode build(const CodeSpec& s) {
        switch (s.family) {
        case Family::C2D:
            return MarkerDeletionCode::c2d(s.k, s.t, s.m, s.p);
        case Family::C3D:
            return MarkerDeletionCode::c3d(s.q, s.k, s.m);
        default:
            return MarkerDeletionCode::c4d(s.q, s.k, s.t, s.m, s.p);
        }
    }
    MarkerDeletionCode code_;
};

class CongruenceCodec final : public Codec {
public:
    explicit CongruenceCodec(const CodeSpec& s) : Codec(s), code_(build(s)) {}
    int block_length() const override { return code_.n(); }
    int message_length() const override { return code_.n(); }
    bool has_encoder() const override { return false; }
    ErrorModel channel_model() const override { return code_.channel_model(); }
    Word encode(std::span<const int>) const override {
        throw std::invalid_argument("congruence families have no encoder; use contains or decode");
    }
    Word decode(const ReceivedRows& r) const override { return code_.decode(r); }
    std::vector<int> message_of(const Word& w) const override {
        check_word(w, q(), k(), block_length());
        return w.ranks();
    }
    bool contains(const Word& w) const override { return code_.contains(w); }

private:
    static CongruenceCode build(const CodeSpec& s) {
        const auto kind = s.family == Family::CongBinary       ? CongruenceCode::Kind::Binary
                          : s.family == Family::CongQArySingle ? CongruenceCode::Kind::QArySingle
                                                               : CongruenceCode::Kind::QAryT;
        return CongruenceCode(kind, s.q, s.k, s.n, s.a, s.p);
    }
    CongruenceCode code_;
};

class DollCodec final : public Codec {
public:
    explicit DollCodec(const CodeSpec& s) : Codec(s), code_(s.q, s.k, s.n) {}
    int block_length() const override { return code_.n(); }
    int message_length() const override { return code_.message_length(); }
    ErrorModel channel_model() const override {
        std::vector<int> e(static_cast<std::size_t>(k()), 0);
        e[0] = 1;
        return ErrorModel::sub_per_row(e);
    }
    Word encode(std::span<const int> msg) const override { return code_.encode(msg); }
    Word decode(const ReceivedRows& r) const override { return code_.decode(r); }
    std::vector<int> message_of(const Word& w) const override {
        check_word(w, q(), k(), block_length());
        return code_.message_of(w);
    }
    bool contains(const Word& w) const override { return code_.contains(w); }

private:
    DollCode code_;
};

class Lme1Codec final : public Codec {
public:
    explicit Lme1Codec(const CodeSpec& s) : Codec(s), code_(s.k, s.n, static_cast<int>(target(s))) {}
    int block_length() const override { return code_.n(); }
    int message_length() const override { return code_.message_length(); }
    ErrorModel channel_model() const override { return ErrorModel::sub_total(1); }
    Word encode(std::span<const int> msg) const override { return code_.encode(msg); }
    Word decode(const ReceivedRows& r) const override { return code_.decode(r); }
    std::vector<int> message_of(const Word& w) const override {
        check_word(w, 2, k(), block_length());
        return code_.message_of(w);
    }
    bool contains(const Word& w) const override { return code_.contains(w); }

private:
    Cecc1Binary code_;
};

template <class Code>
class PayloadCodec final : public Codec {
public:
    PayloadCodec(const CodeSpec& s, Code code, ErrorModel model)
        : Codec(s), code_(std::move(code)), model_(std::move(model)) {}
    int block_length() const override { return code_.n(); }
    int message_length() const override { return code_.m(); }
    ErrorModel channel_model() const override { return model_; }
    Word encode(std::span<const int> msg) const override {
        check_message(msg, code_.m(), alphabet_size(q(), k()));
        return code_.encode(msg);
    }
    Word decode(const ReceivedRows& r) const override {
        // The decoders return the payload; re-encode to the full codeword.
        return code_.encode(code_.decode(r));
    }
    std::vector<int> message_of(const Word& w) const override {
        check_word(w, q(), k(), block_length());
        return take_columns(w, code_.m()).ranks();
    }
    bool contains(const Word& w) const override { return code_.contains(w); }

private:
    Code code_;
    ErrorModel model_;
};

} // namespace

std::string family_name(Family f) {
    for (const auto& [fam, name] : family_names())
        if (fam == f) return name;
    throw std::logic_error("unnamed family");
}

Family parse_family(const std::string& name) {
    for (const auto& [fam, n] : family_names())
        if (n == name) return fam;
    throw std::invalid_argument("unknown family '" + name + "'");
}

CodeSpec CodeSpec::resolved() const {
    CodeSpec s = *this;
    auto need = [&](bool ok, const char* what) {
        if (!ok) throw std::invalid_argument(family_name(s.family) + " needs " + what);
    };
    if (given_by_n(s.family))
        need(s.n > 0, "n > 0");
    else
        need(s.m > 0, "m > 0");
    switch (s.family) {
    case Family::C1D:
    case Family::Lme1:
        need(s.q == 2, "q = 2");
        if (s.a.empty()) s.a = {0};
        break;
    case Family::C2D:
        need(s.q == 2, "q = 2");
        if (s.p == 0) s.p = next_prime_bertrand(static_cast<std::uint64_t>(s.m));
        break;
    case Family::C3D:
        s.t = 1;
        break;
    case Family::C4D:
        if (s.p == 0) s.p = next_prime_bertrand(static_cast<std::uint64_t>(s.q) * s.m);
        break;
    case Family::CongBinary:
        need(s.q == 2, "q = 2");
        if (s.a.empty()) s.a.assign(static_cast<std::size_t>(s.t), 0);
        if (s.p == 0) s.p = next_prime_bertrand(static_cast<std::uint64_t>(std::max(s.k - 1, s.n)));
        break;
    case Family::CongQArySingle:
        s.t = 1;
        if (s.a.empty()) s.a = {0};
        break;
    case Family::CongQAryT:
        if (s.a.empty()) s.a.assign(static_cast<std::size_t>(s.t), 0);
        if (s.p == 0)
            s.p = next_prime_bertrand(static_cast<std::uint64_t>(std::max<std::int64_t>(s.k - 1, std::int64_t{s.q} * s.n)));
        break;
    case Family::Doll:
        break;
    case Family::C1S:
        if (s.p1 == 0) s.p1 = next_prime_at_least(static_cast<std::uint64_t>(s.m));
        if (s.p2 == 0) s.p2 = next_prime_at_least(static_cast<std::uint64_t>(s.q));
        break;
    case Family::C2S:
        if (s.p == 0) {
            const std::uint64_t row_mod = 2ULL * s.m * (s.q - 1);
            need(s.t >= 2 && s.t <= s.k, "2 <= t <= k");
            s.p = next_prime_bertrand(std::max(row_mod, f_threshold(s.k, s.t)));
        }
        break;
    }
    if ((s.family == Family::CongBinary || s.family == Family::CongQAryT) && static_cast<int>(s.a.size()) != s.t)
        throw std::invalid_argument("the number of targets must equal t");
    return s;
}

CodeSpec CodeSpec::parse(const std::string& text) {
    std::map<std::string, std::string> kv;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream toks(line);
        std::string tok;
        while (toks >> tok) {
            const auto eq = tok.find('=');
            if (eq == std::string::npos || eq == 0) throw std::invalid_argument("expected key=value, got '" + tok + "'");
            kv[tok.substr(0, eq)] = tok.substr(eq + 1);
        }
    }
    CodeSpec s;
    if (!kv.count("family")) throw std::invalid_argument("code spec lacks a family");
    auto num = [&](const std::string& key, auto& field) {
        const auto it = kv.find(key);
        if (it == kv.end()) return;
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(it->second, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != it->second.size() || v < 0)
            throw std::invalid_argument("bad value for " + key + ": '" + it->second + "'");
        field = static_cast<std::remove_reference_t<decltype(field)>>(v);
    };
    s.family = parse_family(kv["family"]);
    num("q", s.q);
    num("k", s.k);
    num("n", s.n);
    num("m", s.m);
    num("t", s.t);
    num("p", s.p);
    num("p1", s.p1);
    num("p2", s.p2);
    if (const auto it = kv.find("a"); it != kv.end()) {
        std::istringstream as(it->second);
        std::string part;
        while (std::getline(as, part, ',')) {
            std::size_t used = 0;
            std::int64_t v = 0;
            try {
                v = std::stoll(part, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used == 0 || used != part.size()) throw std::invalid_argument("bad target list '" + it->second + "'");
            s.a.push_back(v);
        }
    }
    for (const auto& [key, value] : kv)
        if (key != "family" && key != "q" && key != "k" && key != "n" && key != "m" && key != "t" && key != "p" &&
            key != "p1" && key != "p2" && key != "a")
            throw std::invalid_argument("unknown code spec key '" + key + "'");
    return s;
}

std::string CodeSpec::to_string() const {
    std::ostringstream os;
    os << "family=" << family_name(family) << " q=" << q << " k=" << k;
    if (n > 0) os << " n=" << n;
    if (m > 0) os << " m=" << m;
    if (t != 1) os << " t=" << t;
    if (!a.empty()) {
        os << " a=";
        for (std::size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
    }
    if (p) os << " p=" << p;
    if (p1) os << " p1=" << p1;
    if (p2) os << " p2=" << p2;
    return os.str();
}

std::unique_ptr<Codec> make_codec(const CodeSpec& spec) {
    const CodeSpec s = spec.resolved();
    switch (s.family) {
    case Family::C1D:
        return std::make_unique<C1DCodec>(s);
    case Family::C2D:
    case Family::C3D:
    case Family::C4D:
        return std::make_unique<MarkerCodec>(s);
    case Family::CongBinary:
    case Family::CongQArySingle:
    case Family::CongQAryT:
        return std::make_unique<CongruenceCodec>(s);
    case Family::Doll:
        return std::make_unique<DollCodec>(s);
    case Family::Lme1:
        return std::make_unique<Lme1Codec>(s);
    case Family::C1S:
        return std::make_unique<PayloadCodec<C1SCode>>(s, C1SCode(s.q, s.k, s.m, s.p1, s.p2), ErrorModel::sub_total(1));
    case Family::C2S:
        return std::make_unique<PayloadCodec<C2SCode>>(s, C2SCode(s.q, s.k, s.t, s.m, s.p),
                                                       ErrorModel::sub_t_rows(std::vector<int>(s.t, 1)));
    }
    throw std::logic_error("unhandled family");
}

} // namespace ocdna
