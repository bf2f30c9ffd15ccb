#include "ocdna/equivalence.hpp"

#include <stdexcept>

namespace ocdna {

Letter complement_reverse(const Letter& s) {
    const int q = s.q();
    const int k = s.k();
    Digits out(k);
    for (int i = 0; i < k; ++i) out[i] = q - 1 - s[k - 1 - i];
    return Letter(q, std::move(out));
}

Letter shift_map(const Letter& s) {
    const int q = s.q();
    const int k = s.k();
    const int top = q - 1 - s[k - 1];
    Digits out(k);
    out[0] = top;
    for (int i = 1; i < k; ++i) out[i] = s[i - 1] + top;
    return Letter(q, std::move(out));
}

Letter shift_inverse(const Letter& s) {
    const int q = s.q();
    const int k = s.k();
    Digits out(k);
    for (int i = 0; i + 1 < k; ++i) out[i] = s[i + 1] - s[0];
    out[k - 1] = q - 1 - s[0];
    return Letter(q, std::move(out));
}

EquivalenceMap EquivalenceMap::parse(const std::string& name) {
    if (name == "complement-reverse") return {MapKind::ComplementReverse, false};
    if (name == "shift") return {MapKind::Shift, false};
    if (name == "shift-inverse") return {MapKind::Shift, true};
    throw std::invalid_argument("unknown map '" + name + "'");
}

std::string EquivalenceMap::name() const {
    if (kind == MapKind::ComplementReverse) return "complement-reverse";
    return inverse ? "shift-inverse" : "shift";
}

EquivalenceMap EquivalenceMap::inverted() const {
    if (kind == MapKind::ComplementReverse) return *this;
    return {kind, !inverse};
}

Letter EquivalenceMap::apply(const Letter& s) const {
    if (kind == MapKind::ComplementReverse) return complement_reverse(s);
    return inverse ? shift_inverse(s) : shift_map(s);
}

Word EquivalenceMap::apply(const Word& w) const {
    std::vector<Digits> cols;
    cols.reserve(w.n());
    for (int j = 0; j < w.n(); ++j) cols.push_back(apply(w.letter(j)).digits());
    return Word::from_columns(w.q(), w.k(), cols);
}

std::vector<Word> transport_code(const std::vector<Word>& codebook, const EquivalenceMap& map) {
    std::vector<Word> out;
    out.reserve(codebook.size());
    for (const auto& w : codebook) {
        if (w.q() != codebook.front().q() || w.k() != codebook.front().k() || w.n() != codebook.front().n())
            throw std::invalid_argument("codewords do not share q, k, n");
        out.push_back(map.apply(w));
    }
    return out;
}

} // namespace ocdna
