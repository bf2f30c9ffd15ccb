#pragma once

#include <string>
#include <vector>

#include "ocdna/alphabet.hpp"

namespace ocdna {

/// [s_1..s_k] -> [q-1-s_k, ..., q-1-s_1]; an involution.
Letter complement_reverse(const Letter& s);
/// [s_1..s_k] -> [q-1-s_k, s_1+q-1-s_k, ..., s_{k-1}+q-1-s_k].
Letter shift_map(const Letter& s);
/// [s_1..s_k] -> [s_2-s_1, ..., s_k-s_1, q-1-s_1].
Letter shift_inverse(const Letter& s);

enum class MapKind { ComplementReverse, Shift };

struct EquivalenceMap {
    MapKind kind = MapKind::ComplementReverse;
    bool inverse = false;

    /// Accepts "complement-reverse", "shift" and "shift-inverse".
    static EquivalenceMap parse(const std::string& name);
    std::string name() const;
    EquivalenceMap inverted() const;

    Letter apply(const Letter& s) const;
    Word apply(const Word& w) const;
};

std::vector<Word> transport_code(const std::vector<Word>& codebook, const EquivalenceMap& map);

} // namespace ocdna
