#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ocdna/alphabet.hpp"
#include "ocdna/channel.hpp"

namespace ocdna {

// Every file starts with a header line "q k n". A word follows as k digit
// lines (top row first) or as one line of comma-separated ranks. Received
// rows are always k digit lines, possibly of unequal length. A codebook is
// one comma-separated rank line per codeword. Lines starting with '#' are
// comments. Digit lines need q <= 10.

enum class WordFormat { Matrix, Ranks };

Word read_word(std::istream& in);
void write_word(std::ostream& out, const Word& w, WordFormat format = WordFormat::Matrix);

ReceivedRows read_received(std::istream& in);
void write_received(std::ostream& out, const ReceivedRows& r);

std::vector<Word> read_codebook(std::istream& in);
void write_codebook(std::ostream& out, const std::vector<Word>& codebook, int q, int k, int n);

/// One "row pos value" line per edit (0-based).
void write_plan(std::ostream& out, const EditPlan& plan);
EditPlan read_plan(std::istream& in);

std::vector<int> parse_int_list(const std::string& text);
std::string join_ints(const std::vector<int>& values, char sep = ',');

} // namespace ocdna
