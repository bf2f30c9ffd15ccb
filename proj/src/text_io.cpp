#include "ocdna/text_io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace ocdna {

namespace {

struct Header {
    int q = 0;
    int k = 0;
    int n = 0;
};

std::string trim(std::string s) {
    while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) s.pop_back();
    std::size_t start = 0;
    while (start < s.size() && (s[start] == ' ' || s[start] == '\t')) ++start;
    return s.substr(start);
}

// Data lines after the header; comment lines are dropped, blank lines kept.
std::vector<std::string> read_lines(std::istream& in, Header& h) {
    std::vector<std::string> lines;
    std::string line;
    bool have_header = false;
    while (std::getline(in, line)) {
        line = trim(line);
        if (!line.empty() && line[0] == '#') continue;
        if (!have_header) {
            if (line.empty()) continue;
            std::istringstream hs(line);
            if (!(hs >> h.q >> h.k >> h.n)) throw std::invalid_argument("malformed header, expected 'q k n'");
            std::string extra;
            if (hs >> extra) throw std::invalid_argument("malformed header, expected 'q k n'");
            if (h.q < 2 || h.k < 1 || h.n < 0) throw std::invalid_argument("header values out of range");
            have_header = true;
            continue;
        }
        lines.push_back(line);
    }
    if (!have_header) throw std::invalid_argument("missing 'q k n' header");
    return lines;
}

Digits parse_digit_row(const std::string& s, int q) {
    if (q > 10) throw std::invalid_argument("digit rows need q <= 10");
    Digits row;
    row.reserve(s.size());
    for (char c : s) {
        if (c < '0' || c > '9') throw std::invalid_argument(std::string("bad digit '") + c + "'");
        const int d = c - '0';
        if (d >= q) throw std::invalid_argument("digit " + std::to_string(d) + " not below q");
        row.push_back(d);
    }
    return row;
}

void write_header(std::ostream& out, int q, int k, int n) { out << q << ' ' << k << ' ' << n << '\n'; }

void write_digit_row(std::ostream& out, const Digits& row) {
    for (int d : row) out << static_cast<char>('0' + d);
    out << '\n';
}

void drop_trailing_blank(std::vector<std::string>& lines) {
    while (!lines.empty() && lines.back().empty()) lines.pop_back();
}

} // namespace

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::string item;
    std::istringstream ss(text);
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) throw std::invalid_argument("empty entry in list '" + text + "'");
        std::size_t used = 0;
        const long v = std::stol(item, &used);
        if (used != item.size()) throw std::invalid_argument("bad integer '" + item + "'");
        out.push_back(static_cast<int>(v));
    }
    return out;
}

std::string join_ints(const std::vector<int>& values, char sep) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(values[i]);
    }
    return out;
}

Word read_word(std::istream& in) {
    Header h;
    auto lines = read_lines(in, h);
    drop_trailing_blank(lines);
    const bool ranks = lines.size() == 1 && (lines[0].find(',') != std::string::npos || h.k > 1);
    if (ranks || (h.n == 0 && lines.empty())) {
        const auto r = lines.empty() ? std::vector<int>{} : parse_int_list(lines[0]);
        if (static_cast<int>(r.size()) != h.n)
            throw std::invalid_argument("expected " + std::to_string(h.n) + " ranks");
        return Word::from_ranks(h.q, h.k, r);
    }
    if (static_cast<int>(lines.size()) != h.k)
        throw std::invalid_argument("expected " + std::to_string(h.k) + " digit rows");
    std::vector<Digits> rows;
    for (const auto& l : lines) {
        rows.push_back(parse_digit_row(l, h.q));
        if (static_cast<int>(rows.back().size()) != h.n)
            throw std::invalid_argument("row length differs from n = " + std::to_string(h.n));
    }
    return Word::from_rows(h.q, rows);
}

void write_word(std::ostream& out, const Word& w, WordFormat format) {
    write_header(out, w.q(), w.k(), w.n());
    if (format == WordFormat::Ranks) {
        out << join_ints(w.ranks()) << '\n';
        return;
    }
    if (w.q() > 10) throw std::invalid_argument("digit rows need q <= 10");
    for (int i = 0; i < w.k(); ++i) write_digit_row(out, w.row(i));
}

ReceivedRows read_received(std::istream& in) {
    Header h;
    auto lines = read_lines(in, h);
    if (static_cast<int>(lines.size()) > h.k) {
        for (std::size_t i = h.k; i < lines.size(); ++i)
            if (!lines[i].empty()) throw std::invalid_argument("more than k rows");
        lines.resize(h.k);
    }
    lines.resize(h.k); // missing trailing rows are empty
    ReceivedRows r{h.q, h.k, h.n, {}};
    for (const auto& l : lines) {
        r.rows.push_back(parse_digit_row(l, h.q));
        if (static_cast<int>(r.rows.back().size()) > h.n)
            throw std::invalid_argument("received row longer than n");
    }
    return r;
}

void write_received(std::ostream& out, const ReceivedRows& r) {
    write_header(out, r.q, r.k, r.n);
    for (const auto& row : r.rows) write_digit_row(out, row);
}

std::vector<Word> read_codebook(std::istream& in) {
    Header h;
    const auto lines = read_lines(in, h);
    std::vector<Word> out;
    for (const auto& l : lines) {
        if (l.empty()) continue;
        const auto r = parse_int_list(l);
        if (static_cast<int>(r.size()) != h.n)
            throw std::invalid_argument("codeword '" + l + "' does not have n ranks");
        out.push_back(Word::from_ranks(h.q, h.k, r));
    }
    return out;
}

void write_codebook(std::ostream& out, const std::vector<Word>& codebook, int q, int k, int n) {
    write_header(out, q, k, n);
    for (const auto& w : codebook) out << join_ints(w.ranks()) << '\n';
}

void write_plan(std::ostream& out, const EditPlan& plan) {
    for (const auto& e : plan) out << e.row << ' ' << e.pos << ' ' << e.value << '\n';
}

EditPlan read_plan(std::istream& in) {
    EditPlan plan;
    std::string line;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        Edit e;
        if (!(ls >> e.row >> e.pos)) throw std::invalid_argument("malformed plan line '" + line + "'");
        ls >> e.value;
        plan.push_back(e);
    }
    return plan;
}

} // namespace ocdna
