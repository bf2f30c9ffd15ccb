#include "ocdna/channel.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace ocdna {

// ---- ErrorModel -----------------------------------------------------------

namespace {

ErrorModel make_model(ModelKind kind, std::vector<int> e) {
    for (int v : e)
        if (v < 0) throw std::invalid_argument("error budgets must be nonnegative");
    return ErrorModel{kind, std::move(e)};
}

} // namespace

ErrorModel ErrorModel::sub_per_row(std::vector<int> e) { return make_model(ModelKind::SubPerRow, std::move(e)); }
ErrorModel ErrorModel::sub_total(int e) { return make_model(ModelKind::SubTotal, {e}); }
ErrorModel ErrorModel::sub_t_rows(std::vector<int> e) { return make_model(ModelKind::SubTRows, std::move(e)); }
ErrorModel ErrorModel::del_per_row(std::vector<int> e) { return make_model(ModelKind::DelPerRow, std::move(e)); }
ErrorModel ErrorModel::del_total(int e) { return make_model(ModelKind::DelTotal, {e}); }
ErrorModel ErrorModel::del_t_rows(std::vector<int> e) { return make_model(ModelKind::DelTRows, std::move(e)); }

bool ErrorModel::is_deletion() const {
    return kind == ModelKind::DelPerRow || kind == ModelKind::DelTotal || kind == ModelKind::DelTRows;
}

void ErrorModel::check_rows(int k) const {
    for (int v : budgets)
        if (v < 0) throw std::invalid_argument("error budgets must be nonnegative");
    switch (kind) {
    case ModelKind::SubPerRow:
    case ModelKind::DelPerRow:
        if (static_cast<int>(budgets.size()) != k)
            throw std::invalid_argument("per-row model needs " + std::to_string(k) + " budgets, got " +
                                        std::to_string(budgets.size()));
        break;
    case ModelKind::SubTotal:
    case ModelKind::DelTotal:
        if (budgets.size() != 1) throw std::invalid_argument("total model takes a single budget");
        break;
    case ModelKind::SubTRows:
    case ModelKind::DelTRows:
        if (budgets.empty() || static_cast<int>(budgets.size()) > k)
            throw std::invalid_argument("t-row model needs 1 <= t <= k budgets");
        break;
    }
}

std::string ErrorModel::describe() const {
    static const char* names[] = {"sub-per-row", "sub-total", "sub-t-rows",
                                  "del-per-row", "del-total", "del-t-rows"};
    std::ostringstream os;
    os << names[static_cast<int>(kind)] << '(';
    for (std::size_t i = 0; i < budgets.size(); ++i) os << (i ? "," : "") << budgets[i];
    os << ')';
    return os.str();
}

// ---- ReceivedRows ---------------------------------------------------------

ReceivedRows ReceivedRows::of(const Word& w) { return {w.q(), w.k(), w.n(), w.rows()}; }

std::optional<Word> ReceivedRows::as_word() const {
    for (const auto& r : rows)
        if (static_cast<int>(r.size()) != n) return std::nullopt;
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < k; ++i) {
            if (rows[i][j] < 0 || rows[i][j] >= q) return std::nullopt;
            if (i > 0 && rows[i][j] < rows[i - 1][j]) return std::nullopt;
        }
    return Word::from_rows(q, rows);
}

// ---- balls ----------------------------------------------------------------

int runs(std::span<const int> x) {
    int r = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (i == 0 || x[i] != x[i - 1]) ++r;
    return r;
}

std::vector<Digits> deletion_ball(std::span<const int> x, int t) {
    if (t < 0 || t > static_cast<int>(x.size()))
        throw std::invalid_argument("deletion count out of range");
    std::set<Digits> level{Digits(x.begin(), x.end())};
    for (int step = 0; step < t; ++step) {
        std::set<Digits> next;
        for (const auto& s : level)
            for (std::size_t i = 0; i < s.size(); ++i) {
                if (i > 0 && s[i] == s[i - 1]) continue; // same result as deleting s[i-1]
                Digits d;
                d.reserve(s.size() - 1);
                d.insert(d.end(), s.begin(), s.begin() + static_cast<std::ptrdiff_t>(i));
                d.insert(d.end(), s.begin() + static_cast<std::ptrdiff_t>(i) + 1, s.end());
                next.insert(std::move(d));
            }
        level = std::move(next);
    }
    return {level.begin(), level.end()};
}

std::vector<Digits> hamming_sphere(std::span<const int> x, int r, int q) {
    const int n = static_cast<int>(x.size());
    std::vector<Digits> out;
    if (r < 0 || r > n) return out;
    Digits cur(x.begin(), x.end());
    std::function<void(int, int)> rec = [&](int start, int left) {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (int pos = start; pos <= n - left; ++pos) {
            const int orig = cur[pos];
            for (int v = 0; v < q; ++v) {
                if (v == orig) continue;
                cur[pos] = v;
                rec(pos + 1, left - 1);
            }
            cur[pos] = orig;
        }
    };
    rec(0, r);
    std::sort(out.begin(), out.end());
    return out;
}

// ---- admissibility --------------------------------------------------------

bool counts_admissible(const ErrorModel& model, std::span<const int> counts) {
    const auto& e = model.budgets;
    const int total = std::accumulate(counts.begin(), counts.end(), 0);
    std::vector<int> nonzero;
    for (int c : counts) {
        if (c < 0) return false;
        if (c > 0) nonzero.push_back(c);
    }
    switch (model.kind) {
    case ModelKind::SubPerRow:
        for (std::size_t i = 0; i < counts.size(); ++i)
            if (counts[i] > e[i]) return false;
        return true;
    case ModelKind::DelPerRow:
        for (std::size_t i = 0; i < counts.size(); ++i)
            if (counts[i] != e[i]) return false;
        return true;
    case ModelKind::SubTotal:
        return total <= e[0];
    case ModelKind::DelTotal:
        return total == e[0];
    case ModelKind::SubTRows: {
        if (static_cast<int>(nonzero.size()) > model.t()) return false;
        std::vector<int> b = e;
        std::sort(nonzero.rbegin(), nonzero.rend());
        std::sort(b.rbegin(), b.rend());
        for (std::size_t i = 0; i < nonzero.size(); ++i)
            if (nonzero[i] > b[i]) return false;
        return true;
    }
    case ModelKind::DelTRows: {
        if (static_cast<int>(nonzero.size()) > model.t()) return false;
        std::multiset<int> pool(e.begin(), e.end());
        for (int c : nonzero) {
            auto it = pool.find(c);
            if (it == pool.end()) return false;
            pool.erase(it);
        }
        return true;
    }
    }
    return false;
}

std::vector<std::vector<int>> admissible_counts(const ErrorModel& model, int k, int n) {
    model.check_rows(k);
    const int cap = std::min(n, *std::max_element(model.budgets.begin(), model.budgets.end()));
    std::vector<std::vector<int>> out;
    std::vector<int> c(k, 0);
    while (true) {
        if (counts_admissible(model, c)) out.push_back(c);
        int pos = k - 1;
        while (pos >= 0 && c[pos] == cap) c[pos--] = 0;
        if (pos < 0) break;
        ++c[pos];
    }
    return out;
}

// ---- plans ----------------------------------------------------------------

bool within_model(const Word& word, const ReceivedRows& received, const ErrorModel& model) {
    if (received.k != word.k() || static_cast<int>(received.rows.size()) != word.k()) return false;
    std::vector<int> counts(word.k(), 0);
    for (int i = 0; i < word.k(); ++i) {
        const Digits sent = word.row(i);
        const Digits& got = received.rows[i];
        if (model.is_deletion()) {
            if (got.size() > sent.size()) return false;
            std::size_t at = 0;
            for (int s : sent)
                if (at < got.size() && got[at] == s) ++at;
            if (at != got.size()) return false;
            counts[i] = static_cast<int>(sent.size() - got.size());
        } else {
            if (got.size() != sent.size()) return false;
            for (std::size_t j = 0; j < sent.size(); ++j) counts[i] += got[j] != sent[j];
        }
    }
    ErrorModel upper = model;
    if (model.kind == ModelKind::DelPerRow) upper.kind = ModelKind::SubPerRow;
    if (model.kind == ModelKind::DelTotal) upper.kind = ModelKind::SubTotal;
    if (model.kind == ModelKind::DelTRows) upper.kind = ModelKind::SubTRows;
    return counts_admissible(upper, counts);
}

void validate_plan(const Word& word, const ErrorModel& model, const EditPlan& plan) {
    model.check_rows(word.k());
    std::vector<int> counts(word.k(), 0);
    std::set<std::pair<int, int>> cells;
    for (const Edit& ed : plan) {
        if (ed.row < 0 || ed.row >= word.k()) throw std::invalid_argument("edit row out of range");
        if (ed.pos < 0 || ed.pos >= word.n()) throw std::invalid_argument("edit position out of range");
        if (!cells.insert({ed.row, ed.pos}).second)
            throw std::invalid_argument("two edits at the same cell");
        if (!model.is_deletion()) {
            if (ed.value < 0 || ed.value >= word.q())
                throw std::invalid_argument("substituted value out of range");
            if (ed.value == word.at(ed.row, ed.pos))
                throw std::invalid_argument("substitution must change the symbol");
        }
        ++counts[ed.row];
    }
    if (!counts_admissible(model, counts))
        throw std::invalid_argument("plan exceeds or mismatches the model " + model.describe());
}

ReceivedRows apply_errors(const Word& word, const ErrorModel& model, const EditPlan& plan) {
    validate_plan(word, model, plan);
    ReceivedRows out = ReceivedRows::of(word);
    if (!model.is_deletion()) {
        for (const Edit& ed : plan) out.rows[ed.row][ed.pos] = ed.value;
        return out;
    }
    EditPlan sorted = plan;
    std::sort(sorted.begin(), sorted.end(), [](const Edit& a, const Edit& b) {
        return a.row != b.row ? a.row < b.row : a.pos > b.pos;
    });
    for (const Edit& ed : sorted)
        out.rows[ed.row].erase(out.rows[ed.row].begin() + ed.pos);
    return out;
}

// ---- randomness -----------------------------------------------------------

std::uint64_t SplitMix64::next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("empty range");
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t v;
    do v = next();
    while (v >= limit);
    return v % bound;
}

namespace {

// First `count` entries of a partial Fisher-Yates shuffle of 0..size-1.
std::vector<int> sample_without_replacement(SplitMix64& rng, int size, int count) {
    std::vector<int> pool(size);
    std::iota(pool.begin(), pool.end(), 0);
    for (int i = 0; i < count; ++i) {
        const auto j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(size - i)));
        std::swap(pool[i], pool[j]);
    }
    pool.resize(count);
    return pool;
}

} // namespace

Corruption random_errors(const Word& word, const ErrorModel& model, std::uint64_t seed) {
    model.check_rows(word.k());
    SplitMix64 rng(seed);
    const int k = word.k();
    const int n = word.n();
    const bool del = model.is_deletion();
    auto fit = [&](int budget) {
        if (del && budget > n) throw std::invalid_argument("deletion budget exceeds the row length");
        return std::min(budget, n);
    };

    std::vector<std::pair<int, int>> cells; // (row, pos)
    auto take_row = [&](int row, int count) {
        for (int pos : sample_without_replacement(rng, n, count)) cells.emplace_back(row, pos);
    };

    switch (model.kind) {
    case ModelKind::SubPerRow:
    case ModelKind::DelPerRow:
        for (int i = 0; i < k; ++i) take_row(i, fit(model.budgets[i]));
        break;
    case ModelKind::SubTotal:
    case ModelKind::DelTotal: {
        const int e = model.budgets[0];
        if (del && e > k * n) throw std::invalid_argument("deletion budget exceeds the word size");
        for (int cell : sample_without_replacement(rng, k * n, std::min(e, k * n)))
            cells.emplace_back(cell / std::max(n, 1), cell % std::max(n, 1));
        break;
    }
    case ModelKind::SubTRows:
    case ModelKind::DelTRows: {
        const auto rows = sample_without_replacement(rng, k, model.t());
        for (int j = 0; j < model.t(); ++j) take_row(rows[j], fit(model.budgets[j]));
        break;
    }
    }

    EditPlan plan;
    for (auto [row, pos] : cells) {
        Edit ed{row, pos, 0};
        if (!del) {
            int v = static_cast<int>(rng.below(static_cast<std::uint64_t>(word.q() - 1)));
            if (v >= word.at(row, pos)) ++v;
            ed.value = v;
        }
        plan.push_back(ed);
    }
    std::sort(plan.begin(), plan.end());
    return {apply_errors(word, model, plan), plan};
}

// ---- valid balls ----------------------------------------------------------

namespace {

struct ColumnChoice {
    Digits digits;
    std::vector<int> changed; // per row, 0 or 1
    int total = 0;
};

std::vector<Word> valid_ball(const Word& word, const std::function<bool(const std::vector<int>&)>& ok) {
    const int k = word.k();
    const auto letters = all_letters(word.q(), k);
    std::vector<std::vector<ColumnChoice>> choices(word.n());
    for (int j = 0; j < word.n(); ++j) {
        auto col = word.column(j);
        for (const auto& l : letters) {
            ColumnChoice c{l.digits(), std::vector<int>(k, 0), 0};
            for (int i = 0; i < k; ++i)
                if (l[i] != col[i]) {
                    c.changed[i] = 1;
                    ++c.total;
                }
            choices[j].push_back(std::move(c));
        }
    }
    std::vector<Word> out;
    std::vector<Digits> columns(word.n());
    std::vector<int> counts(k, 0);
    std::function<void(int)> rec = [&](int j) {
        if (j == word.n()) {
            out.push_back(Word::from_columns(word.q(), k, columns));
            return;
        }
        for (const auto& c : choices[j]) {
            for (int i = 0; i < k; ++i) counts[i] += c.changed[i];
            if (ok(counts)) {
                columns[j] = c.digits;
                rec(j + 1);
            }
            for (int i = 0; i < k; ++i) counts[i] -= c.changed[i];
        }
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::vector<Word> valid_sub_ball_per_row(const Word& word, std::span<const int> budgets) {
    if (static_cast<int>(budgets.size()) != word.k())
        throw std::invalid_argument("need one budget per row");
    std::vector<int> e(budgets.begin(), budgets.end());
    return valid_ball(word, [&](const std::vector<int>& c) {
        for (std::size_t i = 0; i < c.size(); ++i)
            if (c[i] > e[i]) return false;
        return true;
    });
}

std::vector<Word> valid_sub_ball_total(const Word& word, int e) {
    return valid_ball(word, [&](const std::vector<int>& c) {
        return std::accumulate(c.begin(), c.end(), 0) <= e;
    });
}

// ---- raw outputs and the oracle ------------------------------------------

std::vector<ReceivedRows> raw_received_set(const Word& word, const ErrorModel& model) {
    const int k = word.k();
    const auto rows = word.rows();
    std::vector<ReceivedRows> out;
    for (const auto& counts : admissible_counts(model, k, word.n())) {
        std::vector<std::vector<Digits>> per_row(k);
        for (int i = 0; i < k; ++i)
            per_row[i] = model.is_deletion() ? deletion_ball(rows[i], counts[i])
                                             : hamming_sphere(rows[i], counts[i], word.q());
        ReceivedRows cur{word.q(), k, word.n(), std::vector<Digits>(k)};
        std::function<void(int)> rec = [&](int i) {
            if (i == k) {
                out.push_back(cur);
                return;
            }
            for (const auto& r : per_row[i]) {
                cur.rows[i] = r;
                rec(i + 1);
            }
        };
        rec(0);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

struct RowsHash {
    std::size_t operator()(const ReceivedRows& r) const {
        std::size_t h = 0x84222325u;
        for (const auto& row : r.rows) {
            h = h * 1099511628211ULL ^ (row.size() + 0x9E37u);
            for (int d : row) h = h * 1099511628211ULL ^ static_cast<std::size_t>(d + 1);
        }
        return h;
    }
};

} // namespace

OracleVerdict oracle_is_code(std::vector<Word> codebook, const ErrorModel& model) {
    std::sort(codebook.begin(), codebook.end());
    codebook.erase(std::unique(codebook.begin(), codebook.end()), codebook.end());
    for (const auto& w : codebook)
        if (w.q() != codebook[0].q() || w.k() != codebook[0].k() || w.n() != codebook[0].n())
            throw std::invalid_argument("codebook words must share q, k and n");

    // Codewords are visited in ascending order, so the first two owners
    // recorded for an output are its two smallest.
    std::unordered_map<ReceivedRows, std::pair<int, int>, RowsHash> owners;
    for (int idx = 0; idx < static_cast<int>(codebook.size()); ++idx)
        for (auto& out : raw_received_set(codebook[idx], model)) {
            auto [it, fresh] = owners.try_emplace(std::move(out), idx, -1);
            if (!fresh && it->second.second < 0 && it->second.first != idx) it->second.second = idx;
        }

    OracleVerdict verdict;
    const ReceivedRows* best_out = nullptr;
    std::pair<int, int> best{-1, -1};
    for (const auto& [out, who] : owners) {
        if (who.second < 0) continue;
        if (best_out == nullptr || who < best || (who == best && out < *best_out)) {
            best = who;
            best_out = &out;
        }
    }
    if (best_out != nullptr) {
        verdict.is_code = false;
        verdict.witness = CollisionWitness{codebook[best.first], codebook[best.second], *best_out};
    }
    return verdict;
}

} // namespace ocdna
