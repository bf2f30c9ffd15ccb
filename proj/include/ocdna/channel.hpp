#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ocdna/alphabet.hpp"

namespace ocdna {

enum class ModelKind { SubPerRow, SubTotal, SubTRows, DelPerRow, DelTotal, DelTRows };

/// One of the six channel models. Per-row kinds carry k budgets, total kinds
/// carry one, T-row kinds carry t budgets (t = budgets.size()).
/// Substitution budgets are upper limits; deletion budgets are exact.
struct ErrorModel {
    ModelKind kind = ModelKind::SubTotal;
    std::vector<int> budgets;

    static ErrorModel sub_per_row(std::vector<int> e);
    static ErrorModel sub_total(int e);
    static ErrorModel sub_t_rows(std::vector<int> e);
    static ErrorModel del_per_row(std::vector<int> e);
    static ErrorModel del_total(int e);
    static ErrorModel del_t_rows(std::vector<int> e);

    bool is_deletion() const;
    int t() const { return static_cast<int>(budgets.size()); }
    /// Throws std::invalid_argument when the model does not fit k rows.
    void check_rows(int k) const;
    std::string describe() const;

    friend bool operator==(const ErrorModel&, const ErrorModel&) = default;
};

/// Raw channel output: k rows, no column constraint, lengths may differ.
struct ReceivedRows {
    int q = 2;
    int k = 0;
    int n = 0; ///< nominal (transmitted) length
    std::vector<Digits> rows;

    static ReceivedRows of(const Word& w);
    /// The word these rows spell, if all have length n and every column is valid.
    std::optional<Word> as_word() const;

    friend bool operator==(const ReceivedRows&, const ReceivedRows&) = default;
    friend auto operator<=>(const ReceivedRows&, const ReceivedRows&) = default;
};

/// A single edit. Positions are 0-based and refer to the transmitted row;
/// value is ignored for deletions.
struct Edit {
    int row = 0;
    int pos = 0;
    int value = 0;

    friend bool operator==(const Edit&, const Edit&) = default;
    friend auto operator<=>(const Edit&, const Edit&) = default;
};
using EditPlan = std::vector<Edit>;

int runs(std::span<const int> x);
/// Distinct subsequences of length |x| - t, sorted.
std::vector<Digits> deletion_ball(std::span<const int> x, int t);
/// Sequences over q symbols at Hamming distance exactly r from x, sorted.
std::vector<Digits> hamming_sphere(std::span<const int> x, int r, int q);

/// Per-row edit counts the model admits on k rows of length n.
std::vector<std::vector<int>> admissible_counts(const ErrorModel& model, int k, int n);
bool counts_admissible(const ErrorModel& model, std::span<const int> counts);

/// Whether `received` is reachable from `word` with edit counts dominated by
/// an admissible pattern. Deletion rows must be subsequences; fewer deletions
/// than the budget are accepted.
bool within_model(const Word& word, const ReceivedRows& received, const ErrorModel& model);

/// Throws std::invalid_argument if the plan is not admissible.
void validate_plan(const Word& word, const ErrorModel& model, const EditPlan& plan);
ReceivedRows apply_errors(const Word& word, const ErrorModel& model, const EditPlan& plan);

/// The SplitMix64 recurrence: state += 0x9E3779B97F4A7C15, then the output
/// is state mixed by (x ^ x>>30) * 0xBF58476D1CE4E5B9,
/// (x ^ x>>27) * 0x94D049BB133111EB, x ^ x>>31.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    /// Uniform in [0, bound) by rejection.
    std::uint64_t below(std::uint64_t bound);

private:
    std::uint64_t state_;
};

struct Corruption {
    ReceivedRows received;
    EditPlan plan;
};

/// Samples a maximal-count admissible plan: positions uniform without
/// replacement, substitution values uniform over the other q-1 symbols,
/// T-row budgets assigned to a uniformly random ordered choice of rows.
Corruption random_errors(const Word& word, const ErrorModel& model, std::uint64_t seed);

/// Valid words reachable with at most budgets[i] substitutions in row i.
std::vector<Word> valid_sub_ball_per_row(const Word& word, std::span<const int> budgets);
/// Valid words reachable with at most e substitutions in total.
std::vector<Word> valid_sub_ball_total(const Word& word, int e);

/// Exact set of raw outputs, sorted.
std::vector<ReceivedRows> raw_received_set(const Word& word, const ErrorModel& model);

struct CollisionWitness {
    Word first;
    Word second;
    ReceivedRows output;
};

struct OracleVerdict {
    bool is_code = true;
    std::optional<CollisionWitness> witness;
};

/// Pairwise disjointness of raw output sets. On failure the witness is the
/// lexicographically smallest colliding codeword pair, with the smallest
/// output they share.
OracleVerdict oracle_is_code(std::vector<Word> codebook, const ErrorModel& model);

} // namespace ocdna
