#pragma once

#include <string>
#include <vector>

#include "ocdna/algebra.hpp"

namespace ocdna {

/// A computed upper estimate on a maximum code size. Asymptotic reports
/// carry only the leading term, so they are not guarantees at finite n.
struct BoundReport {
    std::string family;
    Rational value;
    bool asymptotic = false;
    int q = 0;
    int k = 0;
    int n = 0;
    std::vector<int> budgets;
    std::string note; ///< extra inputs such as l or m0

    BigInt floor() const;
    double log10() const;
    /// "num/den", or just the integer when the value is whole.
    std::string value_string() const;
};

double log10_big(const BigInt& v);

/// Q_{q,k} as a big integer, with Q_{q,0} = 1 and Q_{1,k} = 1.
BigInt q_size(int q, int k);

/// Exact sphere packing for per-row budgets e_1 >= ... >= e_k >= 1.
BoundReport sp_bound_per_row(int q, int k, int n, const std::vector<int>& budgets);
/// Exact sphere packing for e substitutions in total, e >= 1.
BoundReport sp_bound_total(int q, int k, int n, int e);

/// n0 = Q_{q,k} - (q-l) Q_{l,k-1} - Q_{l,k}.
BigInt n0_value(int q, int k, int l);
BoundReport asym_bound_total(int q, int k, int n, int e, int l);
/// The l in [1, q-1] that minimises asym_bound_total.
BoundReport asym_bound_total_best(int q, int k, int n, int e);

BoundReport asym_bound_general(int q, int k, int n, const std::vector<int>& budgets);

enum class Thm3Variant { I, II, III };
BoundReport asym_bound_thm3(int q, int k, int n, const std::vector<int>& budgets, Thm3Variant variant);

BoundReport asym_bound_even_e(int q, int k, int n, int e);

/// Extension of the general bound to more than q nonzero budgets, grouping
/// them in blocks of m0.
BoundReport bound_m_gt_q(int q, int k, int n, const std::vector<int>& budgets, int m0);

/// Columns (s_2..s_k) compatible with one binary row of weight w, length n-1.
BigInt t_count(int n, int k, int w);
/// Binary sequences of length n with r runs and weight w.
BigInt c_count(int n, int r, int w);
BoundReport gspb_deletion_bound(int n, int k);
/// |union of single first-row deletion balls| over all binary k-row words.
BigInt v_size(int k, int n);
Rational m_qk(int q, int k);
BoundReport asym_deletion_bound(int k, int n);

} // namespace ocdna
