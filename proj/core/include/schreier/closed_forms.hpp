#pragma once

#include <vector>

#include "schreier/combinatorics.hpp"
#include "schreier/enumeration.hpp"

namespace schreier {

/// The three summands of the k >= 2, l = n - k >= 0 branch of a_closed.
struct MiddleCaseTerms {
    Count fibonacci_sum;  // 2 * sum_{i=0}^{k-2} C(l, i) F_{k-i}
    Count boundary;       // 2 * C(l, k-1)
    Count tail;           // sum_{j=1}^{l} C(j, l-j+k)

    Count total() const { return fibonacci_sum + boundary + tail; }
};

/// Terms of the middle case for a_{k,n}; requires k >= 2 and n >= k.
MiddleCaseTerms a_middle_case_terms(int k, int n);

/// a_{k,n} by the three-case closed form, dispatching on l = n - k:
///   k = 1:            F_{l+2} + 1
///   k >= 2, l >= 0:   a_middle_case_terms(k, n).total()
///   k >= 2, l < 0:    F_{n+1}
Count a_closed(int k, int n);

/// 2 F_n.
Count a_diag(int n);

/// 2 + 2 sum_{k=1}^{n-1} sum_{j=0}^{k-2} C(n-k-1, j), summed literally.
Count a_diag_double_sum(int n);

/// 2 F_{k+l} on the band l >= 0, k >= l + 2.
Count a_band(int k, int l);

/// F_{n+1}, the count for k > n where the weight reduces to cardinality.
Count a_beyond_diagonal(int k, int n);

struct TableCell {
    int k;
    int n;
    Count value;
};

/// a_{k,n} for 1 <= k <= k_max, 1 <= n <= n_max, filled column by column with
/// a_{k,n} = a_{k,n-1} + a_{k-1,n-2}. Cells where that step does not apply
/// (n <= max{k,2}, and the whole k = 1 row) are seeded from a_closed.
class RecurrenceTable {
public:
    RecurrenceTable(int k_max, int n_max);

    int k_max() const noexcept { return k_max_; }
    int n_max() const noexcept { return n_max_; }

    const Count& at(int k, int n) const;
    bool seeded(int k, int n) const;

    /// Row-major: k ascending, then n ascending.
    std::vector<TableCell> cells() const;

private:
    std::size_t index(int k, int n) const;

    int k_max_;
    int n_max_;
    std::vector<Count> values_;
    std::vector<bool> seeded_;
};

RecurrenceTable a_recurrence_table(int k_max, int n_max);

/// |K_n| = F_{n-1}; requires n >= 2.
Count k_count(int n);

/// Members of K_{n+1} split by membership of 2 and 3.
struct KCaseCounts {
    Count case1;  // 2 and 3 in E: only {2, 3, n+1}
    Count case2;  // 2 in E, 3 not: impossible
    Count case3;  // 3 in E, 2 not: {3, m, n+1}, 4 <= m <= n
    Count case4;  // neither: {n+1} plus the double binomial sum

    Count total() const { return case1 + case2 + case3 + case4; }
};

/// Requires n >= 3. case4 is evaluated as 1 + sum_{k=4}^{n} sum_{j=1}^{k-3} C(n-k, j).
KCaseCounts k_case_counts(int n);

/// m_{p,q,n} by the alternating recurrence for n >= p + q; smaller n come from
/// the exhaustive oracle, and m_{p,q,0} = 0.
Count mpq_recurrence(int p, int q, int n, const EnumOptions& options = {});

}  // namespace schreier
