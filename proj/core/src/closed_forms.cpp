#include "schreier/closed_forms.hpp"

#include <algorithm>
#include <string>

#include "schreier/errors.hpp"

namespace schreier {

namespace {

void require_at_least(int value, int minimum, const char* what) {
    if (value < minimum) {
        throw ParameterError(std::string(what) + " must be >= " + std::to_string(minimum) + ", got " +
                             std::to_string(value));
    }
}

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

}  // namespace

MiddleCaseTerms a_middle_case_terms(int k, int n) {
    require_at_least(k, 2, "k");
    require_at_least(n, k, "n");
    const int l = n - k;
    MiddleCaseTerms terms;
    // C(l, i) vanishes once i > l.
    for (int i = 0; i <= std::min(k - 2, l); ++i) terms.fibonacci_sum += binom(l, i) * fib(idx(k - i));
    terms.fibonacci_sum *= 2;
    terms.boundary = 2 * binom(l, k - 1);
    for (int j = 1; j <= l; ++j) terms.tail += binom(j, l - j + k);
    return terms;
}

Count a_closed(int k, int n) {
    require_at_least(k, 1, "k");
    require_at_least(n, 1, "n");
    const int l = n - k;
    if (k == 1) return fib(idx(l + 2)) + 1;
    if (l >= 0) return a_middle_case_terms(k, n).total();
    return fib(idx(k + l + 1));
}

Count a_diag(int n) {
    require_at_least(n, 1, "n");
    return 2 * fib(idx(n));
}

Count a_diag_double_sum(int n) {
    require_at_least(n, 1, "n");
    Count sum = 0;
    for (int k = 1; k <= n - 1; ++k) {
        const int row = n - k - 1;
        Count term = 1;  // C(row, 0)
        for (int j = 0; j <= k - 2; ++j) {
            if (j > row) break;  // remaining terms vanish
            sum += term;
            term *= row - j;
            term /= j + 1;
        }
    }
    return 2 + 2 * sum;
}

Count a_band(int k, int l) {
    require_at_least(l, 0, "l");
    if (k < l + 2) {
        throw ParameterError("a_band: need k >= l + 2, got k=" + std::to_string(k) + ", l=" + std::to_string(l));
    }
    return 2 * fib(idx(k + l));
}

Count a_beyond_diagonal(int k, int n) {
    require_at_least(n, 1, "n");
    if (k <= n) {
        throw ParameterError("a_beyond_diagonal: need k > n, got k=" + std::to_string(k) + ", n=" + std::to_string(n));
    }
    return fib(idx(n + 1));
}

RecurrenceTable::RecurrenceTable(int k_max, int n_max) : k_max_(k_max), n_max_(n_max) {
    require_at_least(k_max, 1, "k_max");
    require_at_least(n_max, 1, "n_max");
    values_.resize(idx(k_max) * idx(n_max));
    seeded_.resize(values_.size(), false);

    // Column n only reads columns n-1 and n-2.
    for (int n = 1; n <= n_max; ++n) {
        for (int k = 1; k <= k_max; ++k) {
            const std::size_t at = index(k, n);
            if (k == 1 || n <= std::max(k, 2)) {
                values_[at] = a_closed(k, n);
                seeded_[at] = true;
            } else {
                values_[at] = values_[index(k, n - 1)] + values_[index(k - 1, n - 2)];
            }
        }
    }
}

std::size_t RecurrenceTable::index(int k, int n) const {
    if (k < 1 || k > k_max_ || n < 1 || n > n_max_) {
        throw ParameterError("table cell (" + std::to_string(k) + "," + std::to_string(n) + ") out of range");
    }
    return idx(k - 1) * idx(n_max_) + idx(n - 1);
}

const Count& RecurrenceTable::at(int k, int n) const { return values_[index(k, n)]; }

bool RecurrenceTable::seeded(int k, int n) const { return seeded_[index(k, n)]; }

std::vector<TableCell> RecurrenceTable::cells() const {
    std::vector<TableCell> out;
    out.reserve(values_.size());
    for (int k = 1; k <= k_max_; ++k) {
        for (int n = 1; n <= n_max_; ++n) out.push_back({k, n, at(k, n)});
    }
    return out;
}

RecurrenceTable a_recurrence_table(int k_max, int n_max) { return RecurrenceTable(k_max, n_max); }

Count k_count(int n) {
    require_at_least(n, 2, "n");
    return fib(idx(n - 1));
}

KCaseCounts k_case_counts(int n) {
    require_at_least(n, 3, "n");
    KCaseCounts counts;
    counts.case1 = 1;
    counts.case2 = 0;
    counts.case3 = n - 3;
    Count sum = 0;
    for (int k = 4; k <= n; ++k) {
        for (int j = 1; j <= k - 3; ++j) sum += binom(n - k, j);
    }
    counts.case4 = 1 + sum;
    return counts;
}

Count mpq_recurrence(int p, int q, int n, const EnumOptions& options) {
    require_at_least(p, 1, "p");
    require_at_least(q, 1, "q");
    require_at_least(n, 1, "n");
    const int order = p + q;
    std::vector<Int> m(idx(n) + 1);
    m[0] = 0;  // no nonempty set has maximum 0
    for (int i = 1; i <= n; ++i) {
        if (i < order) {
            m[idx(i)] = count_mpq(p, q, i, options);
            continue;
        }
        Int value = m[idx(i - order)];
        for (int j = 1; j <= q; ++j) {
            const Int term = Int(binom(q, j)) * m[idx(i - j)];
            if (j % 2 == 1) {
                value += term;
            } else {
                value -= term;
            }
        }
        m[idx(i)] = value;
    }
    return to_count(m[idx(n)]);
}

}  // namespace schreier
