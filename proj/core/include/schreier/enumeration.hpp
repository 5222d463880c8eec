#pragma once

#include <vector>

#include "schreier/combinatorics.hpp"
#include "schreier/finite_set.hpp"

namespace schreier {

/// Default cap on n for exhaustive powerset scans (2^24 subsets).
inline constexpr int kNaiveMaxN = 24;
/// Default cap on n for the structured generator, which only visits members.
inline constexpr int kStructuredMaxN = 40;
/// Counting by minimum element never materialises sets.
inline constexpr int kByMinCountMaxN = 64;
/// Hard ceiling imposed by the 64-bit subset masks.
inline constexpr int kMaskMaxN = 62;

enum class Strategy {
    naive,   // scan every subset of {1..n}
    by_min,  // split on the minimum element, then on membership of k and n
};

struct EnumOptions {
    unsigned threads = 1;
    int naive_max_n = kNaiveMaxN;
    int structured_max_n = kStructuredMaxN;

    /// Defaults, with the naive cap raised by SCHREIER_MAX_ORACLE_N when set.
    static EnumOptions from_environment();
};

/// Members of A_{k,n} in canonical order. The empty set comes first.
std::vector<FiniteSet> enumerate_A(int k, int n, Strategy strategy = Strategy::naive,
                                   const EnumOptions& options = {});

/// a_{k,n} = |A_{k,n}| by the chosen strategy.
Count count_A(int k, int n, Strategy strategy, const EnumOptions& options = {});

/// Members of K_n in canonical order.
std::vector<FiniteSet> enumerate_K(int n, const EnumOptions& options = {});

/// Sets with max E = n and q * min E >= p * |E|, in canonical order.
std::vector<FiniteSet> enumerate_mpq(int p, int q, int n, const EnumOptions& options = {});

/// m_{p,q,n} by exhaustive scan.
Count count_mpq(int p, int q, int n, const EnumOptions& options = {});

}  // namespace schreier
