#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "schreier/enumeration.hpp"

namespace schreier {

/// Result of checking one identity over a finite parameter range.
struct Report {
    std::string suite;
    std::string name;
    std::string range;
    std::uint64_t cases = 0;
    bool passed = true;
    std::optional<std::string> counterexample;  // first failing case only
};

/// Seed for the randomized partial-sum checks when none is given.
inline constexpr std::uint64_t kDefaultSeed = 20240521;

struct VerifyOptions {
    std::optional<int> n_max;  // replaces the suite's main upper bound on n
    std::optional<int> k_max;  // replaces the suite's main upper bound on k
    std::uint64_t seed = kDefaultSeed;
    EnumOptions enumeration;
};

enum class Suite {
    identities,  // hockey stick, Fibonacci diagonal sums, Fibonacci recurrence
    eq1_2,       // S^(k) = nonmaximal sets plus maximal sets containing k
    eq3_10,      // binomial convolution of Fibonacci numbers
    thm1_1,      // a_{n,n} = 2 F_n, by enumeration, double sum and bijection
    thm1_2,      // three-case closed form against the oracle and the reference table
    thm1_3,      // a_{k,k+l} = 2 F_{k+l} on the band k >= l + 2
    prop3_1,     // a_{k,n} = F_{n+1} for k > n
    rec3_1,      // a_{k,n} = a_{k,n-1} + a_{k-1,n-2}, by table and bijection
    lemma3_3,    // seeded versus zero-seeded iterated partial sums
    lemma3_4,    // shifting the input by one
    lemma3_5,    // partial sums of the shifted Fibonacci sequence
    eq3_8,       // a_{k,k+l} minus a (k-1)-fold partial sum
    eq3_9,       // binomial form of partial sums of (F_n)
    thm1_4,      // |K_{n+1}| = F_n, case split, f/g bijection, shape claims
    mpq,         // alternating recurrence for m_{p,q,n}
    all,
};

/// CLI names, in the order `all` runs them (`all` itself last).
const std::vector<std::string_view>& suite_names();
std::optional<Suite> parse_suite(std::string_view name);
std::string_view to_string(Suite suite);

/// Runs one suite (or every suite for Suite::all). Throws SizeLimitError when
/// an override pushes an oracle past its cap; oracle checks run first so this
/// happens before any slow formula work.
std::vector<Report> run_suite(Suite suite, const VerifyOptions& options = {});

/// Reference values of a_{k,n} for 1 <= k <= 7, 1 <= n <= 16 (row k-1, column n-1).
const std::vector<std::vector<int>>& reference_table();

}  // namespace schreier
