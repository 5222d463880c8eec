#include "schreier/verify.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

#include "schreier/bijections.hpp"
#include "schreier/closed_forms.hpp"
#include "schreier/combinatorics.hpp"
#include "schreier/errors.hpp"
#include "schreier/finite_set.hpp"
#include "schreier/partial_sums.hpp"

namespace schreier {

namespace {

// Accumulates cases for one identity and keeps the first counterexample.
class Check {
public:
    Check(std::string_view suite, std::string name, std::string range) {
        report_.suite = std::string(suite);
        report_.name = std::move(name);
        report_.range = std::move(range);
    }

    template <class Describe>
    void expect(bool ok, Describe&& describe) {
        ++report_.cases;
        if (!ok && report_.passed) {
            report_.passed = false;
            report_.counterexample = describe();
        }
    }

    Report done() && { return std::move(report_); }

private:
    Report report_;
};

std::string str(const Int& v) { return v.str(); }

template <class... Parts>
std::string cat(const Parts&... parts) {
    std::ostringstream os;
    (os << ... << parts);
    return os.str();
}

std::string bounds(int lo, const char* var, int hi) { return cat(lo, "<=", var, "<=", hi); }

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

// Uniform in [lo, hi] from the raw engine output, so the stream is identical
// across standard library implementations.
Int draw(std::mt19937_64& rng, int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return Int(lo) + Int(rng() % span);
}

Seq random_seq(std::mt19937_64& rng, std::size_t length) {
    Seq out;
    out.reserve(length);
    for (std::size_t i = 0; i < length; ++i) out.push_back(draw(rng, -100, 100));
    return out;
}

using Reports = std::vector<Report>;

// Fails before any work starts when an override exceeds the oracle cap.
void require_oracle(std::string_view suite, int n, const VerifyOptions& o) {
    const int cap = std::min(o.enumeration.naive_max_n, kMaskMaxN);
    if (n > cap) {
        throw SizeLimitError(cat(suite, ": needs exhaustive enumeration up to n=", n, ", limit is ", cap));
    }
}

// ---------------------------------------------------------------------------

Reports suite_identities(const VerifyOptions& o) {
    constexpr std::string_view s = "identities";
    Reports out;

    {
        const int n_max = o.n_max.value_or(60);
        Check c(s, "hockey stick: sum_{i=m}^{n} C(i,m) = C(n+1,m+1)", bounds(0, "m<=n", n_max));
        for (int n = 0; n <= n_max; ++n) {
            for (int m = 0; m <= n; ++m) {
                Count lhs = 0;
                for (int i = m; i <= n; ++i) lhs += binom(i, m);
                const Count rhs = binom(n + 1, m + 1);
                c.expect(lhs == rhs, [&] { return cat("m=", m, " n=", n, ": ", str(lhs), " != ", str(rhs)); });
            }
        }
        out.push_back(std::move(c).done());
    }
    {
        const int n_max = o.n_max.value_or(200);
        Check c(s, "diagonal: sum_k C(n-k,k) = F_{n+1}", bounds(0, "n", n_max));
        for (int n = 0; n <= n_max; ++n) {
            Count lhs = 0;
            for (int k = 0; k <= n / 2; ++k) lhs += binom(n - k, k);
            const Count rhs = fib(idx(n + 1));
            c.expect(lhs == rhs, [&] { return cat("n=", n, ": ", str(lhs), " != ", str(rhs)); });
        }
        out.push_back(std::move(c).done());
    }
    {
        const int n_max = o.n_max.value_or(10000);
        Check c(s, "F_n = F_{n-1} + F_{n-2}", bounds(2, "n", n_max));
        c.expect(fib(0) == 0 && fib(1) == 1, [] { return std::string("F_0, F_1 != 0, 1"); });
        for (int n = 2; n <= n_max; ++n) {
            c.expect(fib(idx(n)) == fib(idx(n - 1)) + fib(idx(n - 2)), [&] { return cat("n=", n); });
        }
        out.push_back(std::move(c).done());
    }
    return out;
}

Reports suite_eq1_2(const VerifyOptions& o) {
    constexpr std::string_view s = "eq1_2";
    const int universe = o.n_max.value_or(14);
    const int k_max = o.k_max.value_or(10);
    if (universe > kMaskMaxN) throw SizeLimitError(cat("eq1_2: universe {1..", universe, "} is too large"));
    Reports out;

    Check c(s, "S^(k) = nonmaximal u {maximal containing k}", cat("1<=k<=", k_max, ", E subset of {1..", universe, "}"));
    Check beyond(s, "k > max E: S^(k) membership is nonmaximality", cat("1<=k<=", k_max, ", E subset of {1..", universe, "}"));
    Check weight(s, "omega(E, {}) = |E|", cat("E subset of {1..", universe, "}"));
    const FiniteSet none;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << universe); ++mask) {
        const FiniteSet e = FiniteSet::from_mask(mask);
        const auto kind = classify(e);
        weight.expect(omega(e, none) == e.size(), [&] { return e.to_string(); });
        for (int k = 1; k <= k_max; ++k) {
            const bool lhs = in_S_k(e, k);
            const bool rhs = kind == SchreierKind::NonmaximalSchreier || kind == SchreierKind::Empty ||
                             (kind == SchreierKind::MaximalSchreier && e.contains(k));
            c.expect(lhs == rhs, [&] { return cat("k=", k, " E=", e.to_string()); });
            if (e.empty() || k > e.max()) {
                const bool nonmax = kind == SchreierKind::NonmaximalSchreier || kind == SchreierKind::Empty;
                beyond.expect(lhs == nonmax, [&] { return cat("k=", k, " E=", e.to_string()); });
            }
        }
    }
    out.push_back(std::move(c).done());
    out.push_back(std::move(beyond).done());
    out.push_back(std::move(weight).done());
    return out;
}

Reports suite_eq3_10(const VerifyOptions& o) {
    const int l_max = o.k_max.value_or(25);
    const int width = o.n_max.value_or(200);
    Check c("eq3_10", "sum_{i=0}^{l} C(l,i) F_{k-i} = F_{k+l}", cat("0<=l<=", l_max, ", l+2<=k<=l+", width));
    for (int l = 0; l <= l_max; ++l) {
        for (int k = l + 2; k <= l + width; ++k) {
            const Count lhs = fib_binom_convolution(k, l);
            const Count rhs = fib(idx(k + l));
            c.expect(lhs == rhs, [&] { return cat("k=", k, " l=", l, ": ", str(lhs), " != ", str(rhs)); });
        }
    }
    return {std::move(c).done()};
}

Reports suite_thm1_1(const VerifyOptions& o) {
    constexpr std::string_view s = "thm1_1";
    const int formula_max = o.n_max.value_or(500);
    const int enum_max = std::min(22, formula_max);
    const int bij_max = std::min(16, formula_max);
    Reports out;

    {
        Check c(s, "|A_{n,n}| (naive and by-min) = 2F_n", bounds(1, "n", enum_max));
        for (int n = 1; n <= enum_max; ++n) {
            const Count naive = count_A(n, n, Strategy::naive, o.enumeration);
            const Count by_min = count_A(n, n, Strategy::by_min, o.enumeration);
            const Count expected = 2 * fib(idx(n));
            c.expect(naive == expected && by_min == expected, [&] {
                return cat("n=", n, ": naive=", str(naive), " by_min=", str(by_min), " 2F_n=", str(expected));
            });
        }
        out.push_back(std::move(c).done());
    }
    {
        Check c(s, "psi1/psi2 partition of A_{n+1,n+1}", bounds(2, "n", bij_max));
        Check ineq(s, "min psi1(F) > omega_{n+1}(psi1(F))", bounds(2, "n", bij_max));
        for (int n = 2; n <= bij_max; ++n) {
            const auto report = verify_partition(PartitionKind::diagonal, n, std::nullopt, o.enumeration);
            c.expect(report.passed(), [&] {
                return cat("n=", n, ": ", report.first_violation ? report.first_violation->set.to_string() : "",
                           " ", report.first_violation ? report.first_violation->description : "");
            });
            for (const auto& f : enumerate_A(n - 1, n - 1, Strategy::naive, o.enumeration)) {
                const FiniteSet image = psi1(f, n);
                ineq.expect(in_S_k(image, n + 1), [&] { return cat("n=", n, " F=", f.to_string()); });
            }
        }
        out.push_back(std::move(c).done());
        out.push_back(std::move(ineq).done());
    }
    {
        Check c(s, "2F_n = double sum = a_closed(n,n)", bounds(1, "n", formula_max));
        for (int n = 1; n <= formula_max; ++n) {
            const Count diag = a_diag(n);
            const Count dsum = a_diag_double_sum(n);
            const Count closed = a_closed(n, n);
            c.expect(diag == dsum && diag == closed, [&] {
                return cat("n=", n, ": 2F_n=", str(diag), " double_sum=", str(dsum), " closed=", str(closed));
            });
        }
        out.push_back(std::move(c).done());
    }
    return out;
}

Reports suite_thm1_2(const VerifyOptions& o) {
    constexpr std::string_view s = "thm1_2";
    const int k_max = o.k_max.value_or(12);
    const int n_max = o.n_max.value_or(20);
    require_oracle(s, std::max(n_max, 16), o);
    Reports out;

    {
        Check c(s, "a_closed = |A_{k,n}| (naive)", cat("1<=k<=", k_max, ", 1<=n<=", n_max));
        for (int k = 1; k <= k_max; ++k) {
            for (int n = 1; n <= n_max; ++n) {
                const Count oracle = count_A(k, n, Strategy::naive, o.enumeration);
                const Count closed = a_closed(k, n);
                c.expect(oracle == closed,
                         [&] { return cat("k=", k, " n=", n, ": oracle=", str(oracle), " closed=", str(closed)); });
            }
        }
        out.push_back(std::move(c).done());
    }
    {
        const auto& table = reference_table();
        Check c(s, "enumeration, both counts and a_closed match the reference table", "1<=k<=7, 1<=n<=16");
        for (int k = 1; k <= 7; ++k) {
            for (int n = 1; n <= 16; ++n) {
                const Count expected = table[idx(k - 1)][idx(n - 1)];
                const auto sets = enumerate_A(k, n, Strategy::naive, o.enumeration);
                const Count listed = sets.size();
                const Count naive = count_A(k, n, Strategy::naive, o.enumeration);
                const Count by_min = count_A(k, n, Strategy::by_min, o.enumeration);
                const Count closed = a_closed(k, n);
                c.expect(listed == expected && naive == expected && by_min == expected && closed == expected, [&] {
                    return cat("k=", k, " n=", n, ": table=", str(expected), " listed=", str(listed), " naive=",
                               str(naive), " by_min=", str(by_min), " closed=", str(closed));
                });
            }
        }
        out.push_back(std::move(c).done());
    }
    {
        Check c(s, "worked example a_{4,10}: 60 + 40 + 16 = 116", "k=4, n=10");
        const auto terms = a_middle_case_terms(4, 10);
        c.expect(terms.fibonacci_sum == 60 && terms.boundary == 40 && terms.tail == 16 && a_closed(4, 10) == 116,
                 [&] {
                     return cat(str(terms.fibonacci_sum), " + ", str(terms.boundary), " + ", str(terms.tail));
                 });
        out.push_back(std::move(c).done());
    }
    {
        const int diag_max = o.n_max.value_or(300);
        Check c(s, "middle case at l=0 reduces to 2F_k", bounds(2, "k", diag_max));
        for (int k = 2; k <= diag_max; ++k) {
            const Count middle = a_middle_case_terms(k, k).total();
            c.expect(middle == 2 * fib(idx(k)), [&] { return cat("k=", k, ": ", str(middle)); });
        }
        out.push_back(std::move(c).done());
    }
    return out;
}

Reports suite_thm1_3(const VerifyOptions& o) {
    const int l_max = 30;
    const int k_top = o.n_max.value_or(400);
    Check c("thm1_3", "a_band(k,l) = a_closed(k,k+l) = 2F_{k+l}", cat("0<=l<=", l_max, ", l+2<=k<=", k_top));
    for (int l = 0; l <= l_max; ++l) {
        for (int k = l + 2; k <= k_top; ++k) {
            const Count band = a_band(k, l);
            const Count closed = a_closed(k, k + l);
            const Count expected = 2 * fib(idx(k + l));
            c.expect(band == expected && closed == expected,
                     [&] { return cat("k=", k, " l=", l, ": band=", str(band), " closed=", str(closed)); });
        }
    }
    return {std::move(c).done()};
}

Reports suite_prop3_1(const VerifyOptions& o) {
    constexpr std::string_view s = "prop3_1";
    const int n_max = o.n_max.value_or(300);
    const int enum_max = std::min(16, n_max);
    Reports out;
    {
        Check c(s, "|A_{k,n}| (naive and by-min) = F_{n+1} for k > n", cat("1<=n<=", enum_max, ", n<k<=n+3"));
        for (int n = 1; n <= enum_max; ++n) {
            for (int k = n + 1; k <= n + 3; ++k) {
                const Count naive = count_A(k, n, Strategy::naive, o.enumeration);
                const Count by_min = count_A(k, n, Strategy::by_min, o.enumeration);
                const Count expected = fib(idx(n + 1));
                c.expect(naive == expected && by_min == expected,
                         [&] { return cat("k=", k, " n=", n, ": naive=", str(naive), " by_min=", str(by_min)); });
            }
        }
        out.push_back(std::move(c).done());
    }
    {
        Check c(s, "a_closed(k,n) = F_{n+1} for k > n", cat("1<=n<=", n_max, ", k in {n+1, n+2, 2n+1}"));
        for (int n = 1; n <= n_max; ++n) {
            for (int k : {n + 1, n + 2, 2 * n + 1}) {
                const Count closed = a_closed(k, n);
                const Count direct = a_beyond_diagonal(k, n);
                const Count expected = fib(idx(n + 1));
                c.expect(closed == expected && direct == expected,
                         [&] { return cat("k=", k, " n=", n, ": closed=", str(closed)); });
            }
        }
        out.push_back(std::move(c).done());
    }
    return out;
}

Reports suite_rec3_1(const VerifyOptions& o) {
    constexpr std::string_view s = "rec3_1";
    const int k_max = o.k_max.value_or(12);
    const int n_max = o.n_max.value_or(40);
    const int bij_k = std::min(8, k_max);
    const int bij_n = std::min(16, n_max);
    Reports out;
    {
        Check c(s, "inclusion/psi partition of A_{k,n}", cat("2<=k<=", bij_k, ", max{k,2}<n<=", bij_n));
        for (int k = 2; k <= bij_k; ++k) {
            for (int n = std::max(k, 2) + 1; n <= bij_n; ++n) {
                const auto report = verify_partition(PartitionKind::recurrence, n, k, o.enumeration);
                c.expect(report.passed(), [&] {
                    return cat("k=", k, " n=", n, ": ",
                               report.first_violation ? report.first_violation->set.to_string() : "", " ",
                               report.first_violation ? report.first_violation->description : "");
                });
            }
        }
        out.push_back(std::move(c).done());
    }
    {
        const auto table = a_recurrence_table(k_max, n_max);
        Check c(s, "recurrence table = a_closed", cat("1<=k<=", k_max, ", 1<=n<=", n_max));
        for (const auto& cell : table.cells()) {
            const Count closed = a_closed(cell.k, cell.n);
            c.expect(cell.value == closed, [&] {
                return cat("k=", cell.k, " n=", cell.n, ": table=", str(cell.value), " closed=", str(closed));
            });
        }
        out.push_back(std::move(c).done());
    }
    return out;
}

Reports suite_lemma3_3(const VerifyOptions& o) {
    const int k_max = o.k_max.value_or(12);
    const int n_max = o.n_max.value_or(60);
    constexpr int trials = 50;
    Check c("lemma3_3", "seeded minus zero-seeded = sum_i C(n,i) b_{k-1-i}",
            cat("1<=k<=", k_max, ", 0<=n<=", n_max, ", ", trials, " seed vectors, seed=", o.seed));

    {
        // Worked instance: k=2, b=(3,5), all-ones input, n=2 gives 12 - 1 = 11.
        const Seq ones(4, Int(1));
        const Seq seeds{3, 5};
        const Int diff = iterated_seeded(seeds, ones)[2] - k_partial_sum(ones, 2)[2];
        c.expect(diff == 11, [&] { return cat("worked instance gave ", str(diff)); });
    }

    std::mt19937_64 rng(o.seed);
    const std::size_t length = idx(n_max) + 1;
    for (int k = 1; k <= k_max; ++k) {
        for (int t = 0; t < trials; ++t) {
            const Seq seeds = random_seq(rng, idx(k));
            const Seq a = random_seq(rng, length);
            const Seq seeded = iterated_seeded(seeds, a);
            const Seq plain = k_partial_sum(a, idx(k));
            for (int n = 0; n <= n_max; ++n) {
                Int rhs = 0;
                for (int i = 0; i <= k - 1; ++i) rhs += Int(binom(n, i)) * seeds[idx(k - 1 - i)];
                const Int lhs = seeded[idx(n)] - plain[idx(n)];
                c.expect(lhs == rhs,
                         [&] { return cat("k=", k, " trial=", t, " n=", n, ": ", str(lhs), " != ", str(rhs)); });
            }
        }
    }
    return {std::move(c).done()};
}

Reports suite_lemma3_4(const VerifyOptions& o) {
    const int k_max = o.k_max.value_or(12);
    const int n_max = o.n_max.value_or(60);
    constexpr int trials = 50;
    Check c("lemma3_4", "P^(k)(a+1)(m) - P^(k)(a)(m) = C(m,k)",
            cat("0<=k<=", k_max, ", 0<=m<=", n_max, ", ", trials, " sequences, seed=", o.seed));
    // Offset the stream so the two lemma suites do not reuse draws.
    std::mt19937_64 rng(o.seed ^ 0x9e3779b97f4a7c15ull);
    const std::size_t length = idx(n_max) + 1;
    for (int k = 0; k <= k_max; ++k) {
        for (int t = 0; t < trials; ++t) {
            const Seq a = random_seq(rng, length);
            Seq shifted = a;
            for (Int& x : shifted) x += 1;
            const Seq lhs_seq = k_partial_sum(shifted, idx(k));
            const Seq rhs_seq = k_partial_sum(a, idx(k));
            for (int m = 0; m <= n_max; ++m) {
                const Int diff = lhs_seq[idx(m)] - rhs_seq[idx(m)];
                const Int expected = binom(m, k);
                c.expect(diff == expected,
                         [&] { return cat("k=", k, " trial=", t, " m=", m, ": ", str(diff), " != ", str(expected)); });
            }
        }
    }
    return {std::move(c).done()};
}

Reports suite_lemma3_5(const VerifyOptions& o) {
    const int k_max = o.k_max.value_or(12);
    const int l_max = o.n_max.value_or(60);
    Check c("lemma3_5", "P^(k)(F_{n+2})(l) = P^(k)(F)(l) + P^(k)(F)(l+1)", cat("0<=k<=", k_max, ", 0<=l<=", l_max));
    const Seq shifted_fib = fibonacci_prefix(idx(l_max) + 1, 2);
    const Seq plain_fib = fibonacci_prefix(idx(l_max) + 2);
    for (int k = 0; k <= k_max; ++k) {
        const Seq lhs = k_partial_sum(shifted_fib, idx(k));
        const Seq rhs = k_partial_sum(plain_fib, idx(k));
        for (int l = 0; l <= l_max; ++l) {
            c.expect(lhs[idx(l)] == rhs[idx(l)] + rhs[idx(l + 1)], [&] { return cat("k=", k, " l=", l); });
        }
    }
    return {std::move(c).done()};
}

Reports suite_eq3_8(const VerifyOptions& o) {
    const int k_max = o.k_max.value_or(10);
    const int l_max = o.n_max.value_or(20);
    Check c("eq3_8", "a_{k,k+l} - P^(k-1)(a_{1,j+1})(l) = sum_i C(l,i) a_{k-i,k-i}",
            cat("2<=k<=", k_max, ", 0<=l<=", l_max));
    Seq first_row;
    for (int j = 0; j <= l_max; ++j) first_row.push_back(a_closed(1, j + 1));
    for (int k = 2; k <= k_max; ++k) {
        const Seq partial = k_partial_sum(first_row, idx(k - 1));
        for (int l = 0; l <= l_max; ++l) {
            const Int lhs = Int(a_closed(k, k + l)) - partial[idx(l)];
            Int rhs = 0;
            for (int i = 0; i <= k - 2; ++i) rhs += Int(binom(l, i)) * a_closed(k - i, k - i);
            c.expect(lhs == rhs, [&] { return cat("k=", k, " l=", l, ": ", str(lhs), " != ", str(rhs)); });
        }
    }
    return {std::move(c).done()};
}

Reports suite_eq3_9(const VerifyOptions& o) {
    const int k_max = o.k_max.value_or(12);
    const int l_max = o.n_max.value_or(60);
    Check c("eq3_9", "P^(k)(F)(l) = sum_j C(j, l-1-j+k)", cat("0<=k<=", k_max, ", 0<=l<=", l_max));
    const Seq fibs = fibonacci_prefix(idx(l_max) + 1);
    for (int k = 0; k <= k_max; ++k) {
        const Seq partial = k_partial_sum(fibs, idx(k));
        for (int l = 0; l <= l_max; ++l) {
            const Count closed = fib_partial_sum_closed(idx(k), idx(l));
            c.expect(partial[idx(l)] == closed, [&] {
                return cat("k=", k, " l=", l, ": iterated=", str(partial[idx(l)]), " closed=", str(closed));
            });
        }
    }
    return {std::move(c).done()};
}

Reports suite_thm1_4(const VerifyOptions& o) {
    constexpr std::string_view s = "thm1_4";
    const int n_max = o.n_max.value_or(22);
    const int bij_max = std::min(18, n_max);
    require_oracle(s, n_max + 1, o);
    Reports out;

    {
        Check c(s, "|K_n| = F_{n-1}", bounds(2, "n", n_max));
        for (int n = 2; n <= n_max; ++n) {
            const Count listed = enumerate_K(n, o.enumeration).size();
            const Count expected = k_count(n);
            c.expect(listed == expected,
                     [&] { return cat("n=", n, ": listed=", str(listed), " F_{n-1}=", str(expected)); });
        }
        out.push_back(std::move(c).done());
    }
    {
        const int case_max = n_max;
        Check c(s, "case split of K_{n+1} by membership of 2 and 3", bounds(3, "n", case_max));
        for (int n = 3; n <= case_max; ++n) {
            KCaseCounts seen;
            for (const auto& e : enumerate_K(n + 1, o.enumeration)) {
                const bool two = e.contains(2);
                const bool three = e.contains(3);
                if (two && three) seen.case1 += 1;
                else if (two) seen.case2 += 1;
                else if (three) seen.case3 += 1;
                else seen.case4 += 1;
            }
            const KCaseCounts formula = k_case_counts(n);
            const bool ok = seen.case1 == formula.case1 && seen.case2 == formula.case2 &&
                            seen.case3 == formula.case3 && seen.case4 == formula.case4 &&
                            formula.total() == fib(idx(n)) && formula.case4 == fib(idx(n)) - (n - 2);
            c.expect(ok, [&] {
                return cat("n=", n, ": enumerated {", str(seen.case1), ",", str(seen.case2), ",", str(seen.case3), ",",
                           str(seen.case4), "} formula {", str(formula.case1), ",", str(formula.case2), ",",
                           str(formula.case3), ",", str(formula.case4), "}");
            });
        }
        out.push_back(std::move(c).done());
    }
    {
        Check c(s, "f/g partition of K_{n+1}", bounds(3, "n", bij_max));
        for (int n = 3; n <= bij_max; ++n) {
            const auto report = verify_partition(PartitionKind::k_sets, n, std::nullopt, o.enumeration);
            c.expect(report.passed(), [&] {
                return cat("n=", n, ": ", report.first_violation ? report.first_violation->set.to_string() : "", " ",
                           report.first_violation ? report.first_violation->description : "");
            });
        }
        out.push_back(std::move(c).done());
    }
    {
        Check min2(s, "members of K_{n-1} with min 2, size > 1 are {2,3,n-1} (none below n=5)", bounds(3, "n", bij_max));
        Check min3(s, "members of K_{n-1} with min 3, size > 1 are {3,m,n-1} (none below n=6)", bounds(3, "n", bij_max));
        for (int n = 3; n <= bij_max; ++n) {
            for (const auto& f : enumerate_K(n - 1, o.enumeration)) {
                if (f.size() <= 1) continue;
                if (f.min() == 2) {
                    min2.expect(n >= 5 && f == FiniteSet{2, 3, n - 1},
                                [&] { return cat("n=", n, " F=", f.to_string()); });
                } else if (f.min() == 3) {
                    min3.expect(n >= 6 && f.size() == 3 && f.max() == n - 1,
                                [&] { return cat("n=", n, " F=", f.to_string()); });
                }
            }
        }
        out.push_back(std::move(min2).done());
        out.push_back(std::move(min3).done());
    }
    return out;
}

Reports suite_mpq(const VerifyOptions& o) {
    const int n_max = o.n_max.value_or(18);
    const int pq_max = o.k_max.value_or(3);
    require_oracle("mpq", n_max, o);
    Check c("mpq", "alternating recurrence = exhaustive m_{p,q,n}",
            cat("1<=p,q<=", pq_max, ", p+q<=n<=", n_max));
    for (int p = 1; p <= pq_max; ++p) {
        for (int q = 1; q <= pq_max; ++q) {
            for (int n = p + q; n <= n_max; ++n) {
                const Count oracle = count_mpq(p, q, n, o.enumeration);
                const Count rec = mpq_recurrence(p, q, n, o.enumeration);
                c.expect(oracle == rec, [&] {
                    return cat("p=", p, " q=", q, " n=", n, ": oracle=", str(oracle), " recurrence=", str(rec));
                });
            }
        }
    }
    Check bird("mpq", "m_{1,1,n} = F_n", bounds(1, "n", n_max));
    for (int n = 1; n <= n_max; ++n) {
        const Count oracle = count_mpq(1, 1, n, o.enumeration);
        bird.expect(oracle == fib(idx(n)), [&] { return cat("n=", n, ": ", str(oracle)); });
    }
    return {std::move(c).done(), std::move(bird).done()};
}

struct SuiteEntry {
    Suite suite;
    std::string_view name;
    Reports (*run)(const VerifyOptions&);
};

const std::vector<SuiteEntry>& registry() {
    static const std::vector<SuiteEntry> entries{
        {Suite::identities, "identities", suite_identities},
        {Suite::eq1_2, "eq1_2", suite_eq1_2},
        {Suite::eq3_10, "eq3_10", suite_eq3_10},
        {Suite::thm1_1, "thm1_1", suite_thm1_1},
        {Suite::thm1_2, "thm1_2", suite_thm1_2},
        {Suite::thm1_3, "thm1_3", suite_thm1_3},
        {Suite::prop3_1, "prop3_1", suite_prop3_1},
        {Suite::rec3_1, "rec3_1", suite_rec3_1},
        {Suite::lemma3_3, "lemma3_3", suite_lemma3_3},
        {Suite::lemma3_4, "lemma3_4", suite_lemma3_4},
        {Suite::lemma3_5, "lemma3_5", suite_lemma3_5},
        {Suite::eq3_8, "eq3_8", suite_eq3_8},
        {Suite::eq3_9, "eq3_9", suite_eq3_9},
        {Suite::thm1_4, "thm1_4", suite_thm1_4},
        {Suite::mpq, "mpq", suite_mpq},
    };
    return entries;
}

}  // namespace

const std::vector<std::string_view>& suite_names() {
    static const std::vector<std::string_view> names = [] {
        std::vector<std::string_view> out;
        for (const auto& e : registry()) out.push_back(e.name);
        out.push_back("all");
        return out;
    }();
    return names;
}

std::optional<Suite> parse_suite(std::string_view name) {
    if (name == "all") return Suite::all;
    for (const auto& e : registry()) {
        if (e.name == name) return e.suite;
    }
    return std::nullopt;
}

std::string_view to_string(Suite suite) {
    if (suite == Suite::all) return "all";
    for (const auto& e : registry()) {
        if (e.suite == suite) return e.name;
    }
    return "?";
}

std::vector<Report> run_suite(Suite suite, const VerifyOptions& options) {
    std::vector<Report> out;
    for (const auto& e : registry()) {
        if (suite != Suite::all && e.suite != suite) continue;
        auto reports = e.run(options);
        out.insert(out.end(), std::make_move_iterator(reports.begin()), std::make_move_iterator(reports.end()));
    }
    return out;
}

const std::vector<std::vector<int>>& reference_table() {
    static const std::vector<std::vector<int>> table{
        {2, 3, 4, 6, 9, 14, 22, 35, 56, 90, 145, 234, 378, 611, 988, 1598},
        {1, 2, 4, 7, 11, 17, 26, 40, 62, 97, 153, 243, 388, 622, 1000, 1611},
        {1, 2, 4, 6, 10, 17, 28, 45, 71, 111, 173, 270, 423, 666, 1054, 1676},
        {1, 2, 3, 6, 10, 16, 26, 43, 71, 116, 187, 298, 471, 741, 1164, 1830},
        {1, 2, 3, 5, 10, 16, 26, 42, 68, 111, 182, 298, 485, 783, 1254, 1995},
        {1, 2, 3, 5, 8, 16, 26, 42, 68, 110, 178, 289, 471, 769, 1254, 2037},
        {1, 2, 3, 5, 8, 13, 26, 42, 68, 110, 178, 288, 466, 755, 1226, 1995},
    };
    return table;
}

}  // namespace schreier
