#include <gtest/gtest.h>

#include <set>

#include "golden_table.hpp"
#include "schreier/errors.hpp"
#include "schreier/verify.hpp"

namespace schreier {
namespace {

bool all_passed(const std::vector<Report>& reports) {
    for (const auto& r : reports) {
        if (!r.passed) return false;
    }
    return !reports.empty();
}

TEST(Suites, NamesRoundTrip) {
    const auto& names = suite_names();
    EXPECT_EQ(names.size(), 16u);
    EXPECT_EQ(names.back(), "all");
    std::set<std::string_view> unique(names.begin(), names.end());
    EXPECT_EQ(unique.size(), names.size());
    for (auto name : names) {
        const auto suite = parse_suite(name);
        ASSERT_TRUE(suite) << name;
        EXPECT_EQ(to_string(*suite), name);
    }
    EXPECT_FALSE(parse_suite("thm9_9"));
    EXPECT_FALSE(parse_suite(""));
    EXPECT_FALSE(parse_suite("THM1_1"));
}

TEST(Suites, EachPassesAtDefaults) {
    for (auto name : suite_names()) {
        if (name == "all") continue;
        const auto reports = run_suite(*parse_suite(name));
        ASSERT_FALSE(reports.empty()) << name;
        for (const auto& r : reports) {
            EXPECT_TRUE(r.passed) << r.suite << " | " << r.name << " | " << r.counterexample.value_or("");
            EXPECT_EQ(r.suite, name);
            EXPECT_GT(r.cases, 0u) << r.name;
            EXPECT_FALSE(r.counterexample);
        }
    }
}

TEST(Suites, AllIsTheConcatenation) {
    std::size_t total = 0;
    for (auto name : suite_names()) {
        if (name != "all") total += run_suite(*parse_suite(name)).size();
    }
    const auto all = run_suite(Suite::all);
    EXPECT_EQ(all.size(), total);
    EXPECT_TRUE(all_passed(all));
    EXPECT_EQ(all.front().suite, "identities");
    EXPECT_EQ(all.back().suite, "mpq");
}

TEST(Suites, ReferenceTableMatchesGolden) {
    const auto golden = test::golden_table();
    const auto& ref = reference_table();
    ASSERT_EQ(ref.size(), golden.size());
    for (std::size_t k = 0; k < ref.size(); ++k) {
        ASSERT_EQ(ref[k].size(), 16u);
        for (std::size_t n = 0; n < 16; ++n) EXPECT_EQ(ref[k][n], golden[k][n]);
    }
}

TEST(Suites, CorruptedFibonacciIsCaught) {
    schreier::testing::corrupt_fib_cache(12, Count(145));
    const auto reports = run_suite(Suite::all);
    schreier::testing::reset_fib_cache();
    EXPECT_FALSE(all_passed(reports));
    bool some_counterexample = false;
    for (const auto& r : reports) {
        if (!r.passed) {
            ASSERT_TRUE(r.counterexample) << r.name;
            some_counterexample = true;
        }
    }
    EXPECT_TRUE(some_counterexample);
    EXPECT_TRUE(all_passed(run_suite(Suite::all)));
}

TEST(Overrides, NarrowerRangesStillPass) {
    VerifyOptions o;
    o.n_max = 8;
    o.k_max = 4;
    for (auto s : {Suite::thm1_1, Suite::thm1_2, Suite::rec3_1, Suite::thm1_4, Suite::mpq, Suite::eq1_2}) {
        EXPECT_TRUE(all_passed(run_suite(s, o))) << to_string(s);
    }
}

TEST(Overrides, RangeIsReflectedInTheReport) {
    VerifyOptions o;
    o.n_max = 600;
    const auto reports = run_suite(Suite::thm1_1, o);
    ASSERT_TRUE(all_passed(reports));
    EXPECT_EQ(reports.back().cases, 600u);
    EXPECT_NE(reports.back().range.find("600"), std::string::npos);
}

TEST(Overrides, OversizedOracleFailsFast) {
    VerifyOptions o;
    o.n_max = 30;
    EXPECT_THROW(run_suite(Suite::thm1_2, o), SizeLimitError);
    EXPECT_THROW(run_suite(Suite::thm1_4, o), SizeLimitError);
    EXPECT_THROW(run_suite(Suite::mpq, o), SizeLimitError);
}

TEST(Seeds, DifferentSeedsPassAndSameSeedRepeats) {
    VerifyOptions a;
    a.seed = 1;
    const auto first = run_suite(Suite::lemma3_3, a);
    const auto again = run_suite(Suite::lemma3_3, a);
    ASSERT_TRUE(all_passed(first));
    ASSERT_EQ(first.size(), again.size());
    for (std::size_t i = 0; i < first.size(); ++i) {
        EXPECT_EQ(first[i].cases, again[i].cases);
        EXPECT_EQ(first[i].range, again[i].range);
    }
    EXPECT_NE(first[0].range.find("seed=1"), std::string::npos);
    EXPECT_TRUE(all_passed(run_suite(Suite::lemma3_4, a)));
}

}  // namespace
}  // namespace schreier
