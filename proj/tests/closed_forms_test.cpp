#include <gtest/gtest.h>

#include "golden_table.hpp"
#include "schreier/closed_forms.hpp"
#include "schreier/errors.hpp"

namespace schreier {
namespace {

TEST(AClosed, Examples) {
    EXPECT_EQ(a_closed(4, 10), 116);
    EXPECT_EQ(a_closed(1, 4), 6);
    EXPECT_EQ(a_closed(2, 3), 4);
}

TEST(AClosed, MiddleCaseTermsOfTheWorkedExample) {
    const auto t = a_middle_case_terms(4, 10);
    // 2 (C(6,0) F_4 + C(6,1) F_3 + C(6,2) F_2) = 2 (3 + 12 + 15)
    EXPECT_EQ(t.fibonacci_sum, 60);
    EXPECT_EQ(t.boundary, 40);
    // C(5,5) + C(6,4)
    EXPECT_EQ(t.tail, 16);
    EXPECT_EQ(t.total(), 116);
}

TEST(AClosed, MatchesGoldenTable) {
    const auto table = test::golden_table();
    for (int k = 1; k <= 7; ++k) {
        for (int n = 1; n <= 16; ++n) {
            EXPECT_EQ(a_closed(k, n), table[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(n - 1)]) << k << "," << n;
        }
    }
}

TEST(AClosed, MatchesOracle) {
    for (int k = 1; k <= 12; ++k) {
        for (int n = 1; n <= 20; ++n) {
            ASSERT_EQ(a_closed(k, n), count_A(k, n, Strategy::by_min)) << k << "," << n;
        }
    }
}

TEST(AClosed, OnTheDiagonalMiddleCaseIsTwiceFibonacci) {
    for (int k = 2; k <= 300; ++k) ASSERT_EQ(a_closed(k, k), 2 * fib(static_cast<std::size_t>(k)));
}

TEST(AClosed, RejectsNonPositive) {
    EXPECT_THROW(a_closed(0, 3), ParameterError);
    EXPECT_THROW(a_closed(3, 0), ParameterError);
    EXPECT_THROW(a_middle_case_terms(1, 4), ParameterError);
    EXPECT_THROW(a_middle_case_terms(5, 4), ParameterError);
}

TEST(ADiag, Examples) {
    EXPECT_EQ(a_diag(1), 2);
    EXPECT_EQ(a_diag(5), 10);
    EXPECT_EQ(a_diag(30), 1664080);
    EXPECT_EQ(a_diag_double_sum(1), 2);
    EXPECT_EQ(a_diag_double_sum(5), 10);
    EXPECT_EQ(a_diag_double_sum(16), 1974);
    EXPECT_THROW(a_diag(0), ParameterError);
    EXPECT_THROW(a_diag_double_sum(0), ParameterError);
}

TEST(ADiag, ThreeFormulasAgree) {
    for (int n = 1; n <= 500; ++n) {
        const Count d = a_diag(n);
        ASSERT_EQ(a_diag_double_sum(n), d) << n;
        ASSERT_EQ(a_closed(n, n), d) << n;
    }
}

TEST(ADiag, AgreesWithEnumerationToTwenty) {
    for (int n = 1; n <= 20; ++n) ASSERT_EQ(count_A(n, n, Strategy::naive), a_diag(n)) << n;
}

TEST(ABand, Examples) {
    EXPECT_EQ(a_band(5, 0), 10);
    EXPECT_EQ(a_band(6, 1), 26);
    EXPECT_EQ(a_band(7, 5), 288);
    EXPECT_THROW(a_band(6, 5), ParameterError);
    EXPECT_THROW(a_band(6, -1), ParameterError);
}

TEST(ABand, MatchesClosedForm) {
    for (int l = 0; l <= 30; ++l) {
        for (int k = l + 2; k <= 120; ++k) {
            ASSERT_EQ(a_band(k, l), a_closed(k, k + l)) << k << "," << l;
        }
    }
}

TEST(ABand, BreaksBelowTheBand) {
    // a_{3,5} = 10 while 2 F_5 = 10 holds by coincidence; a_{3,6} = 17 != 2 F_6.
    EXPECT_NE(a_closed(3, 6), 2 * fib(6));
    EXPECT_NE(a_closed(4, 10), 2 * fib(10));
}

TEST(ABeyondDiagonal, Examples) {
    EXPECT_EQ(a_beyond_diagonal(3, 1), 1);
    EXPECT_EQ(a_beyond_diagonal(7, 6), 13);
    EXPECT_THROW(a_beyond_diagonal(4, 4), ParameterError);
    for (int n = 1; n <= 300; ++n) {
        for (int k : {n + 1, n + 2, 2 * n + 5}) ASSERT_EQ(a_closed(k, n), a_beyond_diagonal(k, n)) << k << "," << n;
    }
}

TEST(RecurrenceTable, Examples) {
    const auto t = a_recurrence_table(7, 16);
    EXPECT_EQ(t.at(3, 5), 10);
    EXPECT_FALSE(t.seeded(3, 5));
    EXPECT_EQ(t.at(2, 5), 11);
    EXPECT_FALSE(t.seeded(2, 5));
    EXPECT_EQ(t.at(1, 7), 22);
    EXPECT_TRUE(t.seeded(1, 7));
    EXPECT_TRUE(t.seeded(4, 4));
    EXPECT_TRUE(t.seeded(2, 2));
    EXPECT_THROW(t.at(8, 1), ParameterError);
    EXPECT_THROW(t.at(1, 17), ParameterError);
}

TEST(RecurrenceTable, MatchesGoldenTable) {
    const auto table = test::golden_table();
    const auto t = a_recurrence_table(7, 16);
    const auto cells = t.cells();
    ASSERT_EQ(cells.size(), 112u);
    for (const auto& c : cells) {
        EXPECT_EQ(c.value, table[static_cast<std::size_t>(c.k - 1)][static_cast<std::size_t>(c.n - 1)]);
    }
    EXPECT_EQ(cells.front().k, 1);
    EXPECT_EQ(cells.front().n, 1);
    EXPECT_EQ(cells[1].n, 2);
}

TEST(RecurrenceTable, InteriorMatchesClosedForm) {
    const auto t = a_recurrence_table(12, 40);
    int interior = 0;
    for (const auto& c : t.cells()) {
        ASSERT_EQ(c.value, a_closed(c.k, c.n)) << c.k << "," << c.n;
        if (!t.seeded(c.k, c.n)) ++interior;
    }
    EXPECT_GT(interior, 300);
}

TEST(KCount, Examples) {
    EXPECT_EQ(k_count(2), 1);
    EXPECT_EQ(k_count(5), 3);
    EXPECT_EQ(k_count(23), 17711);
    EXPECT_THROW(k_count(1), ParameterError);
}

TEST(KCount, MatchesEnumeration) {
    for (int n = 2; n <= 20; ++n) ASSERT_EQ(Count(enumerate_K(n).size()), k_count(n)) << n;
}

TEST(KCaseCounts, Examples) {
    auto expect = [](int n, long c1, long c2, long c3, long c4) {
        const auto c = k_case_counts(n);
        EXPECT_EQ(c.case1, c1) << n;
        EXPECT_EQ(c.case2, c2) << n;
        EXPECT_EQ(c.case3, c3) << n;
        EXPECT_EQ(c.case4, c4) << n;
    };
    expect(3, 1, 0, 0, 1);
    expect(4, 1, 0, 1, 1);
    expect(10, 1, 0, 7, 47);
    EXPECT_THROW(k_case_counts(2), ParameterError);
}

TEST(KCaseCounts, MatchesClassifiedEnumeration) {
    for (int n = 3; n <= 19; ++n) {
        Count c[4] = {0, 0, 0, 0};
        for (const auto& s : enumerate_K(n + 1)) {
            const bool two = s.contains(2);
            const bool three = s.contains(3);
            c[two && three ? 0 : two ? 1 : three ? 2 : 3] += 1;
        }
        const auto got = k_case_counts(n);
        ASSERT_EQ(got.case1, c[0]) << n;
        ASSERT_EQ(got.case2, c[1]) << n;
        ASSERT_EQ(got.case3, c[2]) << n;
        ASSERT_EQ(got.case4, c[3]) << n;
        ASSERT_EQ(got.total(), fib(static_cast<std::size_t>(n))) << n;
        ASSERT_EQ(got.case4, fib(static_cast<std::size_t>(n)) - (n - 2)) << n;
    }
}

TEST(MpqRecurrence, Examples) {
    EXPECT_EQ(mpq_recurrence(1, 1, 6), 8);
    EXPECT_EQ(mpq_recurrence(1, 1, 1), 1);
    EXPECT_EQ(mpq_recurrence(2, 1, 12), count_mpq(2, 1, 12));
    EXPECT_THROW(mpq_recurrence(0, 1, 4), ParameterError);
}

TEST(MpqRecurrence, MatchesOracle) {
    for (int p = 1; p <= 3; ++p) {
        for (int q = 1; q <= 3; ++q) {
            for (int n = 1; n <= 18; ++n) ASSERT_EQ(mpq_recurrence(p, q, n), count_mpq(p, q, n)) << p << q << n;
        }
    }
}

TEST(MpqRecurrence, UnitRatioIsFibonacciFarOut) {
    for (int n = 1; n <= 200; ++n) ASSERT_EQ(mpq_recurrence(1, 1, n), fib(static_cast<std::size_t>(n)));
}

}  // namespace
}  // namespace schreier
