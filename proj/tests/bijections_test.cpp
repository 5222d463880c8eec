#include <gtest/gtest.h>

#include "schreier/bijections.hpp"
#include "schreier/errors.hpp"

namespace schreier {
namespace {

using Sets = std::vector<FiniteSet>;

TEST(Psi1, Examples) {
    EXPECT_EQ(psi1({}, 3), (FiniteSet{4}));
    EXPECT_EQ(psi1({2}, 3), (FiniteSet{3, 4}));
    EXPECT_EQ(psi1({2, 3}, 4), (FiniteSet{3, 4, 5}));
    EXPECT_THROW(psi1({1}, 3), DomainError);
    EXPECT_THROW(psi1({3}, 3), DomainError);
    EXPECT_THROW(psi1({}, 1), ParameterError);
}

TEST(Psi1, ImageIsStrictlySchreierForTheNewWeight) {
    for (int n = 2; n <= 16; ++n) {
        for (const auto& f : enumerate_A(n - 1, n - 1)) {
            const auto e = psi1(f, n);
            ASSERT_TRUE(in_S_k(e, n + 1));
            ASSERT_EQ(e.min(), f.empty() ? n + 1 : f.min() + 1);
        }
    }
}

TEST(Psi2, Examples) {
    EXPECT_EQ(psi2({3, 5}, 5), (FiniteSet{3, 5}));
    EXPECT_EQ(psi2({2, 3}, 3), (FiniteSet{2, 4}));
    EXPECT_EQ(psi2({}, 4), FiniteSet{});
    EXPECT_THROW(psi2({1, 2}, 3), DomainError);
}

TEST(PsiRec, Examples) {
    EXPECT_EQ(psi_rec({}, 3, 5), (FiniteSet{5}));
    EXPECT_EQ(psi_rec({2}, 2, 4), (FiniteSet{3, 4}));
    EXPECT_EQ(psi_rec({3}, 4, 6), (FiniteSet{4, 6}));
    EXPECT_THROW(psi_rec({5}, 4, 6), DomainError);
    EXPECT_THROW(psi_rec({}, 3, 3), ParameterError);
    EXPECT_THROW(psi_rec({}, 1, 5), ParameterError);
}

TEST(FMap, Examples) {
    EXPECT_EQ(f_map({2}), (FiniteSet{3}));
    EXPECT_EQ(f_map({2, 3, 5}), (FiniteSet{3, 4, 6}));
    EXPECT_EQ(f_map({4, 5, 8}), (FiniteSet{5, 6, 9}));
    EXPECT_TRUE(in_K(f_map({2, 3, 5}), 6));
    EXPECT_THROW(f_map({}), DomainError);
}

TEST(GMap, Examples) {
    EXPECT_EQ(g_map({3}, 4), (FiniteSet{2, 3, 5}));
    EXPECT_EQ(g_map({3, 4, 5}, 6), (FiniteSet{3, 6, 7}));
    EXPECT_EQ(g_map({4, 5, 8}, 9), (FiniteSet{5, 6, 7, 10}));
    EXPECT_TRUE(in_K({3, 6, 7}, 7));
    EXPECT_THROW(g_map({3, 4}, 5), DomainError);
    EXPECT_THROW(g_map({2}, 2), ParameterError);
}

TEST(VerifyPartition, Examples) {
    const auto d = verify_partition(PartitionKind::diagonal, 2);
    EXPECT_TRUE(d.passed());
    EXPECT_EQ(d.first_domain_size + d.second_domain_size, 4u);
    EXPECT_EQ(d.codomain_size, 4u);

    const auto ks = verify_partition(PartitionKind::k_sets, 3);
    EXPECT_TRUE(ks.passed());
    EXPECT_EQ(ks.codomain_size, 2u);

    const auto r = verify_partition(PartitionKind::recurrence, 5, 2);
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(r.codomain_size, 11u);
    EXPECT_EQ(r.k, 2);
}

TEST(VerifyPartition, ParameterErrors) {
    EXPECT_THROW(verify_partition(PartitionKind::diagonal, 1), ParameterError);
    EXPECT_THROW(verify_partition(PartitionKind::k_sets, 2), ParameterError);
    EXPECT_THROW(verify_partition(PartitionKind::recurrence, 5), ParameterError);
    EXPECT_THROW(verify_partition(PartitionKind::recurrence, 4, 4), ParameterError);
    EXPECT_THROW(verify_partition(PartitionKind::diagonal, 30), SizeLimitError);
}

TEST(VerifyPartition, DiagonalRange) {
    for (int n = 2; n <= 14; ++n) ASSERT_TRUE(verify_partition(PartitionKind::diagonal, n).passed()) << n;
}

TEST(VerifyPartition, RecurrenceRange) {
    for (int k = 2; k <= 6; ++k) {
        for (int n = std::max(k, 2) + 1; n <= 14; ++n) {
            ASSERT_TRUE(verify_partition(PartitionKind::recurrence, n, k).passed()) << k << "," << n;
        }
    }
}

TEST(VerifyPartition, KSetsRange) {
    for (int n = 3; n <= 16; ++n) ASSERT_TRUE(verify_partition(PartitionKind::k_sets, n).passed()) << n;
}

TEST(VerifyPartition, ThreadsDoNotChangeTheReport) {
    EnumOptions wide;
    wide.threads = 4;
    const auto a = verify_partition(PartitionKind::k_sets, 14);
    const auto b = verify_partition(PartitionKind::k_sets, 14, std::nullopt, wide);
    EXPECT_EQ(a.passed(), b.passed());
    EXPECT_EQ(a.codomain_size, b.codomain_size);
}

MapPart part(std::string name, Sets domain, std::function<FiniteSet(const FiniteSet&)> f) {
    return MapPart{std::move(name), std::move(domain), std::move(f)};
}

TEST(CertifyPartition, DetectsImageOutsideCodomain) {
    const Sets codomain{{1}, {2}, {3}};
    const auto r = certify_partition("bad", 3, codomain, part("id", {{1}, {2}}, [](const FiniteSet& s) { return s; }),
                                     part("up", {{2}}, [](const FiniteSet& s) { return s.shifted(5); }));
    EXPECT_FALSE(r.well_defined);
    EXPECT_FALSE(r.passed());
    ASSERT_TRUE(r.first_violation);
    EXPECT_EQ(r.first_violation->set, (FiniteSet{2}));
}

TEST(CertifyPartition, DetectsNonInjective) {
    const Sets codomain{{1}, {2}};
    const auto r = certify_partition("bad", 2, codomain,
                                     part("const", {{1}, {2}}, [](const FiniteSet&) { return FiniteSet{1}; }),
                                     part("none", {}, [](const FiniteSet& s) { return s; }));
    EXPECT_TRUE(r.well_defined);
    EXPECT_FALSE(r.injective);
    ASSERT_TRUE(r.first_violation);
    EXPECT_EQ(r.first_violation->set, (FiniteSet{2}));
}

TEST(CertifyPartition, DetectsOverlapAndGap) {
    const Sets codomain{{1}, {2}, {3}};
    const auto id = [](const FiniteSet& s) { return s; };
    const auto overlap = certify_partition("bad", 3, codomain, part("a", {{1}, {2}}, id), part("b", {{2}}, id));
    EXPECT_TRUE(overlap.injective);
    EXPECT_FALSE(overlap.disjointness);
    EXPECT_FALSE(overlap.surjective);

    const auto gap = certify_partition("bad", 3, codomain, part("a", {{1}}, id), part("b", {{3}}, id));
    EXPECT_TRUE(gap.disjointness);
    EXPECT_FALSE(gap.surjective);
    ASSERT_TRUE(gap.first_violation);
    EXPECT_EQ(gap.first_violation->set, (FiniteSet{2}));
}

TEST(CertifyPartition, DomainErrorBecomesAFailure) {
    const Sets codomain{{3}};
    const auto r = certify_partition("bad", 3, codomain, part("f", {{}}, [](const FiniteSet& s) { return f_map(s); }),
                                     part("none", {}, [](const FiniteSet& s) { return s; }));
    EXPECT_FALSE(r.well_defined);
    ASSERT_TRUE(r.first_violation);
    EXPECT_EQ(r.first_violation->set, FiniteSet{});
}

TEST(CertifyPartition, FirstViolationIndependentOfThreads) {
    Sets domain;
    for (int i = 1; i <= 30; ++i) domain.push_back(FiniteSet{i});
    Sets codomain = domain;
    const auto broken = [](const FiniteSet& s) { return s.max() % 7 == 0 ? s.shifted(100) : s; };
    for (unsigned threads : {1u, 2u, 5u}) {
        const auto r = certify_partition("bad", 30, codomain, part("a", domain, broken), part("b", {}, broken), threads);
        ASSERT_TRUE(r.first_violation);
        EXPECT_EQ(r.first_violation->set, (FiniteSet{7})) << threads;
    }
}

TEST(KShape, MinTwoMembersAreForced) {
    for (int n = 4; n <= 18; ++n) {
        int hits = 0;
        for (const auto& s : enumerate_K(n - 1)) {
            if (s.size() > 1 && s.min() == 2) {
                EXPECT_EQ(s, (FiniteSet{2, 3, n - 1}));
                ++hits;
            }
        }
        EXPECT_EQ(hits, n >= 5 ? 1 : 0) << n;
    }
}

TEST(KShape, MinThreeMembersHaveThreeElements) {
    for (int n = 4; n <= 18; ++n) {
        int hits = 0;
        for (const auto& s : enumerate_K(n - 1)) {
            if (s.size() > 1 && s.min() == 3) {
                EXPECT_EQ(s.size(), 3u);
                EXPECT_EQ(s.max(), n - 1);
                ++hits;
            }
        }
        if (n < 6) EXPECT_EQ(hits, 0) << n;
        else EXPECT_EQ(hits, n - 5) << n;
    }
}

}  // namespace
}  // namespace schreier
