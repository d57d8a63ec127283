#include "dcrt/collections.hpp"

#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"

using namespace dcrt;

namespace {

ResidueCollection random_collection(std::mt19937_64& rng, integer m) {
    if (oracle::uniform(rng, 0, 1) == 0) {
        return ResidueSet(m, oracle::random_subset(rng, m, oracle::uniform(rng, 0, m)));
    }
    return CyclicInterval(m, oracle::uniform(rng, 0, m - 1), oracle::uniform(rng, 0, m));
}

std::vector<integer> members_of(const ResidueCollection& c) {
    if (const auto* s = std::get_if<ResidueSet>(&c)) return s->members();
    return interval_members(std::get<CyclicInterval>(c)).members();
}

}  // namespace

TEST(ResidueSet, Validation) {
    EXPECT_THROW(ResidueSet(5, {1, 5}), invalid_input);
    EXPECT_THROW(ResidueSet(5, {-1}), invalid_input);
    EXPECT_THROW(ResidueSet(5, {2, 2}), invalid_input);
    EXPECT_THROW(ResidueSet(0, {}), invalid_input);
    EXPECT_EQ(ResidueSet(6, {4, 0, 2}).members(), (std::vector<integer>{0, 2, 4}));
    EXPECT_EQ(ResidueSet::normalized(5, {7, -1}).members(), (std::vector<integer>{2, 4}));
    EXPECT_THROW(ResidueSet::normalized(5, {2, 7}), invalid_input);
}

TEST(CyclicInterval, Validation) {
    EXPECT_THROW(CyclicInterval(5, 0, 6), invalid_input);
    EXPECT_THROW(CyclicInterval(5, 0, -1), invalid_input);
    EXPECT_EQ(CyclicInterval(5, 8, 2).start(), 3);
    const CyclicInterval full(4, 3, 4);
    for (integer r = 0; r < 4; ++r) EXPECT_TRUE(full.contains(r));
    const CyclicInterval empty(4, 1, 0);
    for (integer r = 0; r < 4; ++r) EXPECT_FALSE(empty.contains(r));
}

TEST(CyclicInterval, FirstMemberAtOrAfter) {
    const CyclicInterval iv(10, 8, 4);  // {8, 9, 0, 1}
    EXPECT_EQ(iv.first_member_at_or_after(0), 0);
    EXPECT_EQ(iv.first_member_at_or_after(2), 8);
    EXPECT_EQ(iv.first_member_at_or_after(9), 9);
    EXPECT_EQ(iv.first_member_at_or_after(12), 18);
    EXPECT_THROW((void)CyclicInterval(10, 0, 0).first_member_at_or_after(0), infeasible_error);
}

TEST(IntervalMembers, Examples) {
    EXPECT_EQ(interval_members(CyclicInterval(5, 3, 4)).members(), (std::vector<integer>{0, 1, 3, 4}));
    EXPECT_TRUE(interval_members(CyclicInterval(5, 3, 0)).members().empty());
    const integer M = 2;
    EXPECT_EQ(interval_members(CyclicInterval(6 * M, M, 2 * M)).members(), (std::vector<integer>{2, 3, 4, 5}));
}

TEST(IntervalMembers, PreservesSize) {
    for (integer m = 1; m <= 25; ++m) {
        for (integer start = 0; start < m; ++start) {
            for (integer len = 0; len <= m; ++len) {
                const CyclicInterval iv(m, start, len);
                const ResidueSet s = interval_members(iv);
                ASSERT_EQ(s.size(), len);
                for (integer r = 0; r < m; ++r) EXPECT_EQ(s.contains(r), iv.contains(r));
            }
        }
    }
}

TEST(PartitionCounts, Examples) {
    EXPECT_EQ(partition_counts(ResidueSet(6, {0, 2, 4}), 2).counts, (std::vector<integer>{3, 0}));
    EXPECT_EQ(partition_counts(ResidueSet(12, {1, 5, 7, 11}), 4).counts, (std::vector<integer>{0, 2, 0, 2}));

    // interval n..2n modulo 3n, partitioned by 3n itself
    const integer n = 7;
    const auto counts = partition_counts(CyclicInterval(3 * n, n, n + 1), 3 * n).counts;
    for (integer i = 0; i < 3 * n; ++i) {
        EXPECT_EQ(counts[static_cast<std::size_t>(i)], (i >= n && i <= 2 * n) ? 1 : 0) << i;
    }
}

TEST(PartitionCounts, DivisorMustDivideModulus) {
    EXPECT_THROW((void)partition_counts(ResidueSet(6, {1}), 4), invalid_input);
    EXPECT_THROW((void)partition_counts(CyclicInterval(6, 0, 2), 0), invalid_input);
}

TEST(PartitionCounts, SumsToSizeAndRespectsBound) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 2000; ++trial) {
        const integer m = oracle::uniform(rng, 1, 60);
        const ResidueCollection c = random_collection(rng, m);
        std::vector<integer> divisors;
        for (integer d = 1; d <= m; ++d)
            if (m % d == 0) divisors.push_back(d);
        const integer g = divisors[static_cast<std::size_t>(oracle::uniform(rng, 0, static_cast<integer>(divisors.size()) - 1))];
        const ResiduePartitionCount p = partition_counts(c, g);
        ASSERT_EQ(p.counts.size(), static_cast<std::size_t>(g));
        EXPECT_EQ(p.total(), size_of(c));
        std::vector<integer> direct(static_cast<std::size_t>(g), 0);
        for (integer r : members_of(c)) ++direct[static_cast<std::size_t>(r % g)];
        EXPECT_EQ(p.counts, direct);
        for (integer v : p.counts) EXPECT_LE(v, m / g);
    }
}

TEST(ExactCount, Examples) {
    for (integer m = 1; m <= 12; ++m) {
        for (integer n = 1; n <= 12; ++n) {
            EXPECT_EQ(exact_count(CyclicInterval(m, 0, m), CyclicInterval(n, 0, n)), std::lcm(m, n));
        }
    }
    EXPECT_EQ(exact_count(ResidueSet(3, {0}), ResidueSet(6, {1, 2})), 0);
    EXPECT_EQ(exact_count(ResidueSet(3, {2}), ResidueSet(5, {3})), 1);
    EXPECT_EQ(exact_count(ResidueSet(4, {}), CyclicInterval(6, 0, 6)), 0);
}

TEST(ExactCount, CoprimeModuliGiveProductOfSizes) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 500; ++trial) {
        const integer m = oracle::uniform(rng, 1, 50);
        const integer n = oracle::uniform(rng, 1, 50);
        if (std::gcd(m, n) != 1) continue;
        const ResidueCollection a = random_collection(rng, m);
        const ResidueCollection b = random_collection(rng, n);
        EXPECT_EQ(exact_count(a, b), size_of(a) * size_of(b));
    }
}

TEST(ExactCount, MatchesEnumerationAndPairCountAndIsSymmetric) {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 1500; ++trial) {
        const integer m = oracle::uniform(rng, 1, 80);
        const integer n = oracle::uniform(rng, 1, 80);
        const ResidueCollection a = random_collection(rng, m);
        const ResidueCollection b = random_collection(rng, n);
        const integer h = exact_count(a, b);
        EXPECT_EQ(h, exact_count(b, a));
        EXPECT_EQ(h, oracle::count_pairs(members_of(a), m, members_of(b), n));
        const auto sols = enumerate_solutions(a, b);
        ASSERT_EQ(static_cast<integer>(sols.size()), h);
        for (const auto& s : sols) {
            EXPECT_EQ(s.modulus, std::lcm(m, n));
            EXPECT_TRUE(contains(a, s.residue % m));
            EXPECT_TRUE(contains(b, s.residue % n));
        }
        EXPECT_TRUE(std::is_sorted(sols.begin(), sols.end()));
    }
}

TEST(ExactCount, OverflowOfModulusIsReported) {
    const integer p = 4294967291;
    const integer q = 4294967279;
    EXPECT_THROW((void)exact_count(ResidueSet(p, {1}), ResidueSet(q, {1})), overflow_error);
}

TEST(EnumerateSolutions, Examples) {
    EXPECT_EQ(enumerate_solutions(ResidueSet(3, {2}), ResidueSet(5, {3})), (std::vector<SolutionClass>{{8, 15}}));
    EXPECT_TRUE(enumerate_solutions(ResidueSet(3, {}), ResidueSet(5, {3})).empty());
    EXPECT_TRUE(enumerate_solutions(CyclicInterval(3, 0, 1), CyclicInterval(6, 1, 2)).empty());
}

TEST(EnumerateSolutions, RefusesAboveCap) {
    try {
        (void)enumerate_solutions(CyclicInterval(1000, 0, 1), CyclicInterval(999, 0, 1), 100000);
        FAIL() << "expected refusal";
    } catch (const enumeration_cap_exceeded& e) {
        EXPECT_EQ(e.cap(), 100000);
        EXPECT_EQ(e.requested(), 999000);
        EXPECT_NE(std::string(e.what()).find("100000"), std::string::npos);
    }
}
