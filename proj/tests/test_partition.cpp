#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lctkit/errors.hpp"
#include "lctkit/ext_rational.hpp"
#include "lctkit/partition.hpp"

#include <map>
#include <set>

using namespace lctkit;

namespace {

// Partition counts by the coin-change recurrence.
long long partition_count(int n)
{
    std::vector<long long> ways(static_cast<std::size_t>(n) + 1, 0);
    ways[0] = 1;
    for (int part = 1; part <= n; ++part)
        for (int t = part; t <= n; ++t)
            ways[static_cast<std::size_t>(t)] += ways[static_cast<std::size_t>(t - part)];
    return ways[static_cast<std::size_t>(n)];
}

std::vector<int> partial_sums(const Partition& p, int len)
{
    std::vector<int> s;
    int acc = 0;
    for (int i = 0; i < len; ++i)
        s.push_back(acc += p.part(static_cast<std::size_t>(i)));
    return s;
}

} // namespace

TEST_CASE("exact rationals")
{
    CHECK(ratio(6, 8) == ExtRational(BigInt(3), BigInt(4)));
    CHECK(ratio(6, -8).str() == "-3/4");
    CHECK(ratio(4, 2).str() == "2");
    CHECK(ExtRational::infinity().str() == "inf");
    CHECK(ExtRational::infinity().pretty() == "∞");
    CHECK(ExtRational::parse("13/41") == ratio(13, 41));
    CHECK(ExtRational::parse("inf").is_infinite());
    CHECK(ratio(1, 3) < ratio(1, 2));
    CHECK(ratio(1000000, 1) < ExtRational::infinity());
    CHECK(ratio(1, 2) + ratio(1, 3) == ratio(5, 6));
    CHECK(ratio(2, 5) / ratio(7, 5) == ratio(2, 7));
    CHECK_THROWS_AS(ExtRational::infinity() - ExtRational::infinity(), InputError);
    CHECK_THROWS_AS(ExtRational::parse("1/0"), InputError);
    CHECK_THROWS_AS(ExtRational::parse("x"), InputError);
    // Arbitrary precision: (2^62)^2 does not fit in 64 bits.
    ExtRational big = ratio(std::int64_t{1} << 62, 1);
    CHECK((big * big).str() == "21267647932558653966460912964485513216");
}

TEST_CASE("parsing and canonical text")
{
    CHECK(Partition::parse("4,4,2").parts() == std::vector<int>{4, 4, 2});
    CHECK(Partition::parse("2^5").parts() == std::vector<int>{2, 2, 2, 2, 2});
    CHECK(Partition::parse("(3^2, 1^4)").str() == "3,3,1,1,1,1");
    CHECK(Partition::parse("1,3,2").str() == "3,2,1");
    CHECK(Partition::parse("4,4,1,1").compact_str() == "4^2,1^2");
    CHECK(Partition::parse("10").compact_str() == "10");
    CHECK(Partition({3, 0, 1}).parts() == std::vector<int>{3, 1});
    CHECK_THROWS_AS(Partition::parse("3,-1"), InputError);
    CHECK_THROWS_AS(Partition::parse("3,,1"), InputError);
    CHECK_THROWS_AS(Partition::parse("a"), InputError);
    CHECK_THROWS_AS(Partition({2, -1}), InputError);
}

TEST_CASE("conjugate")
{
    CHECK(conjugate(Partition{4, 2, 1}) == Partition{3, 2, 1, 1});
    CHECK(conjugate(Partition{5}) == Partition{1, 1, 1, 1, 1});
    CHECK(conjugate(Partition{2, 2}) == Partition{2, 2});
    CHECK(conjugate(Partition{}).empty());
}

TEST_CASE("dominance")
{
    CHECK(dominates(Partition{3, 1}, Partition{2, 2}));
    CHECK_FALSE(dominates(Partition{2, 2}, Partition{3, 1}));
    CHECK(dominates(Partition{2, 2}, Partition{2, 2}));
    CHECK_FALSE(dominates(Partition{3, 3}, Partition{4, 1, 1}));
    CHECK_FALSE(dominates(Partition{4, 1, 1}, Partition{3, 3}));
    CHECK_THROWS_AS(dominates(Partition{3}, Partition{2}), InputError);
    CHECK(closure_leq(Partition{1, 1, 1}, Partition{2, 1}));
}

TEST_CASE("enumeration counts and order")
{
    for (int n = 0; n <= 20; ++n)
        CHECK(static_cast<long long>(enumerate_partitions(n).size()) == partition_count(n));
    CHECK(enumerate_partitions(10).size() == 42);
    const auto p5 = enumerate_partitions(5);
    CHECK(p5.front() == Partition{5});
    CHECK(p5.back() == Partition{1, 1, 1, 1, 1});
    for (std::size_t i = 1; i < p5.size(); ++i)
        CHECK(p5[i] < p5[i - 1]);
    CHECK_THROWS_AS(enumerate_partitions(31), CapExceeded);
    CHECK(enumerate_partitions(31, 40).size() == 6842);
}

TEST_CASE("conjugation is an order-reversing involution")
{
    for (int n = 1; n <= 8; ++n) {
        const auto all = enumerate_partitions(n);
        for (const auto& p : all) {
            CHECK(conjugate(conjugate(p)) == p);
            for (const auto& q : all)
                CHECK(dominates(p, q) == dominates(conjugate(q), conjugate(p)));
        }
    }
}

TEST_CASE("Hasse diagram matches a brute-force transitive reduction")
{
    CHECK(dominance_hasse(2).size() == 1);
    const auto h4 = dominance_hasse(4);
    CHECK(h4.size() == 4);
    for (int n = 1; n <= 9; ++n) {
        const auto all = enumerate_partitions(n);
        // Independent relation straight from partial sums.
        auto geq = [&](const Partition& a, const Partition& b) {
            const auto sa = partial_sums(a, n), sb = partial_sums(b, n);
            for (int i = 0; i < n; ++i)
                if (sa[static_cast<std::size_t>(i)] < sb[static_cast<std::size_t>(i)])
                    return false;
            return true;
        };
        std::set<std::pair<std::string, std::string>> expected;
        for (const auto& a : all)
            for (const auto& b : all) {
                if (a == b || !geq(a, b))
                    continue;
                bool cover = true;
                for (const auto& c : all)
                    if (c != a && c != b && geq(a, c) && geq(c, b))
                        cover = false;
                if (cover)
                    expected.insert({a.str(), b.str()});
            }
        std::set<std::pair<std::string, std::string>> got;
        for (const auto& [a, b] : dominance_hasse(n))
            got.insert({a.str(), b.str()});
        CHECK(got == expected);
    }
    CHECK(dominance_hasse(10).size() == 62);
    CHECK_THROWS_AS(dominance_hasse(16), CapExceeded);
}

TEST_CASE("column filling statistics")
{
    const Partition nu{3, 2, 1}; // columns 3,2,1
    const FillStats f = fill_stats(nu, 5);
    CHECK(f.phi == std::vector<int>{1, 1, 1, 2, 2});
    CHECK(f.psi == 2);
    CHECK(f.eta_min == Partition{2, 2, 1});
    CHECK(fill_stats(nu, 0).psi == 0);
    CHECK_THROWS_AS(fill_stats(nu, 7), InputError);

    for (int n = 1; n <= 9; ++n)
        for (const auto& p : enumerate_partitions(n)) {
            const Partition lambda = conjugate(p);
            long long ns = 0, weighted = 0;
            for (int k = 0; k <= n; ++k) {
                const FillStats st = fill_stats(p, k);
                long long rows = 0;
                for (int r : st.eta_min.parts())
                    rows += binom2(r);
                CHECK(st.psi == rows);
                CHECK(st.eta_min.size() == k);
                // eta_min is dominated by nu: the boxes sit inside nu's diagram.
                for (std::size_t i = 0; i < st.eta_min.parts().size(); ++i)
                    CHECK(st.eta_min[i] <= p.part(i));
            }
            // At column endpoints psi is sum (j-1) lambda_j.
            for (int s = 1; s <= lambda.length(); ++s) {
                ns += lambda[static_cast<std::size_t>(s - 1)];
                weighted += static_cast<long long>(s - 1) * lambda[static_cast<std::size_t>(s - 1)];
                CHECK(fill_stats(p, static_cast<int>(ns)).psi == weighted);
            }
            CHECK(fill_stats(p, n).eta_min == p);
        }
}

TEST_CASE("binomials")
{
    CHECK(binom2(0) == 0);
    CHECK(binom2(1) == 0);
    CHECK(binom2(10) == 45);
}
