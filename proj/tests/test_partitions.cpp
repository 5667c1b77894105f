#include "oracles.hpp"

#include <doctest.h>

#include <set>

using namespace extverts;

TEST_CASE("arm and leg examples")
{
    CHECK(arm(partition{3, 1}, {1, 1}) == 2);
    CHECK(leg(partition{3, 1}, {1, 1}) == 1);
    CHECK(leg(partition{}, {1, 1}) == -1);
    CHECK(arm(partition{2}, {1, 2}) == 0);
    CHECK(leg(partition{2}, {1, 2}) == 0);
    // boxes outside the diagram give negative values
    CHECK(arm(partition{1}, {1, 3}) == -2);
    CHECK(leg(partition{1}, {3, 1}) == -2);
}

TEST_CASE("basic operations")
{
    CHECK(partition{3, 1}.transpose() == partition{2, 1, 1});
    CHECK(enumerate(4).size() == 5);
    CHECK(z_factor(partition{2, 1, 1}) == 4);
    CHECK(z_factor(partition{}) == 1);
    CHECK(z_factor(partition{3, 3, 1}) == 18);
    CHECK(partition{3, 1}.part(1) == 3);
    CHECK(partition{3, 1}.part(5) == 0);
    CHECK(partition::from_multiset({1, 3, 1}) == partition{3, 1, 1});
    CHECK(partition{3, 1}.join(partition{2}) == partition{3, 2, 1});
    CHECK(partition{3, 2, 1}.remove(partition{2}) == partition{3, 1});
    CHECK(!partition{3, 1}.remove(partition{2}).has_value());
    CHECK_THROWS_AS(partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(partition({2, 0}), std::invalid_argument);
}

TEST_CASE("parsing and printing")
{
    CHECK(parse_partition("2,1") == partition{2, 1});
    CHECK(parse_partition("") == partition{});
    CHECK(parse_partition("0") == partition{});
    CHECK(parse_partition("∅") == partition{});
    CHECK(partition{3, 1, 1}.to_string() == "3,1,1");
    CHECK(partition{}.to_string().empty());
    CHECK_THROWS(parse_partition("1,2"));
    CHECK_THROWS(parse_partition("a"));
    CHECK_THROWS(parse_partition("2,,1"));
    for (const auto& p : enumerate_up_to(7))
        CHECK(parse_partition(p.to_string()) == p);
}

TEST_CASE("transpose is an involution, n <= 10")
{
    for (int n = 0; n <= 10; ++n)
        for (const auto& p : enumerate(n)) {
            CHECK(p.transpose().transpose() == p);
            CHECK(p.transpose().size() == n);
        }
}

TEST_CASE("arm(lambda, (i,j)) = leg(lambda', (j,i)), n <= 8")
{
    for (int n = 0; n <= 8; ++n)
        for (const auto& p : enumerate(n)) {
            partition t = p.transpose();
            // include boxes just outside the diagram: both functions are total
            for (int i = 1; i <= p.length() + 1; ++i)
                for (int j = 1; j <= p.part(1) + 1; ++j)
                    CHECK(arm(p, {i, j}) == leg(t, {j, i}));
        }
}

TEST_CASE("enumerate matches the partition counts, n <= 12")
{
    auto counts = oracle::partition_counts(12);
    CHECK(counts[12] == 77);
    for (int n = 0; n <= 12; ++n) {
        auto ps = enumerate(n);
        CHECK(ps.size() == static_cast<std::size_t>(counts[n]));
        std::set<partition> distinct(ps.begin(), ps.end());
        CHECK(distinct.size() == ps.size());
        for (const auto& p : ps)
            CHECK(p.size() == n);
        // reverse lexicographic
        for (std::size_t i = 1; i < ps.size(); ++i)
            CHECK(ps[i] < ps[i - 1]);
    }
    CHECK(enumerate_up_to(4).size() == 12);
}

TEST_CASE("class sums: sum 1/z_lambda = 1 and sum (n!/H_lambda)^2 = n!")
{
    integer fact = 1;
    for (int n = 1; n <= 9; ++n) {
        fact *= n;
        rational inv_z = 0;
        integer dims = 0;
        for (const auto& p : enumerate(n)) {
            inv_z += rational(integer(1), z_factor(p));
            integer hooks = 1;
            for (box b : p.boxes())
                hooks *= arm(p, b) + leg(p, b) + 1;
            CHECK(hooks == oracle::hook_product(p));
            integer dim = fact / hooks;
            dims += dim * dim;
        }
        CHECK(inv_z == 1);
        CHECK(dims == fact);
    }
}

TEST_CASE("dominance order")
{
    CHECK(dominance_leq(partition{2, 2, 2}, partition{3, 3}));
    CHECK(!dominance_leq(partition{3, 1, 1, 1}, partition{2, 2, 2}));
    CHECK(!dominance_leq(partition{2, 2, 2}, partition{3, 1, 1, 1}));
    for (int n = 0; n <= 7; ++n)
        for (const auto& a : enumerate(n))
            for (const auto& b : enumerate(n)) {
                // transposition reverses dominance
                CHECK(dominance_leq(a, b) == dominance_leq(b.transpose(), a.transpose()));
                // dominance refines reverse lex
                if (dominance_leq(a, b))
                    CHECK(a <= b);
            }
}

TEST_CASE("boxes, containment and multiplicities")
{
    for (const auto& p : enumerate_up_to(7)) {
        auto bs = p.boxes();
        CHECK(static_cast<int>(bs.size()) == p.size());
        for (box b : bs) {
            CHECK(p.contains(b));
            CHECK(arm(p, b) >= 0);
            CHECK(leg(p, b) >= 0);
        }
        CHECK(!p.contains({p.length() + 1, 1}));
        int total = 0;
        for (const auto& [part, mult] : p.multiplicities())
            total += part * mult;
        CHECK(total == p.size());
    }
}
