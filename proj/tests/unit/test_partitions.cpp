#include "foulkes/errors.hpp"
#include "foulkes/partition.hpp"
#include "support/naive.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace foulkes;

TEST_SUITE("partitions")
{
    TEST_CASE("parse canonical forms")
    {
        CHECK(parse_partition("7,3,1,1") == Partition{7, 3, 1, 1});
        CHECK(parse_partition("3^10") == rectangle(3, 10));
        CHECK(parse_partition("1,3") == Partition{3, 1});
        CHECK(parse_partition("2^2,1") == Partition{2, 2, 1});
        CHECK(to_string(parse_partition("1,3,2^2")) == "3,2,2,1");
        CHECK(to_string(Partition{}) == "");
    }

    TEST_CASE("parse rejects bad text")
    {
        for (const char* bad : {"", "0", "3,0", "3^0", "-1", "3,,1", "3 ,1", "a", "3^", "^2", "1,", "2^2^2"})
            CHECK_THROWS_AS(parse_partition(bad), InputError);
    }

    TEST_CASE("constructor canonicalizes and rejects negatives")
    {
        CHECK(Partition{1, 0, 3} == Partition{3, 1});
        CHECK(Partition{1, 0, 3}.weight() == 4);
        CHECK_THROWS_AS(Partition({2, -1}), InputError);
        CHECK(Partition{}.weight() == 0);
    }

    TEST_CASE("conjugate")
    {
        CHECK(conjugate(Partition{3, 1}) == Partition{2, 1, 1});
        CHECK(conjugate(Partition{}) == Partition{});
        CHECK(conjugate(Partition{4, 2, 1}) == Partition{3, 2, 1, 1});
        for (int n = 0; n <= 25; ++n)
            for (const auto& p : enum_partitions(n)) {
                REQUIRE(conjugate(conjugate(p)) == p);
                REQUIRE(p.first() == conjugate(p).length());
            }
    }

    TEST_CASE("dominance")
    {
        CHECK(dominates(Partition{4}, Partition{2, 2}));
        CHECK(dominates(Partition{3, 1}, Partition{2, 2}));
        CHECK_FALSE(dominates(Partition{2, 2, 2}, Partition{3, 2, 1}));
        CHECK_THROWS_AS(dominates(Partition{3}, Partition{2}), InputError);
        for (int n = 1; n <= 12; ++n) {
            const auto all = enum_partitions(n);
            for (const auto& x : all) {
                REQUIRE(dominates(x, x));
                for (const auto& y : all)
                    if (x != y && dominates(x, y))
                        REQUIRE_FALSE(dominates(y, x));
            }
        }
    }

    TEST_CASE("subpartition compares overlapping rows only")
    {
        CHECK(is_subpartition(Partition{2, 1}, Partition{3, 2}));
        CHECK_FALSE(is_subpartition(Partition{4}, Partition{3, 3}));
        CHECK(is_subpartition(Partition{1, 1, 1}, Partition{2, 2}));
        CHECK_FALSE(diagram_contained(Partition{1, 1, 1}, Partition{2, 2}));
        CHECK(diagram_contained(Partition{2, 1}, Partition{3, 2}));
    }

    TEST_CASE("hook leg")
    {
        CHECK(hook_leg(Partition{5, 1, 1}) == 2);
        CHECK(hook_leg(Partition{4}) == 0);
        CHECK_FALSE(hook_leg(Partition{3, 2}).has_value());
        CHECK_THROWS_AS(hook_leg(Partition{}), InputError);
        CHECK(hook(6, 2) == Partition{4, 1, 1});
    }

    TEST_CASE("hook coordinates")
    {
        auto h = to_hook_coords(Partition{7, 3, 1, 1});
        CHECK(h.total == 12);
        CHECK(h.k == 3);
        CHECK(h.inside == Partition{2});
        CHECK(h.tail_weight == 0);

        h = to_hook_coords(Partition{9});
        CHECK(h.k == 0);
        CHECK(h.inside.empty());

        h = to_hook_coords(Partition{23, 4, 1, 1, 1});
        CHECK(h.k == 4);
        CHECK(h.inside == Partition{3});

        CHECK(from_hook_coords(make_hook_coords(12, 3, Partition{2})) == Partition{7, 3, 1, 1});
        CHECK(from_hook_coords(make_hook_coords(6, 0, Partition{})) == Partition{6});
        CHECK(from_hook_coords(make_hook_coords(10, 3, Partition{3})) == Partition{4, 4, 1, 1});
        CHECK_THROWS_AS(make_hook_coords(9, 3, Partition{3}), InputError);
        CHECK_THROWS_AS(make_hook_coords(12, 1, Partition{1, 1}), InputError);
        CHECK_THROWS_AS(to_hook_coords(Partition{}), InputError);
        CHECK(make_hook_coords(20, 5, Partition{3, 2, 1}).tail_weight == 3);
    }

    TEST_CASE("hook coordinates round trip")
    {
        for (int n = 1; n <= 25; ++n)
            for (const auto& p : enum_partitions(n)) {
                const auto h = to_hook_coords(p);
                REQUIRE(h.inside.length() <= h.k);
                REQUIRE(n - h.k - h.inside.weight() >= h.inside.first() + 1);
                REQUIRE(from_hook_coords(h) == p);
                REQUIRE(to_hook_coords(from_hook_coords(h)) == h);
            }
    }

    TEST_CASE("enumeration matches a naive recursion")
    {
        CHECK(enum_partitions(4).size() == 5);
        CHECK(enum_partitions(0) == std::vector<Partition>{Partition{}});
        for (int n = 0; n <= 16; ++n) {
            const auto all = enum_partitions(n);
            std::set<Partition> got(all.begin(), all.end());
            std::set<Partition> want;
            for (const auto& v : naive::partitions(n))
                want.insert(Partition(v));
            REQUIRE(got == want);
            REQUIRE(std::is_sorted(all.begin(), all.end(), std::greater<>()));
            REQUIRE(count_partitions(n) == all.size());
        }
        const auto census_family = enum_partitions(30, 10);
        CHECK(census_family.size() == 3590);
        CHECK(count_partitions(30, 10) == 3590);
        for (const auto& p : enum_partitions(12, 3, 5))
            CHECK((p.length() <= 3 && p.first() <= 5));
    }

    TEST_CASE("P(r) families")
    {
        CHECK(enum_P(2, 2, 2) == std::vector<Partition>{Partition{2}, Partition{1, 1}});
        CHECK(enum_P(0, 3, 3) == std::vector<Partition>{Partition{}});
        CHECK(enum_P(3, 1, 3) == std::vector<Partition>{Partition{1, 1, 1}});
        CHECK(enum_P(5, 2, 2).empty());
        CHECK(count_P(2, 2, 2) == 2);
        CHECK(count_P(5, 2, 2) == 0);
        CHECK(count_P(4, 2, 2) == 1);
        for (int a = 1; a <= 20; ++a)
            for (int b = 1; a * b <= 20; ++b)
                for (int r = 0; r <= a * b; ++r) {
                    const auto fam = enum_P(r, a, b);
                    REQUIRE(count_P(r, a, b) == fam.size());
                    REQUIRE(fam.size() == enum_P(r, b, a).size());
                }
    }

    TEST_CASE("pieri box adding")
    {
        auto sorted = [](std::vector<Partition> v) {
            std::sort(v.begin(), v.end(), std::greater<>());
            return v;
        };
        CHECK(sorted(pieri_add(Partition{2}, 1)) == std::vector<Partition>{Partition{3}, Partition{2, 1}});
        CHECK(pieri_add(Partition{}, 5) == std::vector<Partition>{Partition{5}});
        CHECK(sorted(pieri_add(Partition{2, 1}, 2)) ==
              std::vector<Partition>{Partition{4, 1}, Partition{3, 2}, Partition{3, 1, 1}, Partition{2, 2, 1}});
        CHECK(pieri_add(Partition{3, 1}, 0) == std::vector<Partition>{Partition{3, 1}});
        for (int n = 0; n <= 10; ++n)
            for (const auto& p : enum_partitions(n)) {
                const auto up = pieri_add(p, 1);
                std::set<int> values(p.parts().begin(), p.parts().end());
                REQUIRE(up.size() == values.size() + 1);
                for (const auto& q : up) {
                    REQUIRE(q.weight() == n + 1);
                    REQUIRE(diagram_contained(p, q));
                }
            }
    }

    TEST_CASE("centralizer orders")
    {
        CHECK(z_order(Partition{1, 1, 1, 1}) == 24);
        CHECK(z_order(Partition{7}) == 7);
        CHECK(z_order(Partition{2, 1, 1}) == 4);
        CHECK(class_size(Partition{2, 1, 1}) == 6);
        for (int n = 1; n <= 12; ++n) {
            BigInt total = 0;
            for (const auto& p : enum_partitions(n)) {
                REQUIRE(z_order(p) == naive::z(p.vec()));
                total += class_size(p);
            }
            REQUIRE(total == naive::factorial(n));
        }
    }
}
