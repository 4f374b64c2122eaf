#include "foulkes/errors.hpp"
#include "foulkes/foulkes.hpp"
#include "foulkes/oracle.hpp"
#include "support/naive.hpp"

#include <doctest.h>

using namespace foulkes;
using oracle::SetPartition;

namespace {

SetPartition sp(int n, std::vector<std::vector<int>> blocks)
{
    std::vector<std::uint32_t> masks;
    for (const auto& blk : blocks) {
        std::uint32_t m = 0;
        for (int x : blk)
            m |= 1u << (x - 1);
        masks.push_back(m);
    }
    return SetPartition(n, masks);
}

// n! / (prod eta_i! * prod m_s!)
BigInt multinomial_count(const Partition& eta)
{
    BigInt den = 1;
    for (int p : eta.parts())
        den *= naive::factorial(p);
    for (int v = 1; v <= eta.first(); ++v)
        den *= naive::factorial(eta.multiplicity_of(v));
    return naive::factorial(eta.weight()) / den;
}

}  // namespace

TEST_SUITE("oracle")
{
    TEST_CASE("set partitions")
    {
        CHECK_THROWS_AS(sp(3, {{1, 2}}), InputError);
        CHECK_THROWS_AS(sp(3, {{1, 2}, {2, 3}}), InputError);
        CHECK_THROWS_AS(sp(2, {{1, 2}, {}}), InputError);
        CHECK(sp(4, {{3, 4}, {1, 2}}) == sp(4, {{1, 2}, {3, 4}}));
        CHECK(oracle::to_string(sp(4, {{2, 4}, {1, 3}})) == "13|24");
        CHECK(oracle::to_string(sp(10, {{1, 10}, {2, 3, 4, 5, 6, 7, 8, 9}})) == "1,10|2,3,4,5,6,7,8,9");
    }

    TEST_CASE("enumeration")
    {
        CHECK(oracle::enum_omega(Partition{2, 2}).size() == 3);
        CHECK(oracle::enum_omega(Partition{6}).size() == 1);
        const auto three = oracle::enum_omega(Partition{2, 1});
        REQUIRE(three.size() == 3);
        CHECK(oracle::to_string(three[0]) == "1|23");
        CHECK(oracle::to_string(three[1]) == "12|3");
        CHECK(oracle::to_string(three[2]) == "13|2");
        CHECK_THROWS_AS(oracle::enum_omega(rectangle(2, 7)), BudgetExceeded);
        CHECK(oracle::enum_omega(rectangle(2, 7), 14).size() == 135135);
        for (int n = 1; n <= 10; ++n)
            for (const auto& eta : enum_partitions(n))
                REQUIRE(oracle::enum_omega(eta).size() == multinomial_count(eta));
    }

    TEST_CASE("fixed points")
    {
        const auto omega = oracle::enum_omega(Partition{2, 2});
        CHECK(oracle::fixed_count(omega, Partition{1, 1, 1, 1}) == 3);
        CHECK(oracle::fixed_count(omega, Partition{2, 2}) == 3);
        CHECK(oracle::fixed_count(omega, Partition{3, 1}) == 0);
        CHECK_THROWS_AS(oracle::fixed_count(omega, Partition{3}), InputError);
        CHECK(oracle::canonical_permutation(Partition{3, 1}) == std::vector<int>{2, 3, 1, 4});
    }

    TEST_CASE("brute characters")
    {
        const auto c = oracle::brute_foulkes_char(2, 2);
        CHECK(c.value(Partition{1, 1, 1, 1}) == 3);
        CHECK(c.value(Partition{2, 1, 1}) == 1);
        CHECK(c.value(Partition{2, 2}) == 3);
        CHECK(c.value(Partition{3, 1}) == 0);
        CHECK(c.value(Partition{4}) == 1);
        const auto trivial = oracle::brute_foulkes_char(1, 5);
        for (const auto& [mu, v] : trivial.values())
            CHECK(v == 1);
        CHECK(oracle::brute_foulkes_char(3, 2).value(rectangle(1, 6)) == 10);
    }

    TEST_CASE("linked partitions")
    {
        CHECK(oracle::linked_partition(sp(4, {{1, 2}, {3, 4}}), 2) == Partition{2});
        CHECK(oracle::linked_partition(sp(4, {{1, 3}, {2, 4}}), 2) == Partition{1, 1});
        CHECK(oracle::linked_partition(sp(6, {{1, 2, 3}, {4, 5, 6}}), 4) == Partition{3, 1});
        CHECK_THROWS_AS(oracle::linked_partition(sp(4, {{1, 2}, {3, 4}}), 0), InputError);
        CHECK_THROWS_AS(oracle::linked_partition(sp(4, {{1, 2}, {3, 4}}), 4), InputError);
    }

    TEST_CASE("restriction orbits")
    {
        CHECK(oracle::brute_restriction_orbits(2, 2, 2) == PartitionMap<BigInt>{{Partition{2}, 1}, {Partition{1, 1}, 2}});
        CHECK(oracle::brute_restriction_orbits(2, 2, 1) == PartitionMap<BigInt>{{Partition{1}, 3}});
        CHECK(oracle::brute_restriction_orbits(2, 2, 0) == PartitionMap<BigInt>{{Partition{}, 3}});
        for (int a = 1; a <= 10; ++a)
            for (int b = 1; a * b <= 10; ++b)
                for (int r = 0; r < a * b; ++r) {
                    const auto groups = oracle::brute_restriction_orbits(a, b, r);
                    BigInt total = 0;
                    std::vector<Partition> keys;
                    for (const auto& [l, n] : groups) {
                        total += n;
                        keys.push_back(l);
                    }
                    REQUIRE(total == omega_size(FoulkesShape(a, b)));
                    REQUIRE(keys == enum_P(r, a, b));
                }
    }

    TEST_CASE("trivial quotient")
    {
        CHECK(oracle::verify_trivial_quotient(2, 2, 2, Partition{1, 1}));
        CHECK(oracle::verify_trivial_quotient(2, 2, 2, Partition{2}));
        CHECK(oracle::verify_trivial_quotient(2, 3, 1, Partition{1}));
        for (int a = 1; a <= 10; ++a)
            for (int b = 1; a * b <= 10; ++b)
                for (int beta = 1; beta <= std::min(3, a * b - 1); ++beta)
                    for (const auto& l : enum_P(beta, a, b))
                        REQUIRE(oracle::verify_trivial_quotient(a, b, beta, l));
    }
}
