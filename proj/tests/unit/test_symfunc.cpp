#include "foulkes/characters.hpp"
#include "foulkes/errors.hpp"
#include "foulkes/symfunc.hpp"
#include "support/naive.hpp"

#include <doctest.h>

#include <random>
#include <thread>

using namespace foulkes;

namespace {

std::vector<long long> values_on_s4(const PSeries& f)
{
    const auto c = to_class_function(f);
    std::vector<long long> out;
    for (const Partition& mu : {Partition{1, 1, 1, 1}, Partition{2, 1, 1}, Partition{2, 2}, Partition{3, 1}, Partition{4}})
        out.push_back(to_int64(c.value(mu)));
    return out;
}

// Random integer combination of p_mu over partitions of n.
PSeries random_series(int n, std::mt19937& rng)
{
    const auto all = enum_partitions(n);
    std::uniform_int_distribution<int> coef(-3, 3);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    PSeries f(n);
    for (int i = 0; i < 4; ++i)
        f.add(all[pick(rng)], ratio(coef(rng), 1 + (i % 3)));
    return f;
}

}  // namespace

TEST_SUITE("symfunc")
{
    TEST_CASE("h and e generators")
    {
        const PSeries h0 = h_series(0);
        CHECK(h0.coeff(Partition{}) == 1);
        CHECK(h0.size() == 1);
        const PSeries h2 = h_series(2);
        CHECK(h2.coeff(Partition{1, 1}) == Rational(1, 2));
        CHECK(h2.coeff(Partition{2}) == Rational(1, 2));
        const auto trivial = to_class_function(h_series(4));
        for (const auto& [mu, v] : trivial.values())
            CHECK(v == 1);
        CHECK(to_class_function(h_series(4)).values().size() == 5);

        CHECK(e_series(1).coeff(Partition{1}) == 1);
        CHECK(e_series(2).coeff(Partition{1, 1}) == Rational(1, 2));
        CHECK(e_series(2).coeff(Partition{2}) == Rational(-1, 2));
        const auto sign3 = to_class_function(e_series(3));
        CHECK(sign3.value(Partition{3}) == 1);
        CHECK(sign3.value(Partition{2, 1}) == -1);
    }

    TEST_CASE("multiply")
    {
        const PSeries f = schur_series(Partition{2, 1});
        CHECK(multiply(f, h_series(0)) == f);
        const PSeries p11 = multiply(h_series(1), h_series(1));
        CHECK(p11.coeff(Partition{1, 1}) == 1);
        CHECK(p11.size() == 1);
        CHECK(multiply(e_series(1), h_series(1)) == multiply(h_series(1), e_series(1)));

        std::mt19937 rng(7);
        for (int trial = 0; trial < 40; ++trial) {
            const int d1 = 1 + trial % 4, d2 = 1 + (trial / 4) % 4, d3 = 1 + trial % 3;
            const auto x = random_series(d1, rng), y = random_series(d2, rng), z = random_series(d3, rng);
            REQUIRE(multiply(x, y) == multiply(y, x));
            REQUIRE(multiply(multiply(x, y), z) == multiply(x, multiply(y, z)));
            REQUIRE(multiply(x, y).degree() == d1 + d2);
        }
    }

    TEST_CASE("add drops zeros and checks weight")
    {
        PSeries f(3);
        f.add(Partition{2, 1}, Rational(1, 3));
        f.add(Partition{2, 1}, Rational(-1, 3));
        CHECK(f.is_zero());
        CHECK_THROWS_AS(f.add(Partition{2}, 1), InputError);
        CHECK((h_series(3) - h_series(3)).is_zero());
    }

    TEST_CASE("power plethysm")
    {
        const PSeries f = schur_series(Partition{2, 1});
        CHECK(plethysm_power(1, f) == f);
        CHECK(plethysm_power(2, h_series(1)) == p_series(Partition{2}));
        const PSeries g = plethysm_power(2, h_series(2));
        CHECK(g.coeff(Partition{2, 2}) == Rational(1, 2));
        CHECK(g.coeff(Partition{4}) == Rational(1, 2));
        CHECK(g.size() == 2);
    }

    TEST_CASE("h plethysm")
    {
        const PSeries f = schur_series(Partition{2, 1});
        CHECK(plethysm_h(1, f) == f);
        CHECK(plethysm_h(0, f) == h_series(0));
        for (int b = 0; b <= 10; ++b)
            REQUIRE(plethysm_h(b, h_series(1)) == h_series(b));
        CHECK(values_on_s4(plethysm_h(2, h_series(2))) == std::vector<long long>{3, 1, 3, 0, 1});

        for (int a = 1; a <= 12; ++a)
            for (int b = 1; a * b <= 12; ++b) {
                const PSeries phi = plethysm_h(b, h_series(a));
                const Partition id = rectangle(1, a * b);
                const BigInt expect =
                    naive::factorial(a * b) / (naive::power(naive::factorial(a), b) * naive::factorial(b));
                REQUIRE(Rational(z_order(id)) * phi.coeff(id) == Rational(expect));
            }
    }

    TEST_CASE("h plethysm is stable under concurrent use")
    {
        clear_plethysm_cache();
        std::vector<PSeries> out(8);
        std::vector<std::thread> workers;
        for (std::size_t i = 0; i < out.size(); ++i)
            workers.emplace_back([&out, i] { out[i] = plethysm_h(4 + static_cast<int>(i % 3), h_series(2)); });
        for (auto& w : workers)
            w.join();
        for (std::size_t i = 0; i < out.size(); ++i) {
            clear_plethysm_cache();
            REQUIRE(out[i] == plethysm_h(4 + static_cast<int>(i % 3), h_series(2)));
        }
    }

    TEST_CASE("schur series")
    {
        CHECK(schur_series(Partition{5}) == h_series(5));
        CHECK(schur_series(rectangle(1, 5)) == e_series(5));
        CHECK(values_on_s4(schur_series(Partition{2, 2})) == std::vector<long long>{2, 0, 2, -1, 0});
        for (int n = 1; n <= 7; ++n)
            for (const auto& lambda : enum_partitions(n))
                for (const auto& mu : enum_partitions(n))
                    REQUIRE(Rational(schur_series(lambda).coeff(mu) * Rational(naive::z(mu.vec()))) ==
                            Rational(static_cast<long>(naive::character(lambda.vec(), mu.vec()))));
    }

    TEST_CASE("inner products")
    {
        for (int n = 1; n <= 8; ++n) {
            const auto all = enum_partitions(n);
            for (const auto& x : all)
                for (const auto& y : all)
                    REQUIRE(inner(schur_series(x), schur_series(y)) == (x == y ? 1 : 0));
        }
        const PSeries phi = plethysm_h(2, h_series(2));
        CHECK(inner(phi, schur_series(Partition{2, 2})) == 1);
        CHECK(inner(phi, schur_series(Partition{3, 1})) == 0);
        CHECK(inner_with_schur(phi, Partition{2, 2}) == 1);
        CHECK(inner_with_schur(phi, Partition{4}) == 1);
        CHECK_THROWS_AS(inner(h_series(3), h_series(2)), InputError);
    }

    TEST_CASE("exterior lemma identity")
    {
        for (int n = 2; n <= 10; ++n)
            for (int k = 1; k < n; ++k)
                REQUIRE(multiply(e_series(k), h_series(n - k)) ==
                        schur_series(hook(n, k)) + schur_series(hook(n, k - 1)));
    }

    TEST_CASE("pieri identity")
    {
        for (int n = 0; n <= 6; ++n)
            for (const auto& lambda : enum_partitions(n))
                for (int k = 0; n + k <= 9; ++k) {
                    PSeries sum(n + k);
                    for (const auto& nu : pieri_add(lambda, k))
                        sum += schur_series(nu);
                    REQUIRE(multiply(schur_series(lambda), h_series(k)) == sum);
                }
    }

    TEST_CASE("class function conversion")
    {
        const PSeries s21 = schur_series(Partition{2, 1});
        CHECK(from_class_function(to_class_function(s21)) == s21);
        PSeries half(2);
        half.add(Partition{2}, Rational(1, 4));
        CHECK_THROWS_AS(to_class_function(half), InputError);
    }

    TEST_CASE("keys identify series")
    {
        CHECK(h_series(4).key() == h_series(4).key());
        CHECK(h_series(4).key() != e_series(4).key());
    }
}
