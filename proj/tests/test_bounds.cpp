#include <doctest.h>

#include <cmath>
#include <random>

#include "ectarget/bounds.hpp"
#include "ectarget/coloring.hpp"
#include "ectarget/error.hpp"
#include "ectarget/generators.hpp"

using namespace ectarget;

TEST_CASE("theorem4_upper") {
    CHECK(theorem4_upper(1, 1, 2) == 128);
    CHECK(theorem4_upper(1, 1, 3) == 192);
    CHECK(theorem4_upper(2, 1, 2) == 32768);
    CHECK_THROWS_AS(theorem4_upper(1, 0, 2), Error);
}

TEST_CASE("lemma3_lower") {
    auto k3 = lemma3_lower(gen::clique(3), 2);
    CHECK(k3.exponent == Rational(1));
    CHECK(k3.approx == doctest::Approx(2.0));

    auto k4 = lemma3_lower(gen::clique(4), 2);
    CHECK(k4.exponent == Rational(3, 2));
    CHECK(k4.approx == doctest::Approx(2.8284271247461903).epsilon(1e-12));
    CHECK(at_least(3, k4));
    CHECK_FALSE(at_least(2, k4));

    auto empty = lemma3_lower(gen::edgeless(5), 7);
    CHECK(empty.exponent == Rational(0));
    CHECK(empty.approx == 1.0);
}

TEST_CASE("planar bounds") {
    CHECK(planar_bounds(2).lower == 8);
    CHECK(planar_bounds(3).lower == 27);
    // 8*3*5^4 = 15000, so upper = 15000 * C(15000, 3) * 2^3.
    BigInt c = BigInt(15000) * 14999 * 14998 / 6;
    CHECK(planar_bounds(2).upper == BigInt(15000) * c * 8);
    CHECK(planar_bounds(2).upper == theorem4_upper(5, 3, 2));
    for (int k = 2; k <= 8; ++k) CHECK(planar_bounds(k).lower == k * k * k);
}

TEST_CASE("genus density bounds") {
    auto g1 = genus_density_bounds(1);
    CHECK(g1.t == 4);
    CHECK(g1.lower == doctest::Approx(std::sqrt(3.0) - 0.5).epsilon(1e-12));
    CHECK(g1.upper == doctest::Approx(std::sqrt(3.0) + 3.0).epsilon(1e-12));

    auto g3 = genus_density_bounds(3);
    CHECK(g3.t == 6);
    CHECK(g3.lower == 2.5);
    CHECK(g3.upper == 6.0);

    auto g12 = genus_density_bounds(12);
    CHECK(g12.t == 12);
    CHECK(g12.lower == 5.5);
    CHECK(g12.upper == 9.0);

    CHECK_THROWS_AS(genus_density_bounds(0), Error);
}

TEST_CASE("clique genus") {
    CHECK(clique_genus(3) == 0);
    CHECK(clique_genus(4) == 0);
    CHECK(clique_genus(7) == 1);
    CHECK(clique_genus(8) == 2);
    CHECK_THROWS_AS(clique_genus(2), Error);
}

TEST_CASE("lemma7_s1_degree") {
    CHECK(lemma7_s1_degree(8, 2) == 3);
    CHECK(lemma7_s1_degree(9, 2) == 4);
    CHECK(lemma7_s1_degree(1, 2) == 0);
    CHECK(lemma7_s1_degree(1, 7) == 0);
}

TEST_CASE("integer roots and logs match naive loops") {
    for (std::int64_t v = 0; v <= 1'000'000; v += (v < 5000 ? 1 : 997)) {
        std::int64_t t = 0;
        while (t * t < v) ++t;
        REQUIRE(ceil_sqrt(v) == t);
    }
    // Around perfect squares, where floating point rounding bites.
    for (std::int64_t r = 2; r <= 3'000'000; r += 7919) {
        REQUIRE(ceil_sqrt(r * r) == r);
        REQUIRE(ceil_sqrt(r * r + 1) == r + 1);
        REQUIRE(ceil_sqrt(r * r - 1) == r);
    }
    for (int k = 2; k <= 10; ++k) {
        for (std::int64_t p = 1; p <= 1'000'000; p += (p < 3000 ? 1 : 1009)) {
            int e = 0;
            std::int64_t power = 1;
            while (power < p) {
                power *= k;
                ++e;
            }
            REQUIRE(ceil_log(p, k) == e);
        }
        std::int64_t power = 1;
        for (int e = 0; power <= 1'000'000'000'000LL; ++e, power *= k) {
            REQUIRE(ceil_log(power, k) == e);
            REQUIRE(ceil_log(power + 1, k) == e + 1);
        }
    }
}

TEST_CASE("clique density attains the genus lower bound") {
    for (std::int64_t g = 1; g <= 4; ++g) {
        auto b = genus_density_bounds(g);
        auto density = densest_subgraph(gen::clique(static_cast<int>(b.t))).value;
        CHECK(density == Rational(b.t - 1, 2));
        double value = static_cast<double>(density.numerator()) / static_cast<double>(density.denominator());
        CHECK(value >= b.lower - 1e-12);
        CHECK(clique_genus(b.t) <= g);
    }
}

TEST_CASE("lower bound never exceeds the upper bound") {
    std::mt19937_64 rng(91);
    for (int trial = 0; trial < 40; ++trial) {
        auto g = gen::random_graph(2 + static_cast<int>(rng() % 9), 0.5, rng);
        auto acyclic = exact_acyclic_coloring(g, g.num_vertices());
        REQUIRE(acyclic);
        int r = acyclic->palette();
        int d = std::max<int>(1, static_cast<int>(ectarget::ceil(densest_subgraph(g).value)));
        for (int k = 2; k <= 5; ++k) {
            auto lower = lemma3_lower(g, k);
            BigInt upper = theorem4_upper(r, d, k);
            auto p = static_cast<unsigned>(lower.exponent.numerator());
            auto q = static_cast<unsigned>(lower.exponent.denominator());
            CHECK(boost::multiprecision::pow(upper, q) >= boost::multiprecision::pow(BigInt(k), p));
        }
    }
}
