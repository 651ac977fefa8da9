#include <doctest.h>

#include <random>

#include "hurwitz/errors.hpp"
#include "hurwitz/formulas.hpp"
#include "oracles.hpp"

using namespace hurwitz;

namespace {

// Every factor of (1+4x+y)^g (1+2x+y)^n must contribute x or y to reach
// x^2 y^(d-4) with g + n = d - 2, so the coefficient is a sum over where the
// two x's come from: both from the first group, one from each, or both from
// the second.
BigInt two_x_placements(long g, long n) {
    const BigInt G = g, N = n;
    return 16 * (G * (G - 1) / 2) + 8 * G * N + 4 * (N * (N - 1) / 2);
}

}  // namespace

TEST_SUITE("formulas") {

TEST_CASE("Plucker") {
    for (long g = 0; g <= 30; ++g)
        for (long d = 0; d <= 30; ++d) CHECK(plucker(2, d, g) == 3 * (2 * g + d - 2));
    CHECK(plucker(1, 2, 0) == 2);
    CHECK(plucker(1, 5, 3) == 2 * 3 + 2 * 5 - 2);
    CHECK(plucker(2, 5, 3) == 27);
    CHECK_THROWS_AS(plucker(0, 5, 3), InvalidInput);
    CHECK_THROWS_AS(plucker(2, -1, 3), InvalidInput);
}

TEST_CASE("de Jonquieres closed form") {
    CHECK(de_jonquieres_closed(3, 5) == 48);
    CHECK(de_jonquieres_closed(0, 4) == 4);
}

TEST_CASE("de Jonquieres by expansion") {
    CHECK(de_jonquieres_expand(3, 5) == 48);
    CHECK(de_jonquieres_expand(0, 4) == 4);
    CHECK_THROWS_AS(de_jonquieres_expand(3, 4), DomainError);  // d - r - g < 0
    CHECK_THROWS_AS(de_jonquieres_expand(0, 3), DomainError);
    CHECK_THROWS_AS(de_jonquieres_expand(-1, 6), DomainError);
}

TEST_CASE("closed form, expansion and placement count agree on the grid") {
    for (long g = 0; g <= 12; ++g) {
        for (long d = std::max(4L, g + 2); d <= g + 10; ++d) {
            CAPTURE(g);
            CAPTURE(d);
            const BigInt expanded = de_jonquieres_expand(g, d);
            CHECK(expanded == de_jonquieres_closed(g, d));
            CHECK(expanded == two_x_placements(g, d - 2 - g));
        }
    }
}

TEST_CASE("Riemann-Hurwitz genus") {
    for (long g = 0; g <= 6; ++g) {
        const std::vector<Partition> hyperelliptic(static_cast<std::size_t>(2 * g + 2), Partition{2});
        CHECK(riemann_hurwitz_genus(2, hyperelliptic) == g);
    }
    const std::vector<Partition> four(4, Partition{2, 1});
    CHECK(riemann_hurwitz_genus(3, four) == 0);
    for (long g = 0; g <= 5; ++g) {
        for (long d = 2; d <= 7; ++d) {
            std::vector<int> simple(static_cast<std::size_t>(d - 1), 1);
            simple[0] = 2;
            const std::vector<Partition> profiles(static_cast<std::size_t>(2 * g + 2 * d - 2), Partition(simple));
            CHECK(riemann_hurwitz_genus(d, profiles) == g);
        }
    }
    const std::vector<Partition> two(2, Partition{2, 1});
    CHECK_FALSE(riemann_hurwitz_genus(3, two).has_value());
    const std::vector<Partition> three(3, Partition{2, 1});
    CHECK_FALSE(riemann_hurwitz_genus(3, three).has_value());
    const std::vector<Partition> wrong{Partition{2, 2}};
    CHECK_THROWS_AS(riemann_hurwitz_genus(3, wrong), InvalidInput);
}

TEST_CASE("ramification count") {
    for (long k = 1; k <= 20; ++k) CHECK(ramification_count(2 * k - 1, 0, 2 * k) == 8 * k - 4);
    for (long g = 0; g <= 10; ++g)
        for (long d = 1; d <= 10; ++d) CHECK(ramification_count(g, 0, d) == 2 * g + 2 * d - 2);
    CHECK(ramification_count(0, 0, 1) == 0);
    CHECK_THROWS_AS(ramification_count(1, 0, 0), InvalidInput);
}

TEST_CASE("adjunction on the quadric") {
    for (long k = 1; k <= 20; ++k) {
        CHECK(adjunction_genus_quadric(2 * k, 2) == 2 * k - 1);
        CHECK(ramification_count(adjunction_genus_quadric(2 * k, 2), 0, 2 * k) == 8 * k - 4);
    }
    CHECK(adjunction_genus_quadric(1, 1) == 0);
    CHECK(adjunction_genus_quadric(3, 2) == 2);
    CHECK_THROWS_AS(adjunction_genus_quadric(0, 2), InvalidInput);
}

TEST_CASE("branch counts and ramification orders") {
    CHECK(branch_count(Partition{3, 1, 1, 1}) == 1);
    CHECK(ram_order(Partition{3, 1, 1, 1}) == 3);
    CHECK(branch_count(Partition{2, 2, 1, 1}) == 2);
    CHECK(ram_order(Partition{2, 2, 1, 1}) == 2);
    CHECK(branch_count(Partition{1, 1, 1, 1}) == 1);
    CHECK(ram_order(Partition{1, 1, 1, 1}) == 1);
    CHECK(branch_count(Partition{6, 4}) == 2);
    CHECK_THROWS_AS(branch_count(Partition{}), InvalidInput);
    CHECK_THROWS_AS(ram_order(Partition{}), InvalidInput);
}

TEST_CASE("branch counts are integral on random partitions") {
    std::mt19937_64 rng(oracle::kSeed);
    std::uniform_int_distribution<int> length(1, 12), part(1, 30);
    for (int i = 0; i < 1000; ++i) {
        std::vector<int> parts(static_cast<std::size_t>(length(rng)));
        for (int& p : parts) p = part(rng);
        const Partition p(parts);
        const BigRational q = branch_count(p);
        CHECK(is_integral(q));
        CHECK(BigRational(q * ram_order(p)) == BigRational(product_of(p)));
    }
}

TEST_CASE("fibre dimension") {
    for (long g = 0; g <= 10; ++g) {
        CHECK(fibre_dimension(g, g + 1, 0) == 0);
        CHECK(fibre_dimension(g, g + 2, 0) == 1);
        // h^0(2p_1 + p_2 + ... + p_{d-1}) = 1 - g + d for general points with d > g + 1.
        for (long d = g + 2; d <= g + 8; ++d) CHECK(1 - g + d == fibre_dimension(g, d, 0) + 2);
    }
    CHECK_THROWS_AS(fibre_dimension(3, 4, -1), InvalidInput);
}

TEST_CASE("forgetful multiplier") {
    CHECK(forgetful_multiplier(3, 4) == 12);
    CHECK(forgetful_multiplier(0, 2) == 2);
    for (long g = 0; g <= 20; ++g)
        for (long d = 1; d <= 20; ++d) CHECK(forgetful_multiplier(g, d) == plucker(1, d, g));
}

}  // TEST_SUITE
