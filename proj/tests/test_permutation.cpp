#include <doctest.h>

#include <random>
#include <set>

#include "hurwitz/errors.hpp"
#include "hurwitz/permutation.hpp"
#include "oracles.hpp"

using namespace hurwitz;

namespace {

Permutation P(const char* text, int degree) { return Permutation::parse(text, degree); }

// Size of the group generated by `gens`, by closing under right multiplication.
std::size_t group_order(const std::vector<Permutation>& gens) {
    const int d = gens.front().degree();
    std::set<Permutation> seen{Permutation::identity(d)};
    std::vector<Permutation> frontier{Permutation::identity(d)};
    while (!frontier.empty()) {
        Permutation x = frontier.back();
        frontier.pop_back();
        for (const auto& g : gens) {
            Permutation y = compose(x, g);
            if (seen.insert(y).second) frontier.push_back(y);
        }
    }
    return seen.size();
}

bool transitive_by_group(const std::vector<Permutation>& gens) {
    const int d = gens.front().degree();
    std::set<Permutation> group{Permutation::identity(d)};
    std::vector<Permutation> frontier{Permutation::identity(d)};
    while (!frontier.empty()) {
        Permutation x = frontier.back();
        frontier.pop_back();
        for (const auto& g : gens) {
            Permutation y = compose(x, g);
            if (group.insert(y).second) frontier.push_back(y);
        }
    }
    std::set<int> orbit;
    for (const auto& p : group) orbit.insert(p(1));
    return static_cast<int>(orbit.size()) == d;
}

}  // namespace

TEST_SUITE("permutation") {

TEST_CASE("compose applies the right argument first") {
    const auto id = Permutation::identity(3);
    const auto p = P("(1 3 2)", 3);
    CHECK(compose(id, p) == p);
    CHECK(compose(P("(1 2)", 3), P("(1 2)", 3)).is_identity());
    const auto c = compose(P("(1 2)", 3), P("(2 3)", 3));
    CHECK(c == P("(1 2 3)", 3));
    CHECK(cycle_type(c) == Partition{3});
    CHECK_THROWS_AS(compose(P("(1 2)", 2), P("(1 2)", 3)), InvalidInput);
}

TEST_CASE("conjugation relabels points") {
    const auto p = P("(1 2)", 3);
    CHECK(conjugate(p, Permutation::identity(3)) == p);
    CHECK(conjugate(p, P("(1 2)", 3)) == p);
    CHECK(conjugate(p, P("(2 3)", 3)) == P("(1 3)", 3));
    CHECK_THROWS_AS(conjugate(p, Permutation::identity(4)), InvalidInput);
}

TEST_CASE("cycle types") {
    CHECK(cycle_type(Permutation::identity(4)) == Partition{1, 1, 1, 1});
    CHECK(cycle_type(P("(1 2)", 3)) == Partition{2, 1});
    CHECK(cycle_type(P("(1 2 3)(4 5)", 5)) == Partition{3, 2});
}

TEST_CASE("transitivity") {
    const std::vector<Permutation> a{P("(1 2)", 2)};
    const std::vector<Permutation> b{P("(1 2)", 3)};
    const std::vector<Permutation> c{P("(1 2)", 3), P("(2 3)", 3)};
    CHECK(is_transitive(a));
    CHECK_FALSE(is_transitive(b));
    CHECK(is_transitive(c));
    CHECK_THROWS_AS(is_transitive(std::vector<Permutation>{}), InvalidInput);
    const std::vector<Permutation> mixed{P("(1 2)", 2), P("(1 2)", 3)};
    CHECK_THROWS_AS(is_transitive(mixed), InvalidInput);
}

TEST_CASE("cycle notation parsing and printing") {
    CHECK(P("(1 2)(3 4)", 4).to_string() == "(1 2)(3 4)");
    CHECK(P("( 3  1 2 )", 0).to_string() == "(1 2 3)");
    CHECK(P("(1, 2)", 3) == P("(1 2)", 3));
    CHECK(P("(4 5)(1 2 3)", 5).to_string() == "(1 2 3)(4 5)");
    CHECK(P("()", 3).is_identity());
    CHECK(P("(1)(2)", 0).degree() == 2);
    CHECK(P("(1 2)", 0).degree() == 2);
    CHECK(Permutation::identity(3).to_string() == "()");
    CHECK_THROWS_AS(P("(1 2", 3), InvalidInput);
    CHECK_THROWS_AS(P("1 2)", 3), InvalidInput);
    CHECK_THROWS_AS(P("(1 (2))", 3), InvalidInput);
    CHECK_THROWS_AS(P("(1 1)", 3), InvalidInput);
    CHECK_THROWS_AS(P("(1 2)(2 3)", 3), InvalidInput);
    CHECK_THROWS_AS(P("(1 4)", 3), InvalidInput);
    CHECK_THROWS_AS(P("(0 1)", 3), InvalidInput);
    CHECK_THROWS_AS(P("(a b)", 3), InvalidInput);
    CHECK_THROWS_AS(P("()", 0), InvalidInput);
}

TEST_CASE("from_images validates bijections") {
    const std::vector<int> ok{2, 3, 1};
    CHECK(Permutation::from_images(ok) == P("(1 2 3)", 3));
    const std::vector<int> repeated{1, 1, 2};
    const std::vector<int> out_of_range{1, 4, 2};
    CHECK_THROWS_AS(Permutation::from_images(repeated), InvalidInput);
    CHECK_THROWS_AS(Permutation::from_images(out_of_range), InvalidInput);
}

TEST_CASE("random permutations: inverse, conjugation invariance, printing round trip") {
    std::mt19937_64 rng(oracle::kSeed);
    for (int trial = 0; trial < 300; ++trial) {
        const int d = 1 + trial % 9;
        const auto p = oracle::random_permutation(rng, d);
        const auto s = oracle::random_permutation(rng, d);
        CHECK(compose(p, p.inverse()).is_identity());
        CHECK(compose(p.inverse(), p).is_identity());
        CHECK(cycle_type(conjugate(p, s)) == cycle_type(p));
        CHECK(conjugate(p, s) == compose(compose(s, p), s.inverse()));
        CHECK(Permutation::parse(p.to_string(), d) == p);
    }
}

TEST_CASE("composition is associative") {
    std::mt19937_64 rng(oracle::kSeed + 7);
    for (int trial = 0; trial < 100; ++trial) {
        const int d = 2 + trial % 6;
        const auto a = oracle::random_permutation(rng, d);
        const auto b = oracle::random_permutation(rng, d);
        const auto c = oracle::random_permutation(rng, d);
        CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
    }
}

TEST_CASE("orbit transitivity agrees with full group generation for d <= 5") {
    std::mt19937_64 rng(oracle::kSeed + 11);
    for (int trial = 0; trial < 250; ++trial) {
        const int d = 1 + trial % 5;
        std::vector<Permutation> gens;
        const int count = 1 + trial % 3;
        for (int i = 0; i < count; ++i) {
            // Bias toward small supports so both outcomes appear.
            auto p = oracle::random_permutation(rng, d);
            if (trial % 2 == 0 && d >= 2) p = Permutation::parse("(1 2)", d);
            gens.push_back(p);
        }
        CHECK(is_transitive(gens) == transitive_by_group(gens));
    }
}

TEST_CASE("class enumeration sizes") {
    CHECK(all_permutations(4).size() == 24);
    CHECK(permutations_of_type(Partition{2, 1, 1}).size() == 6);
    CHECK(permutations_of_type(Partition{3, 1}).size() == 8);
    CHECK(permutations_of_type(Partition{2, 2}).size() == 3);
    CHECK(group_order({P("(1 2)", 3), P("(1 2 3)", 3)}) == 6);
}

}  // TEST_SUITE
