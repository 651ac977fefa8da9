#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hurwitz/exact_arith.hpp"
#include "hurwitz/permutation.hpp"

namespace hurwitz {

// Canonical forms try every relabelling in S_d, which caps the degree.
inline constexpr int kMaxMonodromyDegree = 8;
inline constexpr std::uint64_t kDefaultNodeLimit = 100'000'000;

/// A degree and an ordered list of branch profiles over P^1, one per branch point.
struct MonodromyProblem {
    int degree = 0;
    std::vector<CycleType> profiles;

    // Throws InvalidInput unless 1 <= degree <= kMaxMonodromyDegree, profiles
    // is nonempty and every profile is a partition of degree.
    void validate() const;

    // Inline form "d=3 profiles=2,1x4" (see parse_profiles).
    static MonodromyProblem parse(std::string_view text);
};

// Semicolon-separated partitions with comma-separated parts. A trailing "xN"
// repeats a partition N times: "2,1x4" is four copies of [2,1] and
// "3;2,1x2" is [3],[2,1],[2,1].
std::vector<CycleType> parse_profiles(std::string_view text);

/// One simultaneous-conjugation class of monodromy tuples.
///
/// The representative is the lexicographically smallest tuple in the orbit;
/// class_size is the orbit length d!/stabilizer_order.
struct MonodromyClass {
    std::vector<Permutation> representative;
    std::uint64_t class_size = 0;
    std::uint64_t stabilizer_order = 0;

    friend bool operator==(const MonodromyClass&, const MonodromyClass&) = default;
};

struct EnumerationOptions {
    std::uint64_t node_limit = kDefaultNodeLimit;
    unsigned jobs = 1;
};

struct EnumerationResult {
    std::vector<MonodromyClass> classes;  // sorted by representative
    std::uint64_t tuple_count = 0;        // transitive identity-product tuples, = sum of class sizes
    BigRational weighted_count;           // sum of 1/stabilizer_order = tuple_count / d!
    std::uint64_t nodes_visited = 0;
};

/// All conjugation classes of tuples (t_1, ..., t_n) with cycle_type(t_i) equal
/// to the i-th profile, t_1 t_2 ... t_n = id, and a transitive generated group.
///
/// Products use the compose() convention, so t_1 t_2 ... t_n applies t_n first.
/// The search fixes t_1 to one element of its class, backtracks over the
/// middle slots with parity and orbit-merging pruning, and forces the last
/// slot to the inverse of the partial product. Throws ResourceLimit once more
/// than options.node_limit search nodes are visited.
EnumerationResult enumerate_classes(const MonodromyProblem& problem,
                                    const EnumerationOptions& options = {});

std::size_t count_classes(const MonodromyProblem& problem, const EnumerationOptions& options = {});

// Riemann-Hurwitz genus of a connected cover with these profiles; empty when impossible.
std::optional<std::int64_t> expected_genus(const MonodromyProblem& problem);

/// Lexicographically smallest tuple among all simultaneous conjugates of
/// `tuple`. If `stabilizer_order` is non-null it receives the number of
/// relabellings fixing the tuple. Throws InvalidInput on mixed degrees or a
/// degree above kMaxMonodromyDegree.
std::vector<Permutation> canonical_form(std::span<const Permutation> tuple,
                                        std::uint64_t* stabilizer_order = nullptr);

// t_1 t_2 ... t_n in the compose() convention.
Permutation tuple_product(std::span<const Permutation> tuple);

}  // namespace hurwitz
