#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hurwitz/exact_arith.hpp"

namespace hurwitz {

/// A bijection of the points {1..d}.
///
/// Points are 1-based in every public interface; storage is 0-based. The
/// ordering compares image sequences lexicographically, which is the order
/// used for canonical representatives of conjugation classes.
class Permutation {
public:
    Permutation() = default;

    static Permutation identity(int degree);

    // `images[i-1]` is the image of point i. Throws InvalidInput unless the
    // sequence is a bijection of {1..images.size()}.
    static Permutation from_images(std::span<const int> images);

    // Cycle notation such as "(1 2)(3 4)" or "(1, 2)". Whitespace and commas
    // separate points; fixed points may be omitted and "()" is the identity.
    // A degree of 0 infers the degree from the largest point mentioned.
    static Permutation parse(std::string_view text, int degree = 0);

    int degree() const { return static_cast<int>(images_.size()); }

    // Image of the 1-based point.
    int operator()(int point) const { return images_[point - 1] + 1; }

    // 0-based image table.
    std::span<const int> images() const { return images_; }

    Permutation inverse() const;
    bool is_identity() const;

    // Disjoint cycles of length >= 2, each starting at its smallest point,
    // ordered by that point. 1-based.
    std::vector<std::vector<int>> cycles() const;

    // Cycle notation, e.g. "(1 3 2)(4 5)"; the identity prints as "()".
    std::string to_string() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    explicit Permutation(std::vector<int> images) : images_(std::move(images)) {}

    friend Permutation compose(const Permutation& a, const Permutation& b);
    friend Permutation conjugate(const Permutation& p, const Permutation& s);

    std::vector<int> images_;
};

using CycleType = Partition;

// "Apply b, then a". Throws InvalidInput on degree mismatch.
Permutation compose(const Permutation& a, const Permutation& b);

// s * p * s^-1: relabels every point x of p as s(x).
Permutation conjugate(const Permutation& p, const Permutation& s);

// Cycle lengths including fixed points, as a partition of the degree.
CycleType cycle_type(const Permutation& p);

// Whether the group generated by `generators` acts transitively on {1..d}.
// Uses an orbit search from point 1. Throws InvalidInput on an empty list or
// mixed degrees.
bool is_transitive(std::span<const Permutation> generators);

// All d! permutations of degree d in increasing order.
std::vector<Permutation> all_permutations(int degree);

// All permutations of degree `type.total()` with the given cycle type, in
// increasing order.
std::vector<Permutation> permutations_of_type(const CycleType& type);

}  // namespace hurwitz
