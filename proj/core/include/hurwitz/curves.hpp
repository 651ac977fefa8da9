#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "hurwitz/exact_arith.hpp"
#include "hurwitz/monodromy.hpp"

namespace hurwitz {

/// The ten boundary divisors of the Hurwitz space with a distinguished branch
/// point, in the fixed column order of the intersection matrix. The "1+[k]"
/// flavour has the distinguished branch point on the bubble with k others;
/// the "[k]" flavour has k undistinguished branch points on the bubble.
enum class Divisor : std::size_t {
    T_1p1,      // node profile (3,1^{d-3})
    T_2,
    D_1p1,      // node profile (2,2,1^{d-4})
    D_2,
    delta_1p1,  // node profile (1^d), smooth stable model
    delta_2,
    Delta_1p1,  // node profile (1^d), non-separating node
    Delta_2,
    E_1p2,      // node profile (2,1^{d-2}), two non-separating nodes
    E_3,
};

inline constexpr std::size_t kDivisorCount = 10;

inline constexpr std::array<std::string_view, kDivisorCount> kDivisorLabels{
    "T~_{1+[1]}",     "T~_{[2]}",     "D~_{1+[1]}",     "D~_{[2]}",  "delta~_{1+[1]}",
    "delta~_{[2]}",   "Delta~_{1+[1]}", "Delta~_{[2]}", "E~_{1+[2]}", "E~_{[3]}",
};

constexpr std::size_t index_of(Divisor d) { return static_cast<std::size_t>(d); }
constexpr std::string_view label_of(Divisor d) { return kDivisorLabels[index_of(d)]; }

// Boundary divisors of the genus-zero moduli space the branch morphism maps to.
enum class BaseDivisor : std::size_t { delta_1p1, delta_2, delta_1p2, delta_3 };

inline constexpr std::size_t kBaseDivisorCount = 4;

inline constexpr std::array<std::string_view, kBaseDivisorCount> kBaseDivisorLabels{
    "delta_{1+[1]}", "delta_{[2]}", "delta_{1+[2]}", "delta_{[3]}"};

// Base divisor each component of the basis lies over.
BaseDivisor image_of(Divisor d);

/// Intersection numbers of a test curve with the ten basis divisors.
struct DivisorVector {
    std::string curve;
    std::int64_t g = 0;
    std::int64_t d = 0;
    std::optional<std::int64_t> h;
    std::array<BigInt, kDivisorCount> entries{};

    BigInt& operator[](Divisor v) { return entries[index_of(v)]; }
    const BigInt& operator[](Divisor v) const { return entries[index_of(v)]; }

    friend bool operator==(const DivisorVector&, const DivisorVector&) = default;
};

struct PushforwardVector {
    std::array<BigInt, kBaseDivisorCount> values{};

    BigInt& operator[](BaseDivisor b) { return values[static_cast<std::size_t>(b)]; }
    const BigInt& operator[](BaseDivisor b) const { return values[static_cast<std::size_t>(b)]; }

    friend bool operator==(const PushforwardVector&, const PushforwardVector&) = default;
};

// Pencil F in a general degree-d net with a fixed double point. g >= 2, d >= g+1.
DivisorVector curve_F(std::int64_t g, std::int64_t d);

// Trigonal-tail families with one moving branch point. g >= 1, d >= 3.
DivisorVector curve_G3(std::int64_t g, std::int64_t d);
DivisorVector curve_G12(std::int64_t g, std::int64_t d);

// Hyperelliptic families glued to a genus-h cover. 0 <= h <= g-1, d >= 4.
DivisorVector curve_A(std::int64_t g, std::int64_t d, std::int64_t h);
DivisorVector curve_B(std::int64_t g, std::int64_t d, std::int64_t h);

// Sums each basis entry into the genus-zero boundary divisor it lies over.
PushforwardVector pushforward_to_base(const DivisorVector& v);

/// Counts how the covers in `classes` degenerate when the branch point at
/// `moving_slot` collides with each of the other branch points.
///
/// A collision of branch points with monodromy a and b produces a node whose
/// profile is the cycle type of a*b: (3,1..) lands in T~_{[2]}, (2,2,1..) in
/// D~_{[2]} and (1^d) in Delta~_{[2]}. Each class counts once per collision.
/// Summed over a complete list of classes the tally does not depend on the
/// choice of loops. Throws InvalidInput if moving_slot is out of range.
DivisorVector degeneration_tally(std::span<const MonodromyClass> classes, std::size_t moving_slot);

}  // namespace hurwitz
