#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "hurwitz/exact_arith.hpp"

namespace hurwitz {

// Closed-form enumerative formulas for simply branched covers of the line.
// Integer arguments are plain 64-bit values; results that can grow past
// 64 bits (de Jonquieres counts, rational branch counts) are exact.

// Ramification points of a general degree-d linear series of dimension r on a
// genus-g curve: (r+1)d + (r+1)r(g-1). Requires r >= 1, d >= 0.
std::int64_t plucker(std::int64_t r, std::int64_t d, std::int64_t g);

// Divisors of type (2,2,1^{d-4}) in a general net of degree d on a genus-g
// curve, in closed form: 2(g^2 + 2gd + d^2 - 5d - 7g + 6).
BigInt de_jonquieres_closed(std::int64_t g, std::int64_t d);

/// The same count by coefficient extraction: the coefficient of x^2 y^(d-4) in
/// (1+4x+y)^g (1+2x+y)^(d-r-g).
///
/// Throws DomainError when d < 4 or d - r - g < 0; outside that range the
/// series is not general and the coefficient has no enumerative meaning.
BigInt de_jonquieres_expand(std::int64_t g, std::int64_t d, std::int64_t r = 2);

// Source genus of a connected degree-d cover of P^1 with the given branch
// profiles: 2g - 2 = -2d + sum over all parts of (m - 1). Empty when g would be
// negative or non-integral. Throws InvalidInput if a profile does not sum to d.
std::optional<std::int64_t> riemann_hurwitz_genus(std::int64_t d,
                                                  std::span<const Partition> profiles);

// Total ramification of a degree-d map from genus g_source to genus g_target:
// 2 g_source - 2 - d (2 g_target - 2). Requires d >= 1.
std::int64_t ramification_count(std::int64_t g_source, std::int64_t g_target, std::int64_t d);

// Arithmetic genus (a-1)(b-1) of a bidegree (a,b) curve on P^1 x P^1. Requires a, b >= 1.
std::int64_t adjunction_genus_quadric(std::int64_t a, std::int64_t b);

// Number of branches prod(m_i) / lcm(m) of the twisted-stable-maps space along
// a boundary component with node profile m. Always integral.
BigRational branch_count(const Partition& profile);

// Ramification of each branch over the genus-zero boundary: lcm(m).
BigInt ram_order(const Partition& profile);

// d - g - 1 + h0_twist. Requires h0_twist >= 0.
std::int64_t fibre_dimension(std::int64_t g, std::int64_t d, std::int64_t h0_twist);

// Degree 2g + 2d - 2 of the map forgetting the distinguished branch point.
std::int64_t forgetful_multiplier(std::int64_t g, std::int64_t d);

}  // namespace hurwitz
