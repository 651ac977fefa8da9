#include "hurwitz/formulas.hpp"

#include <array>
#include <string>

#include "hurwitz/errors.hpp"
#include "hurwitz/polynomial.hpp"

namespace hurwitz {

std::int64_t plucker(std::int64_t r, std::int64_t d, std::int64_t g) {
    if (r < 1) throw InvalidInput("plucker: r must be >= 1");
    if (d < 0) throw InvalidInput("plucker: d must be >= 0");
    return (r + 1) * d + (r + 1) * r * (g - 1);
}

BigInt de_jonquieres_closed(std::int64_t g, std::int64_t d) {
    const BigInt G = static_cast<long>(g);
    const BigInt D = static_cast<long>(d);
    return 2 * (G * G + 2 * G * D + D * D - 5 * D - 7 * G + 6);
}

BigInt de_jonquieres_expand(std::int64_t g, std::int64_t d, std::int64_t r) {
    if (d < 4) throw DomainError("de Jonquieres: needs d >= 4, got d = " + std::to_string(d));
    if (g < 0) throw DomainError("de Jonquieres: genus must be nonnegative");
    const std::int64_t free_factors = d - r - g;
    if (free_factors < 0)
        throw DomainError("de Jonquieres: d - r - g = " + std::to_string(free_factors) +
                          " < 0, linear series is not general");

    const std::vector<std::string> vars{"x", "y"};
    const SparsePoly one = SparsePoly::constant(vars, 1);
    const SparsePoly y = SparsePoly::variable(vars, "y");
    const SparsePoly four_x = SparsePoly::monomial(vars, {1, 0}, 4);
    const SparsePoly two_x = SparsePoly::monomial(vars, {1, 0}, 2);

    const SparsePoly product =
        poly_pow(one + four_x + y, g) * poly_pow(one + two_x + y, free_factors);
    const std::array<unsigned, 2> target{2, static_cast<unsigned>(d - 4)};
    return product.coefficient(target);
}

std::optional<std::int64_t> riemann_hurwitz_genus(std::int64_t d,
                                                  std::span<const Partition> profiles) {
    std::int64_t ramification = 0;
    for (const auto& profile : profiles) {
        if (profile.total() != d)
            throw InvalidInput("profile " + profile.to_string() + " is not a partition of " +
                               std::to_string(d));
        ramification += d - static_cast<std::int64_t>(profile.length());
    }
    const std::int64_t twice = ramification - 2 * d + 2;
    if (twice < 0 || twice % 2 != 0) return std::nullopt;
    return twice / 2;
}

std::int64_t ramification_count(std::int64_t g_source, std::int64_t g_target, std::int64_t d) {
    if (d < 1) throw InvalidInput("ramification_count: degree must be >= 1");
    return 2 * g_source - 2 - d * (2 * g_target - 2);
}

std::int64_t adjunction_genus_quadric(std::int64_t a, std::int64_t b) {
    if (a < 1 || b < 1) throw InvalidInput("adjunction_genus_quadric: bidegree must be positive");
    return (a - 1) * (b - 1);
}

BigRational branch_count(const Partition& profile) {
    BigRational q = make_rational(product_of(profile), lcm_of(profile));
    if (!is_integral(q)) throw std::logic_error("branch count is not integral");
    return q;
}

BigInt ram_order(const Partition& profile) { return lcm_of(profile); }

std::int64_t fibre_dimension(std::int64_t g, std::int64_t d, std::int64_t h0_twist) {
    if (h0_twist < 0) throw InvalidInput("fibre_dimension: h0 must be nonnegative");
    return d - g - 1 + h0_twist;
}

std::int64_t forgetful_multiplier(std::int64_t g, std::int64_t d) { return 2 * g + 2 * d - 2; }

}  // namespace hurwitz
