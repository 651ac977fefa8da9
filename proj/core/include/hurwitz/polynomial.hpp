#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hurwitz/exact_arith.hpp"

namespace hurwitz {

inline constexpr std::size_t kDefaultTermLimit = 10'000'000;

/// Multivariate polynomial with BigInt coefficients over a fixed, ordered list
/// of variable names. Only nonzero coefficients are stored.
class SparsePoly {
public:
    using Exponents = std::vector<unsigned>;
    using TermMap = std::map<Exponents, BigInt>;

    SparsePoly() = default;
    explicit SparsePoly(std::vector<std::string> variables);

    static SparsePoly constant(std::vector<std::string> variables, const BigInt& value);
    // Throws InvalidInput if `name` is not among `variables`.
    static SparsePoly variable(std::vector<std::string> variables, std::string_view name);
    static SparsePoly monomial(std::vector<std::string> variables, Exponents exponents,
                               const BigInt& coefficient);

    const std::vector<std::string>& variables() const { return variables_; }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    // Coefficient of the monomial with the given exponents, 0 when absent.
    // Throws InvalidInput if the exponent vector has the wrong length.
    BigInt coefficient(std::span<const unsigned> exponents) const;

    // Value at the given point (one value per variable).
    BigInt evaluate(std::span<const BigInt> point) const;

    // Ascending total degree; within a degree, larger exponent vectors first,
    // so "1+4x+2y+4x^2+4xy+y^2".
    std::string to_string() const;

    // Adds c * monomial(exponents) in place, dropping the term if it cancels.
    void add_term(const Exponents& exponents, const BigInt& c);

    friend bool operator==(const SparsePoly&, const SparsePoly&) = default;

private:
    std::vector<std::string> variables_;
    TermMap terms_;
};

// Ring operations. Operands must share the same variable list (InvalidInput otherwise).
SparsePoly poly_add(const SparsePoly& a, const SparsePoly& b);
SparsePoly poly_sub(const SparsePoly& a, const SparsePoly& b);
// Throws ResourceLimit if the product would hold more than `term_limit` terms.
SparsePoly poly_mul(const SparsePoly& a, const SparsePoly& b,
                    std::size_t term_limit = kDefaultTermLimit);
// Repeated squaring; p^0 = 1. Throws InvalidInput for n < 0.
SparsePoly poly_pow(const SparsePoly& p, long long n, std::size_t term_limit = kDefaultTermLimit);

inline SparsePoly operator+(const SparsePoly& a, const SparsePoly& b) { return poly_add(a, b); }
inline SparsePoly operator-(const SparsePoly& a, const SparsePoly& b) { return poly_sub(a, b); }
inline SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) { return poly_mul(a, b); }

/// Parses expressions such as "(1+4x+y)^3*(1+2x+y)^2" or "1 - x^2".
///
/// Variables are single letters; juxtaposition multiplies ("4xy" is 4*x*y).
/// Exponents are nonnegative integer literals. When `variables` is empty the
/// variable list is the letters in the expression, sorted alphabetically.
/// Throws InvalidInput on syntax errors or on letters outside `variables`.
SparsePoly parse_polynomial(std::string_view text, std::vector<std::string> variables = {},
                            std::size_t term_limit = kDefaultTermLimit);

}  // namespace hurwitz
