#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace hurwitz {

// GMP integers and rationals. mpq_class keeps values canonical (reduced,
// positive denominator) after every arithmetic operation.
using BigInt = mpz_class;
using BigRational = mpq_class;

// Builds num/den in canonical form. Throws InvalidInput when den == 0.
BigRational make_rational(const BigInt& num, const BigInt& den);

bool is_integral(const BigRational& q);

// Decimal rendering with `digits` digits after the point, truncated toward zero.
std::string to_decimal(const BigRational& q, int digits = 6);

/// A partition of a positive integer, stored with parts in nonincreasing order.
///
/// Every constructor normalizes, so two partitions compare equal exactly when
/// they have the same multiset of parts.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    // Comma-separated parts, e.g. "2,1,1". Whitespace is ignored.
    static Partition parse(std::string_view text);

    std::span<const int> parts() const { return parts_; }
    int total() const { return total_; }
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }

    // Number of parts equal to `value`.
    std::size_t multiplicity(int value) const;

    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
    int total_ = 0;
};

// Least common multiple of the parts. Throws InvalidInput on an empty partition.
BigInt lcm_of(const Partition& p);

// Product of the parts. Throws InvalidInput on an empty partition.
BigInt product_of(const Partition& p);

/// Dense row-major matrix of exact rationals.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols);

    static RatMatrix identity(std::size_t n);
    // Throws InvalidInput on ragged input.
    static RatMatrix from_rows(const std::vector<std::vector<BigRational>>& rows);
    static RatMatrix from_integers(std::initializer_list<std::initializer_list<long>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    BigRational& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const BigRational& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    std::span<BigRational> row(std::size_t r) { return {entries_.data() + r * cols_, cols_}; }
    std::span<const BigRational> row(std::size_t r) const {
        return {entries_.data() + r * cols_, cols_};
    }

    void swap_rows(std::size_t a, std::size_t b);

    friend bool operator==(const RatMatrix& a, const RatMatrix& b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BigRational> entries_;
};

/// Exact determinant by fraction-free (Bareiss) elimination.
///
/// Rows are first scaled to integers by the lcm of their denominators; the
/// elimination then runs over BigInt with the first nonzero entry of each
/// column as pivot. Every Bareiss division is checked for exactness and a
/// failure throws std::logic_error. Throws InvalidInput on a non-square matrix.
/// The empty 0x0 matrix has determinant 1.
BigRational det_exact(const RatMatrix& m);

// Rank over Q by fraction-free row echelon reduction.
std::size_t rank_exact(const RatMatrix& m);

}  // namespace hurwitz
