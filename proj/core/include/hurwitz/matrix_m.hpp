#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "hurwitz/curves.hpp"
#include "hurwitz/exact_arith.hpp"

namespace hurwitz {

inline constexpr std::size_t kMatrixSize = 10;

inline constexpr std::array<std::string_view, kMatrixSize> kMatrixRowLabels{
    "push_T", "push_D", "push_delta", "push_Delta", "push_E", "A_0", "B_0", "A_1", "G_[3]", "F"};

/// The 10x10 relation matrix M(g,d) in DivisorBasis column order.
///
/// Rows 1-5 come from pushing a relation forward along the map that forgets
/// the distinguished branch point; each has exactly two nonzero entries.
/// Rows 6-10 are the intersection vectors of A_0, B_0, A_1, G_[3] and F.
struct IntersectionMatrix {
    std::int64_t g = 0;
    std::int64_t d = 0;
    std::int64_t b = 0;  // number of branch points, 2g + 2d - 2
    RatMatrix entries;
};

// Throws InvalidInput unless g >= 3 and d >= g + 1.
IntersectionMatrix build_M(std::int64_t g, std::int64_t d);

struct MatrixVerdict {
    std::int64_t g = 0;
    std::int64_t d = 0;
    BigRational determinant;
    std::size_t rank = 0;
    bool nonsingular = false;
    std::array<bool, kMatrixSize> row_checks{};  // per-row provenance checks

    bool rows_ok() const;
    bool passed() const { return nonsingular && rows_ok(); }
};

// Builds M and reports its exact determinant, rank and per-row checks. Row
// checks compare rows 1-5 to the forgetful-pushforward pattern and rows 6-10
// to the curve vectors. Failures are reported, not thrown.
MatrixVerdict verify_M(std::int64_t g, std::int64_t d);

struct IntRange {
    std::int64_t lo = 0;
    std::int64_t hi = -1;  // inclusive; lo > hi is empty

    bool empty() const { return lo > hi; }
    std::int64_t size() const { return empty() ? 0 : hi - lo + 1; }
};

struct ScanEntry {
    std::int64_t g = 0;
    std::int64_t d = 0;
    BigRational determinant;
    bool nonsingular = false;
    bool rows_ok = false;
};

struct ScanReport {
    std::vector<ScanEntry> entries;  // ordered by (g, d)
    bool all_pass = true;
    bool vacuous = true;             // no grid points were evaluated
};

inline constexpr std::int64_t kDefaultScanLimit = 1'000'000;

/// Verifies M(g, g + k) for every g in `genera` and k in `d_offsets`.
///
/// Points run on up to `jobs` threads; entries are ordered by (g, d)
/// regardless. Throws InvalidInput if a grid point violates build_M's
/// preconditions and ResourceLimit if the grid has more than `point_limit` points.
ScanReport scan_independence(IntRange genera, IntRange d_offsets, unsigned jobs = 1,
                             std::int64_t point_limit = kDefaultScanLimit);

}  // namespace hurwitz
