#include "hurwitz/matrix_m.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <string>
#include <thread>

#include "hurwitz/errors.hpp"

namespace hurwitz {

namespace {

struct PairRow {
    std::size_t column;  // first of the two adjacent columns
    long lead;           // entry in `column`
    long b_offset;       // entry in `column + 1` is b - b_offset
};

// Forgetting the distinguished branch point sends each "1+[k]" / "[k+1]" pair
// onto one boundary divisor of the Hurwitz space without the distinguished point.
constexpr std::array<PairRow, 5> kPushforwardRows{{
    {index_of(Divisor::T_1p1), 2, 2},
    {index_of(Divisor::D_1p1), 2, 2},
    {index_of(Divisor::delta_1p1), 2, 2},
    {index_of(Divisor::Delta_1p1), 1, 2},
    {index_of(Divisor::E_1p2), 3, 3},
}};

std::array<DivisorVector, 5> curve_rows(std::int64_t g, std::int64_t d) {
    return {curve_A(g, d, 0), curve_B(g, d, 0), curve_A(g, d, 1), curve_G3(g, d), curve_F(g, d)};
}

}  // namespace

IntersectionMatrix build_M(std::int64_t g, std::int64_t d) {
    if (g < 3) throw InvalidInput("matrix M needs g >= 3, got " + std::to_string(g));
    if (d < g + 1) throw InvalidInput("matrix M needs d >= g + 1, got d = " + std::to_string(d));

    IntersectionMatrix m;
    m.g = g;
    m.d = d;
    m.b = 2 * g + 2 * d - 2;
    m.entries = RatMatrix(kMatrixSize, kMatrixSize);

    for (std::size_t r = 0; r < kPushforwardRows.size(); ++r) {
        const PairRow& row = kPushforwardRows[r];
        m.entries.at(r, row.column) = row.lead;
        m.entries.at(r, row.column + 1) = static_cast<long>(m.b - row.b_offset);
    }
    const auto curves = curve_rows(g, d);
    for (std::size_t k = 0; k < curves.size(); ++k)
        for (std::size_t c = 0; c < kMatrixSize; ++c)
            m.entries.at(kPushforwardRows.size() + k, c) = curves[k].entries[c];
    return m;
}

bool MatrixVerdict::rows_ok() const {
    return std::all_of(row_checks.begin(), row_checks.end(), [](bool ok) { return ok; });
}

MatrixVerdict verify_M(std::int64_t g, std::int64_t d) {
    const IntersectionMatrix m = build_M(g, d);
    MatrixVerdict v;
    v.g = g;
    v.d = d;
    v.determinant = det_exact(m.entries);
    v.rank = rank_exact(m.entries);
    v.nonsingular = v.determinant != 0;

    for (std::size_t r = 0; r < kPushforwardRows.size(); ++r) {
        const PairRow& row = kPushforwardRows[r];
        std::size_t nonzero = 0;
        for (std::size_t c = 0; c < kMatrixSize; ++c)
            if (m.entries.at(r, c) != 0) ++nonzero;
        v.row_checks[r] = nonzero == 2 && m.entries.at(r, row.column) == row.lead &&
                          m.entries.at(r, row.column + 1) == static_cast<long>(m.b - row.b_offset);
    }
    const auto curves = curve_rows(g, d);
    for (std::size_t k = 0; k < curves.size(); ++k) {
        bool same = true;
        for (std::size_t c = 0; c < kMatrixSize; ++c)
            same = same && m.entries.at(kPushforwardRows.size() + k, c) == curves[k].entries[c];
        v.row_checks[kPushforwardRows.size() + k] = same;
    }
    return v;
}

ScanReport scan_independence(IntRange genera, IntRange d_offsets, unsigned jobs,
                             std::int64_t point_limit) {
    ScanReport report;
    if (genera.empty() || d_offsets.empty()) return report;

    if (genera.size() > point_limit / d_offsets.size())
        throw ResourceLimit("scan grid exceeds " + std::to_string(point_limit) + " points");
    if (genera.lo < 3) throw InvalidInput("scan: genus range must start at 3 or above");
    if (d_offsets.lo < 1) throw InvalidInput("scan: d offsets must be >= 1");

    std::vector<std::pair<std::int64_t, std::int64_t>> points;
    for (std::int64_t g = genera.lo; g <= genera.hi; ++g)
        for (std::int64_t k = d_offsets.lo; k <= d_offsets.hi; ++k) points.emplace_back(g, g + k);

    report.entries.resize(points.size());
    auto evaluate = [&](std::size_t i) {
        const auto [g, d] = points[i];
        const MatrixVerdict v = verify_M(g, d);
        report.entries[i] = ScanEntry{g, d, v.determinant, v.nonsingular, v.rows_ok()};
    };

    const std::size_t workers = std::clamp<std::size_t>(jobs, 1, points.size());
    if (workers == 1) {
        for (std::size_t i = 0; i < points.size(); ++i) evaluate(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::exception_ptr> errors(workers);
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    for (std::size_t i; (i = next.fetch_add(1)) < points.size();) evaluate(i);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
        for (auto& t : pool) t.join();
        for (const auto& e : errors)
            if (e) std::rethrow_exception(e);
    }

    report.vacuous = false;
    report.all_pass = std::all_of(report.entries.begin(), report.entries.end(),
                                  [](const ScanEntry& e) { return e.nonsingular && e.rows_ok; });
    return report;
}

}  // namespace hurwitz
