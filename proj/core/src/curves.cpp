#include "hurwitz/curves.hpp"

#include <string>

#include "hurwitz/errors.hpp"
#include "hurwitz/formulas.hpp"

namespace hurwitz {

namespace {

BigInt big(std::int64_t v) { return BigInt(static_cast<long>(v)); }

void require(bool ok, const std::string& what) {
    if (!ok) throw InvalidInput(what);
}

}  // namespace

BaseDivisor image_of(Divisor d) {
    switch (d) {
        case Divisor::T_1p1:
        case Divisor::D_1p1:
        case Divisor::delta_1p1:
        case Divisor::Delta_1p1:
            return BaseDivisor::delta_1p1;
        case Divisor::T_2:
        case Divisor::D_2:
        case Divisor::delta_2:
        case Divisor::Delta_2:
            return BaseDivisor::delta_2;
        case Divisor::E_1p2:
            return BaseDivisor::delta_1p2;
        case Divisor::E_3:
            return BaseDivisor::delta_3;
    }
    throw std::logic_error("unknown divisor");
}

DivisorVector curve_F(std::int64_t g, std::int64_t d) {
    require(g >= 2, "curve F needs g >= 2");
    require(d >= g + 1, "curve F needs d >= g + 1");
    DivisorVector v{.curve = "F", .g = g, .d = d, .h = std::nullopt, .entries = {}};
    v[Divisor::T_2] = big(plucker(2, d, g));
    v[Divisor::D_2] = de_jonquieres_closed(g, d);
    v[Divisor::delta_1p1] = 1;
    v[Divisor::delta_2] = big(d - 2);
    return v;
}

DivisorVector curve_G3(std::int64_t g, std::int64_t d) {
    require(g >= 1, "curve G3 needs g >= 1");
    require(d >= 3, "curve G3 needs d >= 3");
    DivisorVector v{.curve = "G3", .g = g, .d = d, .h = std::nullopt, .entries = {}};
    v[Divisor::T_2] = 9;
    v[Divisor::Delta_2] = 3;
    v[Divisor::E_3] = -4;
    return v;
}

DivisorVector curve_G12(std::int64_t g, std::int64_t d) {
    require(g >= 1, "curve G12 needs g >= 1");
    require(d >= 3, "curve G12 needs d >= 3");
    DivisorVector v{.curve = "G12", .g = g, .d = d, .h = std::nullopt, .entries = {}};
    v[Divisor::T_1p1] = 6;
    v[Divisor::T_2] = 3;
    v[Divisor::Delta_1p1] = 2;
    v[Divisor::Delta_2] = 1;
    v[Divisor::E_1p2] = -4;
    return v;
}

namespace {

void require_hyperelliptic_range(std::int64_t g, std::int64_t d, std::int64_t h, const char* name) {
    require(h >= 0 && h <= g - 1, std::string("curve ") + name + " needs 0 <= h <= g - 1");
    require(d >= 4, std::string("curve ") + name + " needs d >= 4");
}

}  // namespace

DivisorVector curve_A(std::int64_t g, std::int64_t d, std::int64_t h) {
    require_hyperelliptic_range(g, d, h, "A");
    DivisorVector v{.curve = "A", .g = g, .d = d, .h = h, .entries = {}};
    v[Divisor::D_1p1] = 2;
    v[Divisor::D_2] = big(4 * (d + h) - 14);
    v[Divisor::E_3] = 2;
    v[Divisor::Delta_2] = big(8 * (g - h) - 8);
    return v;
}

DivisorVector curve_B(std::int64_t g, std::int64_t d, std::int64_t h) {
    require_hyperelliptic_range(g, d, h, "B");
    DivisorVector v{.curve = "B", .g = g, .d = d, .h = h, .entries = {}};
    v[Divisor::D_2] = big(4 * (d + h) - 12);
    v[Divisor::E_1p2] = 1;
    v[Divisor::E_3] = 1;
    v[Divisor::Delta_1p1] = -2;
    v[Divisor::Delta_2] = big(8 * (g - h) - 6);
    return v;
}

PushforwardVector pushforward_to_base(const DivisorVector& v) {
    PushforwardVector out;
    for (std::size_t i = 0; i < kDivisorCount; ++i)
        out[image_of(static_cast<Divisor>(i))] += v.entries[i];
    return out;
}

DivisorVector degeneration_tally(std::span<const MonodromyClass> classes, std::size_t moving_slot) {
    DivisorVector tally{.curve = "degeneration-tally", .g = 0, .d = 0, .h = std::nullopt, .entries = {}};
    for (const auto& cls : classes) {
        const auto& tuple = cls.representative;
        if (moving_slot >= tuple.size()) throw InvalidInput("degeneration_tally: moving slot out of range");
        const Permutation& moving = tuple[moving_slot];
        const int degree = moving.degree();
        tally.d = degree;
        for (std::size_t i = 0; i < tuple.size(); ++i) {
            if (i == moving_slot) continue;
            const CycleType node = cycle_type(compose(tuple[i], moving));
            if (node.multiplicity(1) == static_cast<std::size_t>(degree)) {
                tally[Divisor::Delta_2] += 1;
            } else if (node.multiplicity(3) == 1 && node.multiplicity(1) + 3 == static_cast<std::size_t>(degree)) {
                tally[Divisor::T_2] += 1;
            } else if (node.multiplicity(2) == 2 && node.multiplicity(1) + 4 == static_cast<std::size_t>(degree)) {
                tally[Divisor::D_2] += 1;
            }
        }
    }
    return tally;
}

}  // namespace hurwitz
