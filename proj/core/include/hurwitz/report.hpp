#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "hurwitz/curves.hpp"
#include "hurwitz/exact_arith.hpp"
#include "hurwitz/matrix_m.hpp"
#include "hurwitz/monodromy.hpp"

// JSON and markdown renderings of every result type. JSON objects keep
// insertion order so output is byte-stable for fixed inputs.
namespace hurwitz::report {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// {"schema": 1, "kind": kind}; callers append their payload.
Json envelope(const std::string& kind);

// Integers that fit in a signed 64-bit value are JSON numbers, others decimal strings.
Json integer(const BigInt& v);
// "p/q", or "p" when integral.
std::string rational(const BigRational& q);

Json to_json(const Partition& p);
Json to_json(const MonodromyProblem& p);
Json to_json(const MonodromyClass& c);
Json to_json(const EnumerationResult& r);
Json to_json(const DivisorVector& v);
Json to_json(const PushforwardVector& v);
Json to_json(const IntersectionMatrix& m);
Json to_json(const MatrixVerdict& v);
Json to_json(const ScanReport& r);

// {"degree": d, "profiles": [[...], ...]}. Throws InvalidInput on a malformed document.
MonodromyProblem problem_from_json(const nlohmann::json& doc);

std::string markdown(const MonodromyProblem& p, const EnumerationResult& r);
std::string markdown(const DivisorVector& v, const PushforwardVector& push);
std::string markdown(const IntersectionMatrix& m);
std::string markdown(const MatrixVerdict& v);
std::string markdown(const ScanReport& r);

}  // namespace hurwitz::report
