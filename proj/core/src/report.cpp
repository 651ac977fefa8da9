#include "hurwitz/report.hpp"

#include <sstream>

#include "hurwitz/errors.hpp"

namespace hurwitz::report {

Json envelope(const std::string& kind) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["kind"] = kind;
    return j;
}

Json integer(const BigInt& v) {
    if (v.fits_slong_p()) return static_cast<std::int64_t>(v.get_si());
    return v.get_str();
}

std::string rational(const BigRational& q) {
    if (is_integral(q)) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Json to_json(const Partition& p) {
    Json arr = Json::array();
    for (int part : p.parts()) arr.push_back(part);
    return arr;
}

Json to_json(const MonodromyProblem& p) {
    Json j;
    j["degree"] = p.degree;
    Json profiles = Json::array();
    for (const auto& profile : p.profiles) profiles.push_back(to_json(profile));
    j["profiles"] = std::move(profiles);
    return j;
}

Json to_json(const MonodromyClass& c) {
    Json j;
    Json rep = Json::array();
    for (const auto& p : c.representative) rep.push_back(p.to_string());
    j["representative"] = std::move(rep);
    j["class_size"] = c.class_size;
    j["stabilizer_order"] = c.stabilizer_order;
    return j;
}

Json to_json(const EnumerationResult& r) {
    Json j;
    j["count"] = r.classes.size();
    j["tuple_count"] = r.tuple_count;
    j["weighted_count"] = rational(r.weighted_count);
    j["nodes_visited"] = r.nodes_visited;
    Json classes = Json::array();
    for (const auto& c : r.classes) classes.push_back(to_json(c));
    j["classes"] = std::move(classes);
    return j;
}

Json to_json(const DivisorVector& v) {
    Json j;
    j["curve"] = v.curve;
    j["g"] = v.g;
    j["d"] = v.d;
    if (v.h) j["h"] = *v.h;
    Json entries;
    for (std::size_t i = 0; i < kDivisorCount; ++i)
        entries[std::string(kDivisorLabels[i])] = integer(v.entries[i]);
    j["intersections"] = std::move(entries);
    return j;
}

Json to_json(const PushforwardVector& v) {
    Json j;
    for (std::size_t i = 0; i < kBaseDivisorCount; ++i)
        j[std::string(kBaseDivisorLabels[i])] = integer(v.values[i]);
    return j;
}

Json to_json(const IntersectionMatrix& m) {
    Json j;
    j["g"] = m.g;
    j["d"] = m.d;
    j["b"] = m.b;
    Json columns = Json::array();
    for (auto label : kDivisorLabels) columns.push_back(std::string(label));
    j["columns"] = std::move(columns);
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.entries.rows(); ++r) {
        Json row;
        row["label"] = std::string(kMatrixRowLabels[r]);
        Json values = Json::array();
        for (const auto& q : m.entries.row(r)) values.push_back(rational(q));
        row["entries"] = std::move(values);
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    return j;
}

Json to_json(const MatrixVerdict& v) {
    Json j;
    j["g"] = v.g;
    j["d"] = v.d;
    j["determinant"] = rational(v.determinant);
    j["determinant_decimal"] = to_decimal(v.determinant, 6);
    j["rank"] = v.rank;
    j["nonsingular"] = v.nonsingular;
    Json checks;
    for (std::size_t r = 0; r < kMatrixSize; ++r) checks[std::string(kMatrixRowLabels[r])] = v.row_checks[r];
    j["row_checks"] = std::move(checks);
    j["passed"] = v.passed();
    return j;
}

Json to_json(const ScanReport& r) {
    Json j;
    j["points"] = r.entries.size();
    j["all_pass"] = r.all_pass;
    j["vacuous"] = r.vacuous;
    Json entries = Json::array();
    for (const auto& e : r.entries) {
        Json row;
        row["g"] = e.g;
        row["d"] = e.d;
        row["determinant"] = rational(e.determinant);
        row["nonsingular"] = e.nonsingular;
        row["rows_ok"] = e.rows_ok;
        entries.push_back(std::move(row));
    }
    j["entries"] = std::move(entries);
    return j;
}

MonodromyProblem problem_from_json(const nlohmann::json& doc) {
    MonodromyProblem p;
    try {
        if (!doc.is_object()) throw InvalidInput("monodromy problem must be a JSON object");
        if (!doc.contains("degree") || !doc.at("degree").is_number_integer())
            throw InvalidInput("monodromy problem needs an integer \"degree\"");
        if (!doc.contains("profiles") || !doc.at("profiles").is_array())
            throw InvalidInput("monodromy problem needs a \"profiles\" array");
        p.degree = doc.at("degree").get<int>();
        for (const auto& profile : doc.at("profiles")) {
            if (!profile.is_array()) throw InvalidInput("each profile must be an array of parts");
            p.profiles.emplace_back(profile.get<std::vector<int>>());
        }
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("malformed monodromy problem: ") + e.what());
    }
    return p;
}

// ---------------------------------------------------------------------------

namespace {

std::string profiles_text(const MonodromyProblem& p) {
    std::string out;
    for (std::size_t i = 0; i < p.profiles.size(); ++i) {
        if (i) out += "; ";
        out += "[" + p.profiles[i].to_string() + "]";
    }
    return out;
}

}  // namespace

std::string markdown(const MonodromyProblem& p, const EnumerationResult& r) {
    std::ostringstream out;
    out << "## Monodromy classes\n\n";
    out << "- degree: " << p.degree << "\n";
    out << "- profiles: " << profiles_text(p) << "\n";
    out << "- count: " << r.classes.size() << "\n";
    out << "- tuple count: " << r.tuple_count << "\n";
    out << "- weighted count: " << rational(r.weighted_count) << "\n";
    if (!r.classes.empty()) {
        out << "\n| # |";
        for (std::size_t i = 0; i < p.profiles.size(); ++i) out << " t" << i + 1 << " |";
        out << " class size | stabilizer |\n|---|";
        for (std::size_t i = 0; i < p.profiles.size(); ++i) out << "---|";
        out << "---|---|\n";
        for (std::size_t k = 0; k < r.classes.size(); ++k) {
            const auto& c = r.classes[k];
            out << "| " << k + 1 << " |";
            for (const auto& t : c.representative) out << " " << t.to_string() << " |";
            out << " " << c.class_size << " | " << c.stabilizer_order << " |\n";
        }
    }
    return out.str();
}

std::string markdown(const DivisorVector& v, const PushforwardVector& push) {
    std::ostringstream out;
    out << "## Curve " << v.curve << " (g=" << v.g << ", d=" << v.d;
    if (v.h) out << ", h=" << *v.h;
    out << ")\n\n| divisor | intersection |\n|---|---|\n";
    for (std::size_t i = 0; i < kDivisorCount; ++i)
        out << "| " << kDivisorLabels[i] << " | " << v.entries[i].get_str() << " |\n";
    out << "\n### Pushforward to the genus-zero boundary\n\n| divisor | intersection |\n|---|---|\n";
    for (std::size_t i = 0; i < kBaseDivisorCount; ++i)
        out << "| " << kBaseDivisorLabels[i] << " | " << push.values[i].get_str() << " |\n";
    return out.str();
}

std::string markdown(const IntersectionMatrix& m) {
    std::ostringstream out;
    out << "## Matrix M (g=" << m.g << ", d=" << m.d << ", b=" << m.b << ")\n\n| row |";
    for (auto label : kDivisorLabels) out << " " << label << " |";
    out << "\n|---|";
    for (std::size_t c = 0; c < kMatrixSize; ++c) out << "---|";
    out << "\n";
    for (std::size_t r = 0; r < m.entries.rows(); ++r) {
        out << "| " << kMatrixRowLabels[r] << " |";
        for (const auto& q : m.entries.row(r)) out << " " << rational(q) << " |";
        out << "\n";
    }
    return out.str();
}

std::string markdown(const MatrixVerdict& v) {
    std::ostringstream out;
    out << "## Verification of M (g=" << v.g << ", d=" << v.d << ")\n\n";
    out << "- determinant: " << rational(v.determinant) << " (" << to_decimal(v.determinant, 6) << ")\n";
    out << "- rank: " << v.rank << "\n";
    out << "- nonsingular: " << (v.nonsingular ? "true" : "false") << "\n";
    out << "- row checks: " << (v.rows_ok() ? "pass" : "FAIL") << "\n\n| row | check |\n|---|---|\n";
    for (std::size_t r = 0; r < kMatrixSize; ++r)
        out << "| " << kMatrixRowLabels[r] << " | " << (v.row_checks[r] ? "pass" : "FAIL") << " |\n";
    out << "\nverdict: " << (v.passed() ? "PASS" : "FAIL") << "\n";
    return out.str();
}

std::string markdown(const ScanReport& r) {
    std::ostringstream out;
    out << "## Independence scan\n\n";
    out << "- points: " << r.entries.size() << "\n";
    out << "- all pass: " << (r.all_pass ? "true" : "false") << (r.vacuous ? " (vacuous)" : "") << "\n";
    if (!r.entries.empty()) {
        out << "\n| g | d | det(M) | nonsingular | rows |\n|---|---|---|---|---|\n";
        for (const auto& e : r.entries)
            out << "| " << e.g << " | " << e.d << " | " << rational(e.determinant) << " | "
                << (e.nonsingular ? "yes" : "NO") << " | " << (e.rows_ok ? "ok" : "FAIL") << " |\n";
    }
    return out.str();
}

}  // namespace hurwitz::report
