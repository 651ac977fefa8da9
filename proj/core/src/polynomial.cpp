#include "hurwitz/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <utility>

#include "hurwitz/errors.hpp"

namespace hurwitz {

namespace {

void require_same_variables(const SparsePoly& a, const SparsePoly& b, const char* op) {
    if (a.variables() != b.variables())
        throw InvalidInput(std::string(op) + ": operands use different variable lists");
}

unsigned total_degree(const SparsePoly::Exponents& e) {
    return std::accumulate(e.begin(), e.end(), 0u);
}

}  // namespace

SparsePoly::SparsePoly(std::vector<std::string> variables) : variables_(std::move(variables)) {}

SparsePoly SparsePoly::constant(std::vector<std::string> variables, const BigInt& value) {
    SparsePoly p(std::move(variables));
    p.add_term(Exponents(p.variables_.size(), 0), value);
    return p;
}

SparsePoly SparsePoly::variable(std::vector<std::string> variables, std::string_view name) {
    auto it = std::find(variables.begin(), variables.end(), name);
    if (it == variables.end()) throw InvalidInput("unknown variable '" + std::string(name) + "'");
    Exponents e(variables.size(), 0);
    e[static_cast<std::size_t>(it - variables.begin())] = 1;
    return monomial(std::move(variables), std::move(e), 1);
}

SparsePoly SparsePoly::monomial(std::vector<std::string> variables, Exponents exponents,
                                const BigInt& coefficient) {
    if (exponents.size() != variables.size())
        throw InvalidInput("monomial exponent vector has the wrong length");
    SparsePoly p(std::move(variables));
    p.add_term(exponents, coefficient);
    return p;
}

void SparsePoly::add_term(const Exponents& exponents, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(exponents, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

BigInt SparsePoly::coefficient(std::span<const unsigned> exponents) const {
    if (exponents.size() != variables_.size())
        throw InvalidInput("coefficient: exponent vector length " + std::to_string(exponents.size()) +
                           " does not match " + std::to_string(variables_.size()) + " variables");
    auto it = terms_.find(Exponents(exponents.begin(), exponents.end()));
    return it == terms_.end() ? BigInt(0) : it->second;
}

BigInt SparsePoly::evaluate(std::span<const BigInt> point) const {
    if (point.size() != variables_.size())
        throw InvalidInput("evaluate: point has the wrong number of coordinates");
    BigInt sum = 0;
    for (const auto& [e, c] : terms_) {
        BigInt term = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            BigInt power;
            mpz_pow_ui(power.get_mpz_t(), point[i].get_mpz_t(), e[i]);
            term *= power;
        }
        sum += term;
    }
    return sum;
}

std::string SparsePoly::to_string() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<const Exponents*, const BigInt*>> order;
    for (const auto& [e, c] : terms_) order.emplace_back(&e, &c);
    std::sort(order.begin(), order.end(), [](const auto& x, const auto& y) {
        const unsigned dx = total_degree(*x.first), dy = total_degree(*y.first);
        if (dx != dy) return dx < dy;
        return *x.first > *y.first;
    });

    std::string out;
    for (const auto& [e, c] : order) {
        const bool constant_term = total_degree(*e) == 0;
        BigInt magnitude = abs(*c);
        if (*c < 0) {
            out += '-';
        } else if (!out.empty()) {
            out += '+';
        }
        if (constant_term || magnitude != 1) out += magnitude.get_str();
        for (std::size_t i = 0; i < e->size(); ++i) {
            if ((*e)[i] == 0) continue;
            out += variables_[i];
            if ((*e)[i] > 1) out += '^' + std::to_string((*e)[i]);
        }
    }
    return out;
}

SparsePoly poly_add(const SparsePoly& a, const SparsePoly& b) {
    require_same_variables(a, b, "poly_add");
    SparsePoly out = a;
    for (const auto& [e, c] : b.terms()) out.add_term(e, c);
    return out;
}

SparsePoly poly_sub(const SparsePoly& a, const SparsePoly& b) {
    require_same_variables(a, b, "poly_sub");
    SparsePoly out = a;
    for (const auto& [e, c] : b.terms()) out.add_term(e, -c);
    return out;
}

SparsePoly poly_mul(const SparsePoly& a, const SparsePoly& b, std::size_t term_limit) {
    require_same_variables(a, b, "poly_mul");
    SparsePoly out(a.variables());
    SparsePoly::Exponents e(a.variables().size());
    for (const auto& [ea, ca] : a.terms()) {
        for (const auto& [eb, cb] : b.terms()) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
            if (out.term_count() > term_limit)
                throw ResourceLimit("polynomial product exceeds term limit of " +
                                    std::to_string(term_limit));
        }
    }
    return out;
}

SparsePoly poly_pow(const SparsePoly& p, long long n, std::size_t term_limit) {
    if (n < 0) throw InvalidInput("poly_pow: negative exponent " + std::to_string(n));
    SparsePoly result = SparsePoly::constant(p.variables(), 1);
    SparsePoly base = p;
    while (n > 0) {
        if (n & 1) result = poly_mul(result, base, term_limit);
        n >>= 1;
        if (n > 0) base = poly_mul(base, base, term_limit);
    }
    return result;
}

// ---------------------------------------------------------------------------
// Recursive-descent parser.
//
//   sum     := ['+'|'-'] product (('+'|'-') product)*
//   product := power (['*'] power)*
//   power   := atom ['^' integer]
//   atom    := integer | letter | '(' sum ')'

namespace {

class PolyParser {
public:
    PolyParser(std::string_view text, std::vector<std::string> variables, std::size_t term_limit)
        : text_(text), variables_(std::move(variables)), term_limit_(term_limit) {}

    SparsePoly parse() {
        SparsePoly result = sum();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return result;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw InvalidInput("polynomial parse error at column " + std::to_string(pos_ + 1) + ": " +
                           why + " in '" + std::string(text_) + "'");
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool starts_atom(char c) const {
        return c == '(' || std::isdigit(static_cast<unsigned char>(c)) ||
               std::isalpha(static_cast<unsigned char>(c));
    }

    SparsePoly sum() {
        SparsePoly acc(variables_);
        bool negate = false;
        if (peek() == '+' || peek() == '-') negate = text_[pos_++] == '-';
        for (;;) {
            SparsePoly term = product();
            acc = negate ? poly_sub(acc, term) : poly_add(acc, term);
            const char c = peek();
            if (c != '+' && c != '-') break;
            negate = c == '-';
            ++pos_;
        }
        return acc;
    }

    SparsePoly product() {
        SparsePoly acc = power();
        for (;;) {
            const char c = peek();
            if (c == '*') {
                ++pos_;
            } else if (!starts_atom(c)) {
                break;
            }
            acc = poly_mul(acc, power(), term_limit_);
        }
        return acc;
    }

    SparsePoly power() {
        SparsePoly base = atom();
        if (peek() == '^') {
            ++pos_;
            skip_space();
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                fail("exponent must be a nonnegative integer");
            const BigInt n = integer();
            if (!n.fits_slong_p()) fail("exponent too large");
            base = poly_pow(base, n.get_si(), term_limit_);
        }
        return base;
    }

    SparsePoly atom() {
        const char c = peek();
        if (c == '(') {
            ++pos_;
            SparsePoly inner = sum();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return SparsePoly::constant(variables_, integer());
        if (std::isalpha(static_cast<unsigned char>(c))) {
            ++pos_;
            const std::string name(1, c);
            if (std::find(variables_.begin(), variables_.end(), name) == variables_.end())
                fail("unknown variable '" + name + "'");
            return SparsePoly::variable(variables_, name);
        }
        if (c == '\0') fail("unexpected end of input");
        fail(std::string("unexpected character '") + c + "'");
    }

    BigInt integer() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return BigInt(std::string(text_.substr(start, pos_ - start)));
    }

    std::string_view text_;
    std::vector<std::string> variables_;
    std::size_t term_limit_;
    std::size_t pos_ = 0;
};

}  // namespace

SparsePoly parse_polynomial(std::string_view text, std::vector<std::string> variables,
                            std::size_t term_limit) {
    if (variables.empty()) {
        std::set<std::string> letters;
        for (char c : text)
            if (std::isalpha(static_cast<unsigned char>(c))) letters.insert(std::string(1, c));
        variables.assign(letters.begin(), letters.end());
    }
    return PolyParser(text, std::move(variables), term_limit).parse();
}

}  // namespace hurwitz
