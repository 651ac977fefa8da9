#include "hurwitz/exact_arith.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>
#include <utility>

#include "hurwitz/errors.hpp"

namespace hurwitz {

BigRational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw InvalidInput("rational with zero denominator");
    BigRational q(num, den);
    q.canonicalize();
    return q;
}

bool is_integral(const BigRational& q) { return q.get_den() == 1; }

std::string to_decimal(const BigRational& q, int digits) {
    if (digits < 0) digits = 0;
    BigInt num = q.get_num();
    const BigInt& den = q.get_den();
    const bool negative = num < 0;
    if (negative) num = -num;

    BigInt whole = num / den;
    BigInt rest = num % den;
    std::string out = negative ? "-" : "";
    out += whole.get_str();
    if (digits > 0) {
        out += '.';
        for (int i = 0; i < digits; ++i) {
            rest *= 10;
            BigInt digit = rest / den;
            rest %= den;
            out += digit.get_str();
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_) {
        if (p <= 0) throw InvalidInput("partition parts must be positive, got " + std::to_string(p));
        total_ += p;
    }
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

Partition Partition::parse(std::string_view text) {
    std::vector<int> parts;
    std::string token;
    auto flush = [&] {
        if (token.empty()) throw InvalidInput("empty part in partition '" + std::string(text) + "'");
        int value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc() || ptr != token.data() + token.size())
            throw InvalidInput("bad partition part '" + token + "'");
        parts.push_back(value);
        token.clear();
    };
    bool any = false;
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        any = true;
        if (c == ',') {
            flush();
        } else {
            token += c;
        }
    }
    if (!any) throw InvalidInput("empty partition");
    flush();
    return Partition(std::move(parts));
}

std::size_t Partition::multiplicity(int value) const {
    return static_cast<std::size_t>(std::count(parts_.begin(), parts_.end(), value));
}

std::string Partition::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

BigInt lcm_of(const Partition& p) {
    if (p.empty()) throw InvalidInput("lcm of an empty partition");
    BigInt acc = 1;
    for (int part : p.parts()) {
        BigInt v = part;
        mpz_lcm(acc.get_mpz_t(), acc.get_mpz_t(), v.get_mpz_t());
    }
    return acc;
}

BigInt product_of(const Partition& p) {
    if (p.empty()) throw InvalidInput("product of an empty partition");
    BigInt acc = 1;
    for (int part : p.parts()) acc *= part;
    return acc;
}

// ---------------------------------------------------------------------------

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, BigRational(0)) {}

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<std::vector<BigRational>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    RatMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw InvalidInput("ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

RatMatrix RatMatrix::from_integers(std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<std::vector<BigRational>> converted;
    for (const auto& row : rows) {
        std::vector<BigRational> r;
        for (long v : row) r.emplace_back(v);
        converted.push_back(std::move(r));
    }
    return from_rows(converted);
}

void RatMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap(at(a, c), at(b, c));
}

bool operator==(const RatMatrix& a, const RatMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

namespace {

// Integer matrix obtained by scaling each row by the lcm of its denominators.
// `scale` receives the product of the row multipliers.
std::vector<BigInt> clear_denominators(const RatMatrix& m, BigInt& scale) {
    std::vector<BigInt> a(m.rows() * m.cols());
    scale = 1;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        BigInt row_lcm = 1;
        for (const BigRational& q : m.row(r))
            mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), q.get_den_mpz_t());
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const BigRational& q = m.at(r, c);
            a[r * m.cols() + c] = q.get_num() * (row_lcm / q.get_den());
        }
        scale *= row_lcm;
    }
    return a;
}

// One Bareiss update: target = (pivot * target - lead * pivot_row_entry) / previous.
void bareiss_update(BigInt& target, const BigInt& pivot, const BigInt& lead,
                    const BigInt& pivot_row_entry, const BigInt& previous) {
    BigInt t = pivot * target - lead * pivot_row_entry;
    if (!mpz_divisible_p(t.get_mpz_t(), previous.get_mpz_t()))
        throw std::logic_error("Bareiss elimination produced an inexact division");
    mpz_divexact(target.get_mpz_t(), t.get_mpz_t(), previous.get_mpz_t());
}

}  // namespace

BigRational det_exact(const RatMatrix& m) {
    if (!m.is_square()) throw InvalidInput("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;

    BigInt scale;
    std::vector<BigInt> a = clear_denominators(m, scale);
    auto at = [&](std::size_t r, std::size_t c) -> BigInt& { return a[r * n + c]; };

    int sign = 1;
    BigInt previous = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && at(pivot, k) == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != k) {
            for (std::size_t c = 0; c < n; ++c) std::swap(at(pivot, c), at(k, c));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                bareiss_update(at(i, j), at(k, k), at(i, k), at(k, j), previous);
            at(i, k) = 0;
        }
        previous = at(k, k);
    }
    return make_rational(sign * at(n - 1, n - 1), scale);
}

std::size_t rank_exact(const RatMatrix& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    if (rows == 0 || cols == 0) return 0;

    BigInt scale;
    std::vector<BigInt> a = clear_denominators(m, scale);
    auto at = [&](std::size_t r, std::size_t c) -> BigInt& { return a[r * cols + c]; };

    // Column skipping keeps every entry a minor of the original matrix, so the
    // Bareiss divisions stay exact.
    std::size_t rank = 0;
    BigInt previous = 1;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && at(pivot, c) == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != rank)
            for (std::size_t j = 0; j < cols; ++j) std::swap(at(pivot, j), at(rank, j));
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                bareiss_update(at(i, j), at(rank, c), at(i, c), at(rank, j), previous);
            at(i, c) = 0;
        }
        previous = at(rank, c);
        ++rank;
    }
    return rank;
}

}  // namespace hurwitz
