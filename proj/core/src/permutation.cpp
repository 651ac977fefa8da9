#include "hurwitz/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

#include "hurwitz/errors.hpp"

namespace hurwitz {

Permutation Permutation::identity(int degree) {
    if (degree < 0) throw InvalidInput("negative permutation degree");
    std::vector<int> images(static_cast<std::size_t>(degree));
    std::iota(images.begin(), images.end(), 0);
    return Permutation(std::move(images));
}

Permutation Permutation::from_images(std::span<const int> images) {
    const int d = static_cast<int>(images.size());
    std::vector<int> zero_based(images.size());
    std::vector<bool> seen(images.size(), false);
    for (std::size_t i = 0; i < images.size(); ++i) {
        const int v = images[i];
        if (v < 1 || v > d) throw InvalidInput("image " + std::to_string(v) + " out of range");
        if (seen[v - 1]) throw InvalidInput("images are not a bijection");
        seen[v - 1] = true;
        zero_based[i] = v - 1;
    }
    return Permutation(std::move(zero_based));
}

Permutation Permutation::parse(std::string_view text, int degree) {
    std::vector<std::vector<int>> cycles;
    bool open = false;
    std::string number;
    auto flush_number = [&] {
        if (number.empty()) return;
        if (!open) throw InvalidInput("point outside parentheses in '" + std::string(text) + "'");
        int point = 0;
        auto [ptr, ec] = std::from_chars(number.data(), number.data() + number.size(), point);
        if (ec != std::errc() || ptr != number.data() + number.size())
            throw InvalidInput("bad point '" + number + "'");
        cycles.back().push_back(point);
        number.clear();
    };
    for (char c : text) {
        if (std::isdigit(static_cast<unsigned char>(c))) {
            number += c;
        } else if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
            flush_number();
        } else if (c == '(') {
            if (open) throw InvalidInput("nested '(' in '" + std::string(text) + "'");
            open = true;
            cycles.emplace_back();
        } else if (c == ')') {
            flush_number();
            if (!open) throw InvalidInput("unbalanced ')' in '" + std::string(text) + "'");
            open = false;
        } else {
            throw InvalidInput(std::string("unexpected character '") + c + "' in cycle notation");
        }
    }
    if (open) throw InvalidInput("unterminated cycle in '" + std::string(text) + "'");

    int max_point = 0;
    for (const auto& cycle : cycles)
        for (int p : cycle) {
            if (p < 1) throw InvalidInput("points are numbered from 1");
            max_point = std::max(max_point, p);
        }
    if (degree == 0) degree = max_point;
    if (degree < 1) throw InvalidInput("cannot infer degree of '" + std::string(text) + "'");
    if (max_point > degree)
        throw InvalidInput("point " + std::to_string(max_point) + " exceeds degree " +
                           std::to_string(degree));

    std::vector<int> images(static_cast<std::size_t>(degree));
    std::iota(images.begin(), images.end(), 0);
    std::vector<bool> used(static_cast<std::size_t>(degree), false);
    for (const auto& cycle : cycles) {
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            const int from = cycle[i] - 1;
            if (used[from]) throw InvalidInput("point " + std::to_string(cycle[i]) + " repeated");
            used[from] = true;
            images[from] = cycle[(i + 1) % cycle.size()] - 1;
        }
    }
    return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<int>(i);
    return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (images_[i] != static_cast<int>(i)) return false;
    return true;
}

std::vector<std::vector<int>> Permutation::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t start = 0; start < images_.size(); ++start) {
        if (seen[start] || images_[start] == static_cast<int>(start)) continue;
        std::vector<int> cycle;
        for (std::size_t x = start; !seen[x]; x = static_cast<std::size_t>(images_[x])) {
            seen[x] = true;
            cycle.push_back(static_cast<int>(x) + 1);
        }
        out.push_back(std::move(cycle));
    }
    return out;
}

std::string Permutation::to_string() const {
    const auto cs = cycles();
    if (cs.empty()) return "()";
    std::string out;
    for (const auto& cycle : cs) {
        out += '(';
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            if (i) out += ' ';
            out += std::to_string(cycle[i]);
        }
        out += ')';
    }
    return out;
}

Permutation compose(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree()) throw InvalidInput("compose: degree mismatch");
    std::vector<int> images(a.images_.size());
    for (std::size_t i = 0; i < images.size(); ++i) images[i] = a.images_[b.images_[i]];
    return Permutation(std::move(images));
}

Permutation conjugate(const Permutation& p, const Permutation& s) {
    if (p.degree() != s.degree()) throw InvalidInput("conjugate: degree mismatch");
    std::vector<int> images(p.images_.size());
    for (std::size_t i = 0; i < images.size(); ++i) images[s.images_[i]] = s.images_[p.images_[i]];
    return Permutation(std::move(images));
}

CycleType cycle_type(const Permutation& p) {
    const auto images = p.images();
    std::vector<bool> seen(images.size(), false);
    std::vector<int> lengths;
    for (std::size_t start = 0; start < images.size(); ++start) {
        if (seen[start]) continue;
        int length = 0;
        for (std::size_t x = start; !seen[x]; x = static_cast<std::size_t>(images[x])) {
            seen[x] = true;
            ++length;
        }
        lengths.push_back(length);
    }
    return CycleType(std::move(lengths));
}

bool is_transitive(std::span<const Permutation> generators) {
    if (generators.empty()) throw InvalidInput("is_transitive: empty generator list");
    const int d = generators.front().degree();
    for (const auto& g : generators)
        if (g.degree() != d) throw InvalidInput("is_transitive: degree mismatch");
    if (d <= 1) return true;

    std::vector<bool> reached(static_cast<std::size_t>(d), false);
    std::vector<int> frontier{0};
    reached[0] = true;
    std::size_t count = 1;
    while (!frontier.empty()) {
        const int x = frontier.back();
        frontier.pop_back();
        for (const auto& g : generators) {
            const int y = g.images()[x];
            if (!reached[y]) {
                reached[y] = true;
                ++count;
                frontier.push_back(y);
            }
        }
    }
    return count == static_cast<std::size_t>(d);
}

std::vector<Permutation> all_permutations(int degree) {
    if (degree < 0) throw InvalidInput("negative permutation degree");
    std::vector<int> images(static_cast<std::size_t>(degree));
    std::iota(images.begin(), images.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation::from_images(images));
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
}

std::vector<Permutation> permutations_of_type(const CycleType& type) {
    std::vector<Permutation> out;
    for (auto& p : all_permutations(type.total()))
        if (cycle_type(p) == type) out.push_back(std::move(p));
    return out;
}

}  // namespace hurwitz
