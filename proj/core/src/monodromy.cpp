#include "hurwitz/monodromy.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cctype>
#include <charconv>
#include <exception>
#include <map>
#include <thread>

#include "hurwitz/errors.hpp"
#include "hurwitz/formulas.hpp"

namespace hurwitz {

void MonodromyProblem::validate() const {
    if (degree < 1) throw InvalidInput("monodromy degree must be >= 1");
    if (degree > kMaxMonodromyDegree)
        throw InvalidInput("monodromy degree " + std::to_string(degree) + " exceeds supported maximum " +
                           std::to_string(kMaxMonodromyDegree));
    if (profiles.empty()) throw InvalidInput("monodromy problem has no branch profiles");
    for (const auto& p : profiles)
        if (p.total() != degree)
            throw InvalidInput("profile " + p.to_string() + " is not a partition of " +
                               std::to_string(degree));
}

std::vector<CycleType> parse_profiles(std::string_view text) {
    std::vector<CycleType> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(';', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view item = text.substr(start, end - start);

        std::size_t repeat = 1;
        if (auto x = item.find_first_of("xX"); x != std::string_view::npos) {
            std::string count;
            for (char c : item.substr(x + 1))
                if (!std::isspace(static_cast<unsigned char>(c))) count += c;
            auto [ptr, ec] = std::from_chars(count.data(), count.data() + count.size(), repeat);
            if (count.empty() || ec != std::errc() || ptr != count.data() + count.size() || repeat == 0)
                throw InvalidInput("bad repetition count in '" + std::string(item) + "'");
            item = item.substr(0, x);
        }
        const Partition p = Partition::parse(item);
        out.insert(out.end(), repeat, p);
        start = end + 1;
    }
    return out;
}

MonodromyProblem MonodromyProblem::parse(std::string_view text) {
    MonodromyProblem problem;
    bool have_degree = false, have_profiles = false;
    std::size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        std::size_t end = pos;
        while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
        if (end == pos) break;
        const std::string_view token = text.substr(pos, end - pos);
        pos = end;

        const auto eq = token.find('=');
        if (eq == std::string_view::npos) throw InvalidInput("expected key=value, got '" + std::string(token) + "'");
        const std::string_view key = token.substr(0, eq);
        const std::string_view value = token.substr(eq + 1);
        if (key == "d" || key == "degree") {
            auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), problem.degree);
            if (ec != std::errc() || ptr != value.data() + value.size())
                throw InvalidInput("bad degree '" + std::string(value) + "'");
            have_degree = true;
        } else if (key == "profiles") {
            problem.profiles = parse_profiles(value);
            have_profiles = true;
        } else {
            throw InvalidInput("unknown key '" + std::string(key) + "'");
        }
    }
    if (!have_degree || !have_profiles) throw InvalidInput("inline problem needs d=... and profiles=...");
    return problem;
}

std::optional<std::int64_t> expected_genus(const MonodromyProblem& problem) {
    return riemann_hurwitz_genus(problem.degree, problem.profiles);
}

Permutation tuple_product(std::span<const Permutation> tuple) {
    if (tuple.empty()) throw InvalidInput("product of an empty tuple");
    Permutation acc = tuple.front();
    for (std::size_t i = 1; i < tuple.size(); ++i) acc = compose(acc, tuple[i]);
    return acc;
}

namespace {

constexpr int kMax = kMaxMonodromyDegree;
using Img = std::array<std::uint8_t, kMax>;            // unused tail entries stay 0
using Signature = std::array<std::uint8_t, kMax + 1>;  // count of cycles of each length

Img to_img(const Permutation& p) {
    Img out{};
    for (int i = 0; i < p.degree(); ++i) out[i] = static_cast<std::uint8_t>(p.images()[i]);
    return out;
}

Permutation to_permutation(const Img& img, int d) {
    std::vector<int> images(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) images[i] = img[i] + 1;
    return Permutation::from_images(images);
}

Img img_compose(const Img& a, const Img& b, int d) {
    Img r{};
    for (int i = 0; i < d; ++i) r[i] = a[b[i]];
    return r;
}

Img img_inverse(const Img& a, int d) {
    Img r{};
    for (int i = 0; i < d; ++i) r[a[i]] = static_cast<std::uint8_t>(i);
    return r;
}

Signature signature_of(const Img& p, int d) {
    Signature sig{};
    std::array<bool, kMax> seen{};
    for (int s = 0; s < d; ++s) {
        if (seen[s]) continue;
        int len = 0;
        for (int x = s; !seen[x]; x = p[x]) {
            seen[x] = true;
            ++len;
        }
        ++sig[len];
    }
    return sig;
}

Signature signature_of(const Partition& p) {
    Signature sig{};
    for (int part : p.parts()) ++sig[part];
    return sig;
}

struct UnionFind {
    std::array<std::uint8_t, kMax> parent{};
    int components = 0;

    explicit UnionFind(int d) : components(d) {
        for (int i = 0; i < d; ++i) parent[i] = static_cast<std::uint8_t>(i);
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) {
            parent[std::max(a, b)] = static_cast<std::uint8_t>(std::min(a, b));
            --components;
        }
    }
    void absorb(const Img& p, int d) {
        for (int i = 0; i < d; ++i) unite(i, p[i]);
    }
};

class Canonicalizer {
public:
    explicit Canonicalizer(int d) : d_(d) {
        for (const auto& s : all_permutations(d)) relabellings_.push_back(to_img(s));
    }

    std::vector<Img> canonical(const std::vector<Img>& tuple, std::uint64_t& stabilizer) const {
        std::vector<Img> best = tuple;
        std::vector<Img> current(tuple.size());
        stabilizer = 0;
        for (const Img& s : relabellings_) {
            int order = 0;  // current vs best, decided at the first differing entry
            bool fixes = true;
            for (std::size_t k = 0; k < tuple.size(); ++k) {
                Img& c = current[k];
                c = Img{};
                for (int i = 0; i < d_; ++i) c[s[i]] = s[tuple[k][i]];
                if (order == 0) order = c < best[k] ? -1 : (best[k] < c ? 1 : 0);
                if (fixes && c != tuple[k]) fixes = false;
                if (order > 0 && !fixes) break;
            }
            if (fixes) ++stabilizer;
            if (order < 0) best = current;
        }
        return best;
    }

private:
    int d_;
    std::vector<Img> relabellings_;
};

struct SharedState {
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> abort{false};
    std::uint64_t limit = 0;
};

class Searcher {
public:
    Searcher(int d, const std::vector<std::vector<Img>>& candidates,
             const std::vector<Signature>& targets, const std::vector<int>& budget_after,
             const Canonicalizer& canon, SharedState& shared)
        : d_(d), n_(static_cast<int>(targets.size())), candidates_(candidates), targets_(targets),
          budget_after_(budget_after), canon_(canon), shared_(shared), tuple_(targets.size()) {}

    // Explores the subtree with t_1 fixed. Candidates at the second slot are
    // restricted to indices congruent to `offset` modulo `stride`.
    void run(std::size_t offset, std::size_t stride) {
        offset_ = offset;
        stride_ = stride;
        const Img& first = candidates_[0].front();
        tuple_[0] = first;
        UnionFind uf(d_);
        uf.absorb(first, d_);
        if (uf.components - 1 > budget_after_[0]) return;
        search(1, first, uf);
    }

    std::map<std::vector<Img>, std::uint64_t>& found() { return found_; }

private:
    void visit() {
        if (shared_.abort.load(std::memory_order_relaxed)) throw ResourceLimit("search aborted");
        if (shared_.nodes.fetch_add(1, std::memory_order_relaxed) + 1 > shared_.limit) {
            shared_.abort.store(true);
            throw ResourceLimit("monodromy search exceeded node limit of " +
                                std::to_string(shared_.limit));
        }
    }

    void search(int slot, const Img& prefix, const UnionFind& uf) {
        if (slot == n_ - 1) {
            visit();
            const Img last = img_inverse(prefix, d_);
            if (signature_of(last, d_) != targets_[slot]) return;
            UnionFind closed = uf;
            closed.absorb(last, d_);
            if (closed.components != 1) return;
            tuple_[slot] = last;
            std::uint64_t stabilizer = 0;
            auto rep = canon_.canonical(tuple_, stabilizer);
            found_.try_emplace(std::move(rep), stabilizer);
            return;
        }
        const auto& options = candidates_[slot];
        const bool split = slot == 1;
        for (std::size_t i = split ? offset_ : 0; i < options.size(); i += split ? stride_ : 1) {
            visit();
            const Img& cand = options[i];
            UnionFind next = uf;
            next.absorb(cand, d_);
            if (next.components - 1 > budget_after_[slot]) continue;
            tuple_[slot] = cand;
            search(slot + 1, img_compose(prefix, cand, d_), next);
        }
    }

    int d_;
    int n_;
    const std::vector<std::vector<Img>>& candidates_;
    const std::vector<Signature>& targets_;
    const std::vector<int>& budget_after_;
    const Canonicalizer& canon_;
    SharedState& shared_;
    std::vector<Img> tuple_;
    std::map<std::vector<Img>, std::uint64_t> found_;
    std::size_t offset_ = 0;
    std::size_t stride_ = 1;
};

std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

}  // namespace

std::vector<Permutation> canonical_form(std::span<const Permutation> tuple,
                                        std::uint64_t* stabilizer_order) {
    if (tuple.empty()) throw InvalidInput("canonical_form: empty tuple");
    const int d = tuple.front().degree();
    if (d > kMaxMonodromyDegree) throw InvalidInput("canonical_form: degree too large");
    std::vector<Img> imgs;
    for (const auto& p : tuple) {
        if (p.degree() != d) throw InvalidInput("canonical_form: degree mismatch");
        imgs.push_back(to_img(p));
    }
    std::uint64_t stabilizer = 0;
    const auto best = Canonicalizer(d).canonical(imgs, stabilizer);
    if (stabilizer_order) *stabilizer_order = stabilizer;
    std::vector<Permutation> out;
    for (const auto& img : best) out.push_back(to_permutation(img, d));
    return out;
}

EnumerationResult enumerate_classes(const MonodromyProblem& problem, const EnumerationOptions& options) {
    problem.validate();
    const int d = problem.degree;
    const int n = static_cast<int>(problem.profiles.size());
    EnumerationResult result;
    result.weighted_count = 0;

    std::vector<int> rank(n);
    int total_rank = 0;
    for (int i = 0; i < n; ++i) {
        rank[i] = d - static_cast<int>(problem.profiles[i].length());
        total_rank += rank[i];
    }
    // A product of permutations with odd total rank is odd, never the identity.
    if (total_rank % 2 != 0) return result;

    std::vector<std::uint64_t> stabilizers;
    std::vector<std::vector<Img>> reps;

    if (n == 1) {
        // The single entry must be the identity and generate a transitive group.
        if (d == 1) {
            reps.push_back({to_img(Permutation::identity(1))});
            stabilizers.push_back(1);
        }
        result.nodes_visited = 1;
    } else {
        std::vector<std::vector<Img>> candidates(n);
        std::vector<Signature> targets(n);
        for (int i = 0; i < n; ++i) {
            targets[i] = signature_of(problem.profiles[i]);
            if (i == n - 1) continue;
            for (const auto& p : permutations_of_type(problem.profiles[i]))
                candidates[i].push_back(to_img(p));
        }
        std::vector<int> budget_after(n, 0);
        for (int i = n - 2; i >= 0; --i) budget_after[i] = budget_after[i + 1] + rank[i + 1];

        const Canonicalizer canon(d);
        SharedState shared;
        shared.limit = options.node_limit;

        std::size_t jobs = std::max(1u, options.jobs);
        if (n < 3) jobs = 1;
        jobs = std::min(jobs, n >= 3 ? candidates[1].size() : std::size_t{1});
        jobs = std::max<std::size_t>(jobs, 1);

        std::vector<Searcher> searchers;
        searchers.reserve(jobs);
        for (std::size_t w = 0; w < jobs; ++w)
            searchers.emplace_back(d, candidates, targets, budget_after, canon, shared);

        if (jobs == 1) {
            searchers[0].run(0, 1);
        } else {
            std::vector<std::exception_ptr> errors(jobs);
            std::vector<std::thread> workers;
            for (std::size_t w = 0; w < jobs; ++w) {
                workers.emplace_back([&, w] {
                    try {
                        searchers[w].run(w, jobs);
                    } catch (...) {
                        shared.abort.store(true);
                        errors[w] = std::current_exception();
                    }
                });
            }
            for (auto& t : workers) t.join();
            // Prefer the original limit error over the secondary "aborted" ones.
            for (const auto& e : errors) {
                if (!e) continue;
                try {
                    std::rethrow_exception(e);
                } catch (const ResourceLimit& err) {
                    if (std::string(err.what()) != "search aborted") throw;
                }
            }
            for (const auto& e : errors)
                if (e) std::rethrow_exception(e);
        }

        std::map<std::vector<Img>, std::uint64_t> merged;
        for (auto& s : searchers) merged.merge(s.found());
        for (auto& [rep, stab] : merged) {
            reps.push_back(rep);
            stabilizers.push_back(stab);
        }
        result.nodes_visited = shared.nodes.load();
    }

    const std::uint64_t group_order = factorial(d);
    for (std::size_t i = 0; i < reps.size(); ++i) {
        MonodromyClass cls;
        for (const auto& img : reps[i]) cls.representative.push_back(to_permutation(img, d));
        cls.stabilizer_order = stabilizers[i];
        cls.class_size = group_order / stabilizers[i];
        result.tuple_count += cls.class_size;
        result.weighted_count += BigRational(1, static_cast<unsigned long>(stabilizers[i]));
        result.classes.push_back(std::move(cls));
    }
    result.weighted_count.canonicalize();
    return result;
}

std::size_t count_classes(const MonodromyProblem& problem, const EnumerationOptions& options) {
    return enumerate_classes(problem, options).classes.size();
}

}  // namespace hurwitz
