#include "sphereprod/finite_group.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "sphereprod/errors.hpp"
#include "sphereprod/permutation.hpp"
#include "sphereprod/sampling.hpp"
#include "sphereprod/subgroups.hpp"

namespace sphereprod {

std::optional<std::size_t> FiniteGroupTable::index_of(const ResidueMatrix& x) const {
    auto it = index_.find(x);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

bool FiniteGroupTable::is_subgroup_of(const FiniteGroupTable& g) const {
    if (n_ != g.n_ || m_ != g.m_) return false;
    return std::all_of(elements_.begin(), elements_.end(), [&](const auto& x) { return g.contains(x); });
}

FiniteGroupTable enumerate_group(const std::vector<ResidueMatrix>& generators, std::size_t n, std::uint32_t m,
                                 std::size_t cap) {
    FiniteGroupTable table;
    table.n_ = n;
    table.m_ = m;
    std::vector<ResidueMatrix> steps;
    for (const auto& g : generators) {
        if (g.dim() != n || g.modulus() != m) throw InputError("generator shape or modulus mismatch");
        if (!g.has_unit_det()) throw InputError("generator determinant is not a unit");
        table.generators_.push_back(g);
        steps.push_back(g);
        steps.push_back(g.inverse());
    }
    auto id = ResidueMatrix::identity(n, m);
    table.index_.emplace(id, 0);
    table.elements_.push_back(id);
    for (std::size_t head = 0; head < table.elements_.size(); ++head) {
        for (const auto& s : steps) {
            ResidueMatrix next = table.elements_[head] * s;
            if (table.index_.count(next)) continue;
            if (table.elements_.size() >= cap) throw LimitError("group enumeration exceeded the size cap");
            table.index_.emplace(next, table.elements_.size());
            table.elements_.push_back(std::move(next));
        }
    }
    return table;
}

std::vector<ResidueMatrix> elementary_generators(std::size_t n, std::uint32_t m) {
    std::vector<ResidueMatrix> out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            std::vector<std::int64_t> e(n * n, 0);
            for (std::size_t d = 0; d < n; ++d) e[d * n + d] = 1;
            e[i * n + j] = 1;
            out.emplace_back(n, m, std::move(e));
        }
    return out;
}

FiniteGroupTable power_subgroup(const FiniteGroupTable& g, const std::vector<ResidueMatrix>& n_generators,
                                std::uint64_t t, std::size_t cap) {
    if (t == 0) throw InputError("power exponent must be positive");
    for (const auto& x : n_generators)
        if (!g.contains(x)) throw InputError("subgroup generator lies outside G");
    const auto sub = enumerate_group(n_generators, g.dim(), g.modulus(), cap);
    std::vector<ResidueMatrix> powers;
    std::unordered_map<ResidueMatrix, bool, ResidueMatrixHash> seen;
    for (const auto& a : sub.elements()) {
        auto p = a.pow(t);
        if (seen.emplace(p, true).second) powers.push_back(std::move(p));
    }
    return enumerate_group(powers, g.dim(), g.modulus(), cap);
}

NormalityResult is_normal(const FiniteGroupTable& h, const FiniteGroupTable& g) {
    if (!h.is_subgroup_of(g)) throw InputError("H is not contained in G");
    for (const auto& x : g.generators()) {
        const auto x_inv = x.inverse();
        for (const auto& y : h.generators())
            if (!h.contains(x * y * x_inv)) return {false, std::make_pair(x, y)};
    }
    return {true, std::nullopt};
}

std::vector<FiniteGroupTable> normal_subgroups(const FiniteGroupTable& g) {
    using Key = std::vector<std::size_t>;
    auto key_of = [&](const FiniteGroupTable& sub) {
        Key k;
        for (const auto& x : sub.elements()) k.push_back(*g.index_of(x));
        std::sort(k.begin(), k.end());
        return k;
    };
    std::vector<FiniteGroupTable> found;
    std::set<Key> keys;
    auto add = [&](FiniteGroupTable sub) {
        if (keys.insert(key_of(sub)).second) found.push_back(std::move(sub));
    };

    add(enumerate_group({}, g.dim(), g.modulus()));
    for (const auto& x : g.elements()) {
        std::vector<ResidueMatrix> conjugacy_class;
        std::unordered_map<ResidueMatrix, bool, ResidueMatrixHash> seen;
        for (const auto& y : g.elements()) {
            auto c = y * x * y.inverse();
            if (seen.emplace(c, true).second) conjugacy_class.push_back(std::move(c));
        }
        add(enumerate_group(conjugacy_class, g.dim(), g.modulus()));
    }
    // close under joins
    for (bool grew = true; grew;) {
        grew = false;
        const std::size_t count = found.size();
        for (std::size_t a = 0; a < count; ++a)
            for (std::size_t b = a + 1; b < count; ++b) {
                auto gens = found[a].generators();
                gens.insert(gens.end(), found[b].generators().begin(), found[b].generators().end());
                const std::size_t before = found.size();
                add(enumerate_group(gens, g.dim(), g.modulus()));
                grew = grew || found.size() != before;
            }
    }
    std::stable_sort(found.begin(), found.end(),
                     [](const auto& x, const auto& y) { return x.order() < y.order(); });
    return found;
}

namespace {

// Pairwise row pre-dots of the 0/1 representative, all even.
bool even_pre_dots_mod2(const ResidueMatrix& x) {
    const std::size_t n = x.dim();
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t l = j + 1; l < n; ++l)
            for (std::size_t s = 0; s < n; ++s)
                if ((x(j, s) & x(l, s)) != 0) return false;
    return true;
}

}  // namespace

IndexReport index_check(std::size_t n, std::size_t samples, std::uint64_t seed) {
    if (n < 2 || n > 4) throw InputError("index_check supports n in {2, 3, 4}");
    IndexReport report;
    report.n = n;
    report.factorial = 1;
    for (std::size_t i = 2; i <= n; ++i) report.factorial *= i;

    std::vector<ResidueMatrix> transpositions;
    for (std::size_t i = 1; i < n; ++i)
        transpositions.push_back(reduce_mod(Permutation::transposition(n, i, i + 1).matrix(), 2));
    const auto perms = enumerate_group(transpositions, n, 2);
    report.permutation_group_order = perms.order();

    const IntMatrix tau = tau_matrix(n);
    std::vector<IntMatrix> even_reps, odd_reps;
    for (const auto& sigma : all_permutations(n)) {
        if (!sigma.is_even()) continue;
        even_reps.push_back(sigma.matrix());
        odd_reps.push_back(tau * sigma.matrix());
    }
    report.representatives = even_reps;
    report.representatives.insert(report.representatives.end(), odd_reps.begin(), odd_reps.end());

    report.representatives_in_w2 = std::all_of(report.representatives.begin(), report.representatives.end(),
                                               [](const IntMatrix& r) { return in_W2(r); });
    std::unordered_map<ResidueMatrix, bool, ResidueMatrixHash> images;
    for (const auto& r : report.representatives) images.emplace(reduce_mod(r, 2), true);
    report.representatives_distinct_mod2 = images.size() == report.representatives.size();
    report.representatives_cover_permutations =
        images.size() == perms.order() &&
        std::all_of(images.begin(), images.end(), [&](const auto& kv) { return perms.contains(kv.first); });

    // Pre-dot parity depends only on residues mod 2, and every class of
    // SL_n(Z/2) lifts to SL_n(Z), so this filter is exactly R(W_n(2)).
    const auto sl = enumerate_group(elementary_generators(n, 2), n, 2);
    report.sl_order = sl.order();
    std::size_t image_size = 0;
    bool image_ok = true;
    for (const auto& x : sl.elements())
        if (even_pre_dots_mod2(x)) {
            ++image_size;
            image_ok = image_ok && perms.contains(x);
        }
    report.image_is_permutation_group = image_ok && image_size == perms.order();

    Rng rng(seed);
    bool samples_ok = true;
    for (std::size_t k = 0; k < samples; ++k) {
        const IntMatrix a = random_sln(n, rng);
        if (!in_W2(a)) continue;
        ++report.samples_checked;
        samples_ok = samples_ok && perms.contains(reduce_mod(a, 2)) && coset_certificate(a).reconstruct() == a;
    }
    report.samples_in_image = samples_ok;
    return report;
}

}  // namespace sphereprod
