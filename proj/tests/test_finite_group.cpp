#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>
#include <set>

#include "sphereprod/errors.hpp"
#include "sphereprod/finite_group.hpp"
#include "sphereprod/sampling.hpp"
#include "sphereprod/subgroups.hpp"

using namespace sphereprod;

namespace {

using Key = std::vector<std::uint32_t>;

Key key(const ResidueMatrix& a) { return {a.entries().begin(), a.entries().end()}; }

std::set<Key> keys(const FiniteGroupTable& g) {
    std::set<Key> out;
    for (const auto& x : g.elements()) out.insert(key(x));
    return out;
}

ResidueMatrix rm(std::uint32_t m, std::initializer_list<std::int64_t> e) {
    const auto n = static_cast<std::size_t>(std::lround(std::sqrt(static_cast<double>(e.size()))));
    return ResidueMatrix(n, m, std::vector<std::int64_t>(e));
}

// Every n x n matrix over Z/m with determinant 1, by exhaustive listing.
std::set<Key> brute_sl(std::size_t n, std::uint32_t m) {
    std::set<Key> out;
    const std::size_t cells = n * n;
    std::size_t total = 1;
    for (std::size_t i = 0; i < cells; ++i) total *= m;
    for (std::size_t code = 0; code < total; ++code) {
        std::vector<std::int64_t> v(cells);
        std::size_t c = code;
        for (std::size_t i = 0; i < cells; ++i, c /= m) v[i] = static_cast<std::int64_t>(c % m);
        const ResidueMatrix a(n, m, v);
        if (a.det() == 1 % m) out.insert(key(a));
    }
    return out;
}

// Unions of conjugacy classes closed under multiplication.
std::set<std::set<Key>> brute_normal_subgroups(const FiniteGroupTable& g) {
    const auto& el = g.elements();
    std::vector<std::set<Key>> classes;
    std::set<Key> done;
    for (const auto& x : el) {
        if (done.count(key(x))) continue;
        std::set<Key> cls;
        for (const auto& y : el) cls.insert(key(y * x * y.inverse()));
        done.insert(cls.begin(), cls.end());
        classes.push_back(cls);
    }
    std::map<Key, std::size_t> index;
    for (std::size_t i = 0; i < el.size(); ++i) index[key(el[i])] = i;

    std::set<std::set<Key>> out;
    const std::size_t c = classes.size();
    REQUIRE(c < 20);
    for (std::size_t mask = 0; mask < (1u << c); ++mask) {
        std::set<Key> s;
        for (std::size_t i = 0; i < c; ++i)
            if (mask >> i & 1) s.insert(classes[i].begin(), classes[i].end());
        if (!s.count(key(el[0]))) continue;
        bool closed = true;
        for (const auto& a : s) {
            for (const auto& b : s)
                if (!s.count(key(el[index[a]] * el[index[b]]))) {
                    closed = false;
                    break;
                }
            if (!closed) break;
        }
        if (closed) out.insert(s);
    }
    return out;
}

bool brute_normal(const FiniteGroupTable& h, const FiniteGroupTable& g) {
    for (const auto& x : g.elements())
        for (const auto& y : h.elements())
            if (!h.contains(x * y * x.inverse())) return false;
    return true;
}

FiniteGroupTable sl(std::size_t n, std::uint32_t m) { return enumerate_group(elementary_generators(n, m), n, m); }

}  // namespace

TEST_CASE("enumeration examples") {
    CHECK(enumerate_group({rm(2, {1, 1, 0, 1}), rm(2, {1, 0, 1, 1})}, 2, 2).order() == 6);
    CHECK(sl(3, 2).order() == 168);
    CHECK(enumerate_group({ResidueMatrix::identity(2, 5)}, 2, 5).order() == 1);
    CHECK(sl(2, 3).order() == 24);
    CHECK(sl(2, 4).order() == 48);
    CHECK(sl(2, 5).order() == 120);
}

TEST_CASE("elementary generators reach all of SL_n(Z/m)") {
    for (auto [n, m] : std::vector<std::pair<std::size_t, std::uint32_t>>{{2, 2}, {2, 3}, {2, 4}, {3, 2}}) {
        const auto g = sl(n, m);
        CHECK(keys(g) == brute_sl(n, m));
        if (n == 2) {
            // a second generating set: E12 together with the rotation block
            const auto alt = enumerate_group({reduce_mod(tau_matrix(2), m), rm(m, {1, 1, 0, 1})}, 2, m);
            CHECK(keys(alt) == keys(g));
        }
    }
}

TEST_CASE("tables are closed groups") {
    const auto g = sl(2, 4);
    CHECK(g.elements()[0].is_identity());
    CHECK(keys(g).size() == g.order());
    for (const auto& a : g.elements()) {
        CHECK(g.contains(a.inverse()));
        for (const auto& b : g.elements()) CHECK(g.contains(a * b));
    }
    CHECK(g.index_of(g.elements()[5]) == 5u);
    CHECK_FALSE(g.contains(rm(4, {2, 0, 0, 1})));
}

TEST_CASE("enumeration errors") {
    CHECK_THROWS_AS(enumerate_group({rm(3, {1, 1, 0, 1})}, 3, 3), InputError);
    CHECK_THROWS_AS(enumerate_group({rm(4, {2, 0, 0, 1})}, 2, 4), InputError);
    CHECK_THROWS_AS(enumerate_group({rm(5, {1, 1, 0, 1})}, 2, 3), InputError);
    CHECK_THROWS_AS(enumerate_group(elementary_generators(3, 2), 3, 2, 100), LimitError);
}

TEST_CASE("power subgroup examples") {
    const auto g3 = sl(2, 3);
    const auto trivial = power_subgroup(g3, {ResidueMatrix::identity(2, 3)}, 5);
    CHECK(trivial.order() == 1);
    CHECK(keys(power_subgroup(g3, g3.generators(), 1)) == keys(g3));

    const auto g4 = sl(2, 4);
    const std::vector<ResidueMatrix> kernel_gens{rm(4, {1, 2, 0, 1}), rm(4, {1, 0, 2, 1}), rm(4, {3, 0, 0, 3})};
    const auto kernel = enumerate_group(kernel_gens, 2, 4);
    CHECK(kernel.order() == 8);
    const auto p = power_subgroup(g4, kernel_gens, 2);
    CHECK(p.is_subgroup_of(g4));
    CHECK(is_normal(p, g4).normal);
    CHECK(brute_normal(p, g4));
}

TEST_CASE("normality examples") {
    const auto g4 = sl(2, 4);
    CHECK(is_normal(enumerate_group({ResidueMatrix::identity(2, 4)}, 2, 4), g4).normal);
    const auto kernel = enumerate_group({rm(4, {1, 2, 0, 1}), rm(4, {1, 0, 2, 1}), rm(4, {3, 0, 0, 3})}, 2, 4);
    CHECK(is_normal(kernel, g4).normal);
    CHECK(brute_normal(kernel, g4));
    // kernel of reduction mod 2: exactly the elements congruent to I
    for (const auto& x : g4.elements())
        CHECK(kernel.contains(x) == reduce_mod(x.lift(), 2).is_identity());

    const auto g3 = sl(2, 3);
    const auto h = enumerate_group({rm(3, {1, 1, 0, 1})}, 2, 3);
    CHECK(h.order() == 3);
    const auto r = is_normal(h, g3);
    CHECK_FALSE(r.normal);
    REQUIRE(r.violation.has_value());
    const auto& [x, y] = *r.violation;
    CHECK(g3.contains(x));
    CHECK(h.contains(y));
    CHECK_FALSE(h.contains(x * y * x.inverse()));
    CHECK_FALSE(brute_normal(h, g3));

    CHECK_THROWS_AS(is_normal(g3, h), InputError);
}

TEST_CASE("normal subgroups match the class-union oracle") {
    for (std::uint32_t m : {3u, 4u}) {
        const auto g = sl(2, m);
        const auto found = normal_subgroups(g);
        std::set<std::set<Key>> got;
        for (const auto& n : found) {
            got.insert(keys(n));
            CHECK(g.order() % n.order() == 0);
            CHECK(is_normal(n, g).normal);
        }
        CHECK(got.size() == found.size());
        CHECK(got == brute_normal_subgroups(g));
        for (std::size_t i = 1; i < found.size(); ++i) CHECK(found[i - 1].order() <= found[i].order());
    }
    CHECK(normal_subgroups(sl(2, 3)).size() == 4);
}

TEST_CASE("power subgroups of normal subgroups are normal") {
    for (std::uint32_t m : {3u, 4u}) {
        const auto g = sl(2, m);
        for (const auto& n : normal_subgroups(g))
            for (std::uint64_t t : {2u, 3u}) {
                const auto p = power_subgroup(g, n.generators(), t);
                CHECK(p.is_subgroup_of(n));
                CHECK(n.order() % p.order() == 0);
                CHECK(is_normal(p, g).normal);
                CHECK(brute_normal(p, g));
            }
    }
}

TEST_CASE("Lagrange on mixed subgroups") {
    Rng rng(51);
    const auto g = sl(2, 5);
    for (int s = 0; s < 20; ++s) {
        const auto x = reduce_mod(random_sln(2, rng), 5);
        const auto h = enumerate_group({x}, 2, 5);
        CHECK(g.order() % h.order() == 0);
        CHECK(h.is_subgroup_of(g));
    }
}

TEST_CASE("index check") {
    for (std::size_t n = 2; n <= 4; ++n) {
        const auto r = index_check(n);
        CHECK(r.passed());
        std::size_t fact = 1;
        for (std::size_t i = 2; i <= n; ++i) fact *= i;
        CHECK(r.permutation_group_order == fact);
        CHECK(r.samples_checked > 0);
    }
    const auto two = index_check(2);
    REQUIRE(two.representatives.size() == 2);
    CHECK(two.representatives[0].is_identity());
    CHECK(two.representatives[1] == tau_matrix(2));
    CHECK(index_check(3).sl_order == 168);
    CHECK_THROWS_AS(index_check(5), InputError);
}
