#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <deque>
#include <map>

#include "sphereprod/decompose.hpp"
#include "sphereprod/errors.hpp"
#include "sphereprod/generators.hpp"
#include "sphereprod/rewrite.hpp"
#include "sphereprod/sampling.hpp"
#include "sphereprod/subgroups.hpp"

using namespace sphereprod;

namespace {

IntMatrix diag(std::initializer_list<long> d) {
    const std::size_t n = d.size();
    std::vector<Integer> v(n * n);
    std::size_t i = 0;
    for (long x : d) v[i * n + i] = x, ++i;
    return IntMatrix(n, std::move(v));
}

// I + t e_ij built entrywise, independent of the generator code.
IntMatrix elementary(std::size_t n, std::size_t i, std::size_t j, long t) {
    std::vector<Integer> v(n * n);
    for (std::size_t r = 0; r < n; ++r) v[r * n + r] = 1;
    v[(i - 1) * n + (j - 1)] += t;
    return IntMatrix(n, std::move(v));
}

IntMatrix flip(std::size_t n, std::size_t i, std::size_t k) {
    std::vector<Integer> v(n * n);
    for (std::size_t r = 0; r < n; ++r) v[r * n + r] = (r + 1 == i || r + 1 == k) ? -1 : 1;
    return IntMatrix(n, std::move(v));
}

GeneratorWord word(std::size_t n, std::initializer_list<Letter> letters) { return GeneratorWord(n, letters); }

// Shortest-first search over {E12^+-2, E21^+-2, NEG} by matrix, up to max_len letters.
bool bfs_reaches(const IntMatrix& target, std::size_t max_len) {
    const std::vector<IntMatrix> steps{elementary(2, 1, 2, 2), elementary(2, 1, 2, -2), elementary(2, 2, 1, 2),
                                       elementary(2, 2, 1, -2), -IntMatrix::identity(2)};
    std::vector<IntMatrix> frontier{IntMatrix::identity(2)};
    std::vector<IntMatrix> seen = frontier;
    for (std::size_t len = 0; len <= max_len; ++len) {
        for (const auto& m : frontier)
            if (m == target) return true;
        std::vector<IntMatrix> next;
        for (const auto& m : frontier)
            for (const auto& s : steps) {
                IntMatrix x = m * s;
                if (std::find(seen.begin(), seen.end(), x) == seen.end()) {
                    seen.push_back(x);
                    next.push_back(std::move(x));
                }
            }
        frontier = std::move(next);
    }
    return false;
}

std::vector<Letter> conjugators(std::size_t n) {
    std::vector<Letter> out;
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j)
            if (i != j)
                for (long s : {1, -1}) out.push_back({gen::E{i, j}, s});
    return out;
}

std::vector<Letter> targets(std::size_t n) {
    std::vector<Letter> out;
    for (std::size_t k = 1; k <= n; ++k)
        for (std::size_t l = 1; l <= n; ++l)
            if (k != l)
                for (long s : {2, -2}) out.push_back({gen::E{k, l}, s});
    for (std::size_t k = 1; k < n; ++k) out.push_back({gen::J{k}, 1});
    return out;
}

}  // namespace

TEST_CASE("symbol matrices") {
    CHECK(symbol_matrix(gen::E{1, 2}, 2) == IntMatrix{{1, 1}, {0, 1}});
    CHECK(symbol_matrix(gen::J{1}, 3) == diag({-1, -1, 1}));
    CHECK(symbol_matrix(gen::Tau{}, 3) == IntMatrix{{0, -1, 0}, {1, 0, 0}, {0, 0, 1}});
    CHECK(symbol_matrix(gen::NegI{}, 2) == -IntMatrix::identity(2));
    CHECK(symbol_matrix(gen::PermEven{Permutation::from_cycles(3, "(1 2 3)")}, 3) ==
          Permutation::from_cycles(3, "(1 2 3)").matrix());
    CHECK_THROWS_AS(symbol_matrix(gen::E{1, 1}, 3), InputError);
    CHECK_THROWS_AS(symbol_matrix(gen::E{1, 4}, 3), InputError);
    CHECK_THROWS_AS(symbol_matrix(gen::J{3}, 3), InputError);
    CHECK_THROWS_AS(symbol_matrix(gen::NegI{}, 3), InputError);
    CHECK_THROWS_AS(symbol_matrix(gen::PermEven{Permutation::from_cycles(3, "(1 2)")}, 3), InputError);
    for (std::size_t n = 2; n <= 6; ++n)
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t k = 1; k <= n; ++k)
                if (i != k) CHECK(symbol_matrix(gen::JRange{i, k}, n) == flip(n, i, k));
}

TEST_CASE("letter powers") {
    for (long t = -5; t <= 5; ++t) CHECK(letter_matrix({gen::E{2, 3}, t}, 4) == elementary(4, 2, 3, t));
    CHECK(letter_matrix({gen::Tau{}, 2}, 3) == diag({-1, -1, 1}));
    CHECK(letter_matrix({gen::Tau{}, -1}, 3) == inverse_unimodular(symbol_matrix(gen::Tau{}, 3)));
    CHECK(letter_matrix({gen::J{2}, 2}, 3).is_identity());
    const auto c = Permutation::from_cycles(3, "(1 2 3)");
    CHECK(letter_matrix({gen::PermEven{c}, -1}, 3) == c.inverse().matrix());
}

TEST_CASE("word evaluation examples") {
    CHECK(word_to_matrix(GeneratorWord(3)).is_identity());
    CHECK(word_to_matrix(word(2, {{gen::E{1, 2}, 2}})) == IntMatrix{{1, 2}, {0, 1}});
    CHECK(word_to_matrix(word(3, {{gen::J{1}, 1}, {gen::J{2}, 1}})) == diag({-1, 1, -1}));
    CHECK(word_to_matrix(word(2, {{gen::E{2, 1}, 1}, {gen::E{1, 2}, -1}, {gen::E{2, 1}, 1}})) ==
          IntMatrix{{0, -1}, {1, 0}});
}

TEST_CASE("J range expansion") {
    CHECK(jrange_expand(1, 2, 3) == word(3, {{gen::J{1}, 1}}));
    CHECK(jrange_expand(1, 3, 3) == word(3, {{gen::J{1}, 1}, {gen::J{2}, 1}}));
    CHECK(jrange_expand(2, 1, 3) == jrange_expand(1, 2, 3));
    for (std::size_t n = 2; n <= 7; ++n)
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t k = i + 1; k <= n; ++k) {
                const auto w = jrange_expand(i, k, n);
                CHECK(w.size() == k - i);
                CHECK(word_to_matrix(w) == flip(n, i, k));
            }
    CHECK_THROWS_AS(jrange_expand(2, 2, 3), InputError);
}

TEST_CASE("append merges and cancels") {
    GeneratorWord w(3);
    w.append(gen::E{1, 2}, 2).append(gen::E{1, 2}, 3);
    CHECK(w.size() == 1);
    CHECK(w.letters()[0].exponent == 5);
    w.append(gen::E{1, 2}, -5);
    CHECK(w.empty());
    w.append(gen::J{1}).append(gen::J{1});
    CHECK(w.empty());
    w.append(gen::J{2}, 3);
    CHECK(w.letters()[0].exponent == 1);
    w.append(gen::E{2, 3}, 0);
    CHECK(w.size() == 1);
}

TEST_CASE("inverse words") {
    Rng rng(31);
    for (std::size_t n = 2; n <= 5; ++n)
        for (int s = 0; s < 50; ++s) {
            const auto w = random_elementary_word(n, 25, rng);
            GeneratorWord both = w;
            both.append(w.inverse());
            CHECK(both.empty());
            CHECK((word_to_matrix(w) * word_to_matrix(w.inverse())).is_identity());
        }
    GeneratorWord t(3);
    t.append(gen::Tau{}).append(gen::PermEven{Permutation::from_cycles(3, "(1 2 3)")}).append(gen::J{1});
    CHECK((word_to_matrix(t) * word_to_matrix(t.inverse())).is_identity());
}

TEST_CASE("serialization roundtrip") {
    CHECK(to_string(GeneratorWord(2)) == "I");
    CHECK(to_string(word(2, {{gen::E{1, 2}, 1}})) == "E(1,2)^1");
    CHECK(to_string(word(3, {{gen::Tau{}, 1}, {gen::J{2}, 1}, {gen::JRange{1, 3}, 1}})) == "TAU J(2) JR(1,3)");
    CHECK(to_string(word(2, {{gen::NegI{}, 1}, {gen::E{2, 1}, -4}})) == "NEG E(2,1)^-4");
    CHECK(to_string(word(3, {{gen::PermEven{Permutation::from_cycles(3, "(1 2 3)")}, 1}})) == "P((1 2 3))");
    Rng rng(32);
    for (std::size_t n = 2; n <= 5; ++n)
        for (int s = 0; s < 30; ++s) {
            const auto w = random_gamma_word(n, 20, rng);
            CHECK(parse_word(to_string(w), n) == w);
            const auto v = random_elementary_word(n, 20, rng);
            CHECK(parse_word(to_string(v), n) == v);
        }
    const auto mixed = parse_word("TAU^3 NEG E(1,2)^4", 2);
    CHECK(mixed.size() == 3);
    CHECK(parse_word("I", 3).empty());
    CHECK_THROWS_AS(parse_word("E(1,2", 2), InputError);
    CHECK_THROWS_AS(parse_word("E(1,2)^x", 2), InputError);
    CHECK_THROWS_AS(parse_word("Q(1)", 2), InputError);
    CHECK_THROWS_AS(parse_word("E(1,5)^1", 3), InputError);
}

TEST_CASE("gamma word tagging") {
    CHECK(is_gamma_word(word(3, {{gen::E{1, 2}, 2}, {gen::J{1}, 1}, {gen::JRange{1, 3}, 1}})));
    CHECK_FALSE(is_gamma_word(word(3, {{gen::E{1, 2}, 1}})));
    CHECK_FALSE(is_gamma_word(word(3, {{gen::Tau{}, 1}})));
    CHECK(is_gamma_word(word(2, {{gen::NegI{}, 1}})));
    Rng rng(33);
    for (std::size_t n = 2; n <= 5; ++n)
        for (int s = 0; s < 50; ++s) CHECK(in_congruence(word_to_matrix(random_gamma_word(n, 15, rng)), 2));
}

TEST_CASE("rewrite examples") {
    const auto a = conjugate_rewrite({gen::E{1, 2}, 1}, {gen::E{3, 4}, 2}, 4);
    CHECK(a.word == word(4, {{gen::E{3, 4}, 2}}));
    CHECK(a.which == RewriteCase{1, 1});

    const auto b = conjugate_rewrite({gen::E{1, 3}, 1}, {gen::E{2, 1}, 2}, 3);
    CHECK(b.word == word(3, {{gen::E{2, 1}, 2}, {gen::E{2, 3}, -2}}));
    CHECK(b.which == RewriteCase{1, 2});

    const auto c = conjugate_rewrite({gen::E{1, 2}, 1}, {gen::E{2, 1}, 2}, 2);
    CHECK(word_to_matrix(c.word) == IntMatrix{{3, -2}, {2, -1}});
    CHECK(c.which == RewriteCase{1, 4});
    CHECK_FALSE(c.corrected);
}

TEST_CASE("rewrite tables are sound for n = 3, 4, 5") {
    for (std::size_t n = 3; n <= 5; ++n)
        for (const auto& e : conjugators(n))
            for (const auto& g : targets(n)) {
                const auto* ce = std::get_if<gen::E>(&e.symbol);
                const IntMatrix em = elementary(n, ce->i, ce->j, e.exponent.get_si());
                const IntMatrix gm = std::holds_alternative<gen::J>(g.symbol)
                                         ? flip(n, std::get<gen::J>(g.symbol).i, std::get<gen::J>(g.symbol).i + 1)
                                         : elementary(n, std::get<gen::E>(g.symbol).i, std::get<gen::E>(g.symbol).j,
                                                      g.exponent.get_si());
                const IntMatrix expected = em * gm * inverse_unimodular(em);
                const auto r = conjugate_rewrite(e, g, n);
                CHECK(word_to_matrix(r.word) == expected);
                CHECK(word_to_matrix(table_word(e, g, n)) == expected);
                CHECK(is_gamma_word(r.word));
                CHECK_FALSE(r.corrected);
                const int table = (std::holds_alternative<gen::J>(g.symbol) ? 2 : 0) + (e.exponent > 0 ? 1 : 2);
                CHECK(r.which.table == table);
            }
}

TEST_CASE("case selection for E-targets") {
    // j != k, i != l / j != k, i = l / j = k, i != l / j = k, i = l
    CHECK(rewrite_case({gen::E{1, 2}, 1}, {gen::E{3, 4}, 2}, 4).index == 1);
    CHECK(rewrite_case({gen::E{1, 2}, 1}, {gen::E{3, 1}, 2}, 4).index == 2);
    CHECK(rewrite_case({gen::E{1, 2}, 1}, {gen::E{2, 3}, 2}, 4).index == 3);
    CHECK(rewrite_case({gen::E{1, 2}, -1}, {gen::E{2, 1}, -2}, 4).index == 4);
    CHECK_THROWS_AS(rewrite_case({gen::E{1, 2}, 2}, {gen::E{2, 1}, 2}, 3), InputError);
    CHECK_THROWS_AS(rewrite_case({gen::E{1, 2}, 1}, {gen::E{2, 1}, 1}, 3), InputError);
}

TEST_CASE("verify_identities covers all families") {
    for (std::size_t n = 3; n <= 5; ++n) {
        const auto reports = verify_identities(n);
        REQUIRE(reports.size() == 16);
        std::size_t total = 0;
        for (const auto& f : reports) {
            CHECK(f.verified());
            // with n = 3 no E(i,j) avoids both k and k+1
            const bool vacuous = n == 3 && f.which.table >= 3 && f.which.index == 1;
            CHECK((f.tuples_checked == 0) == vacuous);
            total += f.tuples_checked;
        }
        // E(i,j)^{+-1} against every E(k,l)^2 and J(k)
        const std::size_t pairs = n * (n - 1);
        CHECK(total == 2 * pairs * (pairs + (n - 1)));
    }
}

TEST_CASE("fallback search") {
    const auto w = search_gamma_word(elementary(3, 1, 2, 2) * flip(3, 1, 2), 3);
    REQUIRE(w.has_value());
    CHECK(word_to_matrix(*w) == elementary(3, 1, 2, 2) * flip(3, 1, 2));
    CHECK_FALSE(search_gamma_word(elementary(3, 1, 2, 1), 2).has_value());
    const auto id = search_gamma_word(IntMatrix::identity(3), 3);
    REQUIRE(id.has_value());
    CHECK(id->empty());
}

TEST_CASE("decompose_gamma2 examples") {
    CHECK(decompose_gamma2(IntMatrix{{1, 2}, {0, 1}}) == word(2, {{gen::E{1, 2}, 2}}));
    CHECK(decompose_gamma2(-IntMatrix::identity(2)) == word(2, {{gen::NegI{}, 1}}));
    CHECK(decompose_gamma2(IntMatrix::identity(2)).empty());
    const IntMatrix a{{3, 2}, {4, 3}};
    const auto w = decompose_gamma2(a);
    CHECK(word_to_matrix(w) == a);
    CHECK(to_string(w) == "NEG E(2,1)^2 E(1,2)^-2 E(2,1)^2");
    CHECK(bfs_reaches(a, 8));
    CHECK_THROWS_AS(decompose_gamma2(IntMatrix{{1, 1}, {0, 1}}), MembershipError);
    CHECK_THROWS_AS(decompose_gamma2(IntMatrix{{3, 0}, {0, 1}}), MembershipError);
    CHECK_THROWS_AS(decompose_gamma2(IntMatrix::identity(3)), InputError);
}

TEST_CASE("decompose_gamma2 agrees with the BFS oracle on short words") {
    Rng rng(34);
    for (int s = 0; s < 40; ++s) {
        const IntMatrix a = word_to_matrix(random_gamma2_word(4, rng));
        CHECK(bfs_reaches(a, 4));
        CHECK(word_to_matrix(decompose_gamma2(a)) == a);
    }
}

TEST_CASE("decompose_gamma2 roundtrip") {
    Rng rng(42);
    for (int s = 0; s < 1000; ++s) {
        const std::size_t len = std::uniform_int_distribution<std::size_t>(0, 30)(rng);
        const IntMatrix a = word_to_matrix(random_gamma2_word(len, rng));
        const auto w = decompose_gamma2(a);
        CHECK(word_to_matrix(w) == a);
        CHECK(is_gamma_word(w));
    }
}

TEST_CASE("decompose_gamma_n examples") {
    CHECK(decompose_gamma_n(IntMatrix::identity(3)).empty());
    CHECK(decompose_gamma_n(flip(3, 1, 2)) == word(3, {{gen::J{1}, 1}}));
    Rng rng(35);
    for (int s = 0; s < 50; ++s) {
        const IntMatrix u = word_to_matrix(random_elementary_word(3, 8, rng));
        const IntMatrix a = u * elementary(3, 1, 2, 2) * inverse_unimodular(u);
        const auto w = decompose_gamma_n(a);
        CHECK(word_to_matrix(w) == a);
        CHECK(is_gamma_word(w));
    }
    CHECK_THROWS_AS(decompose_gamma_n(elementary(3, 1, 2, 1)), MembershipError);
    CHECK_THROWS_AS(decompose_gamma_n(IntMatrix::identity(2)), InputError);
}

TEST_CASE("decompose_gamma_n roundtrip and closure witness") {
    Rng rng(36);
    for (std::size_t n = 3; n <= 5; ++n) {
        for (int s = 0; s < 300; ++s) {
            const IntMatrix a = word_to_matrix(random_gamma_word(n, 25, rng));
            const auto w = decompose_gamma_n(a);
            CHECK(word_to_matrix(w) == a);
            CHECK(in_congruence(word_to_matrix(w), 2));
        }
        for (const auto& g : targets(n)) {
            const IntMatrix u = random_sln(n, rng);
            const IntMatrix a = u * letter_matrix(g, n) * inverse_unimodular(u);
            CHECK(word_to_matrix(decompose_gamma_n(a)) == a);
        }
    }
}

TEST_CASE("decompose_sln examples") {
    CHECK(decompose_sln(elementary(2, 1, 2, 1)) == word(2, {{gen::E{1, 2}, 1}}));
    const IntMatrix rot{{0, -1}, {1, 0}};
    CHECK(word_to_matrix(decompose_sln(rot)) == rot);
    CHECK(word_to_matrix(word(2, {{gen::E{2, 1}, 1}, {gen::E{1, 2}, -1}, {gen::E{2, 1}, 1}})) == rot);
    CHECK(word_to_matrix(decompose_sln(-IntMatrix::identity(4))) == -IntMatrix::identity(4));
    CHECK_THROWS_AS(decompose_sln(IntMatrix{{2, 0}, {0, 1}}), MembershipError);
    CHECK_THROWS_AS(decompose_sln(diag({-1, 1})), MembershipError);
}

TEST_CASE("decompose_sln roundtrip") {
    Rng rng(37);
    for (std::size_t n = 2; n <= 5; ++n)
        for (int s = 0; s < 250; ++s) {
            const IntMatrix a = word_to_matrix(random_elementary_word(n, 30, rng));
            const auto w = decompose_sln(a);
            CHECK(word_to_matrix(w) == a);
            for (const auto& l : w.letters()) CHECK(std::holds_alternative<gen::E>(l.symbol));
        }
}

TEST_CASE("word cap is enforced") {
    const IntMatrix a{{3, 2}, {4, 3}};
    CHECK_THROWS_AS(decompose_gamma2(a, 1), LimitError);
    Rng rng(38);
    const IntMatrix b = word_to_matrix(random_gamma_word(4, 30, rng));
    CHECK_THROWS_AS(decompose_gamma_n(b, 1), LimitError);
    CHECK_THROWS_AS(decompose_sln(word_to_matrix(random_elementary_word(4, 30, rng)), 1), LimitError);
}
