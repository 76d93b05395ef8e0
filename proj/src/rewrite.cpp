#include "sphereprod/rewrite.hpp"

#include <deque>

#include "sphereprod/errors.hpp"

namespace sphereprod {

namespace {

struct Conjugator {
    std::size_t i, j;
    bool forward;  // exponent +1: e g e^-1; exponent -1: e^-1 g e
};

Conjugator read_conjugator(const Letter& c, std::size_t n) {
    const auto* e = std::get_if<gen::E>(&c.symbol);
    if (e == nullptr) throw InputError("conjugator must be an elementary matrix E(i,j)");
    if (c.exponent != 1 && c.exponent != -1) throw InputError("conjugator exponent must be +-1");
    (void)symbol_matrix(c.symbol, n);
    return {e->i, e->j, c.exponent == 1};
}

void check_target(const Letter& t, std::size_t n) {
    (void)symbol_matrix(t.symbol, n);
    if (std::holds_alternative<gen::E>(t.symbol)) {
        if (t.exponent != 2 && t.exponent != -2) throw InputError("target E(k,l) must carry exponent +-2");
    } else if (std::holds_alternative<gen::J>(t.symbol)) {
        if (t.exponent != 1 && t.exponent != -1) throw InputError("target J(k) must carry exponent +-1");
    } else {
        throw InputError("target must be E(k,l)^2 or J(k)");
    }
}

int e_target_case(const Conjugator& c, const gen::E& t) {
    const bool jk = c.j == t.i;
    const bool il = c.i == t.j;
    if (!jk && !il) return 1;
    if (!jk && il) return 2;
    if (jk && !il) return 3;
    return 4;
}

int j_target_case(const Conjugator& c, const gen::J& t) {
    const bool i_in = c.i == t.i || c.i == t.i + 1;
    const bool j_in = c.j == t.i || c.j == t.i + 1;
    if (!i_in && !j_in) return 1;
    if (i_in && !j_in) return 2;
    if (!i_in && j_in) return 3;
    return 4;
}

GeneratorWord word_of(std::size_t n, std::initializer_list<Letter> letters) {
    return GeneratorWord(n, std::vector<Letter>(letters));
}

}  // namespace

std::string describe(const RewriteCase& c) {
    static const char* tables[] = {"E_ij E_kl^2 E_ij^-1", "E_ij^-1 E_kl^2 E_ij", "E_ij J_k E_ij^-1",
                                   "E_ij^-1 J_k E_ij"};
    static const char* e_cases[] = {"j!=k, i!=l", "j!=k, i=l", "j=k, i!=l", "j=k, i=l"};
    static const char* j_cases[] = {"{i,j} disjoint from {k,k+1}", "i in {k,k+1}, j not",
                                    "i not in {k,k+1}, j in", "{i,j} = {k,k+1}"};
    const char* cond = c.table <= 2 ? e_cases[c.index - 1] : j_cases[c.index - 1];
    return std::string(tables[c.table - 1]) + " [" + cond + "]";
}

RewriteCase rewrite_case(const Letter& conjugator, const Letter& target, std::size_t n) {
    const auto c = read_conjugator(conjugator, n);
    check_target(target, n);
    if (const auto* e = std::get_if<gen::E>(&target.symbol)) return {c.forward ? 1 : 2, e_target_case(c, *e)};
    const auto& j = std::get<gen::J>(target.symbol);
    return {c.forward ? 3 : 4, j_target_case(c, j)};
}

GeneratorWord table_word(const Letter& conjugator, const Letter& target, std::size_t n) {
    const auto c = read_conjugator(conjugator, n);
    const auto which = rewrite_case(conjugator, target, n);
    const std::size_t i = c.i, j = c.j;

    if (const auto* e = std::get_if<gen::E>(&target.symbol)) {
        const std::size_t k = e->i, l = e->j;
        GeneratorWord w(n);
        if (which.table == 1) {
            switch (which.index) {
                case 1: w = word_of(n, {{gen::E{k, l}, 2}}); break;
                case 2: w = word_of(n, {{gen::E{k, l}, 2}, {gen::E{k, j}, -2}}); break;
                case 3: w = word_of(n, {{gen::E{i, l}, 2}, {gen::E{k, l}, 2}}); break;
                default: w = word_of(n, {{gen::E{i, k}, 2}, {gen::E{k, i}, -2}, {gen::JRange{i, k}, 1}}); break;
            }
        } else {
            switch (which.index) {
                case 1: w = word_of(n, {{gen::E{k, l}, 2}}); break;
                case 2: w = word_of(n, {{gen::E{k, l}, 2}, {gen::E{k, j}, 2}}); break;
                case 3: w = word_of(n, {{gen::E{i, l}, -2}, {gen::E{k, l}, 2}}); break;
                default: w = word_of(n, {{gen::JRange{k, i}, 1}, {gen::E{k, i}, -2}, {gen::E{i, k}, 2}}); break;
            }
        }
        // tables are stated for E_kl^2; conjugating E_kl^-2 inverts the word
        return target.exponent == 2 ? w : w.inverse();
    }

    const std::size_t k = std::get<gen::J>(target.symbol).i;
    if (which.table == 3) {
        switch (which.index) {
            case 2: return word_of(n, {{gen::J{k}, 1}, {gen::E{i, j}, -2}});
            case 3: return word_of(n, {{gen::E{i, j}, 2}, {gen::J{k}, 1}});
            default: return word_of(n, {{gen::J{k}, 1}});
        }
    }
    switch (which.index) {
        case 2: return word_of(n, {{gen::E{i, j}, -2}, {gen::J{k}, 1}});
        case 3: return word_of(n, {{gen::J{k}, 1}, {gen::E{i, j}, 2}});
        default: return word_of(n, {{gen::J{k}, 1}});
    }
}

std::optional<GeneratorWord> search_gamma_word(const IntMatrix& target, std::size_t max_length) {
    const std::size_t n = target.dim();
    std::vector<Letter> alphabet;
    for (std::size_t a = 1; a <= n; ++a)
        for (std::size_t b = 1; b <= n; ++b)
            if (a != b) {
                alphabet.push_back({gen::E{a, b}, 2});
                alphabet.push_back({gen::E{a, b}, -2});
            }
    for (std::size_t c = 1; c < n; ++c) alphabet.push_back({gen::J{c}, 1});
    std::vector<IntMatrix> letter_mats;
    for (const auto& l : alphabet) letter_mats.push_back(letter_matrix(l, n));

    struct Node {
        IntMatrix value;
        std::vector<std::size_t> letters;
    };
    std::deque<Node> frontier{{IntMatrix::identity(n), {}}};
    while (!frontier.empty()) {
        Node node = std::move(frontier.front());
        frontier.pop_front();
        if (node.value == target) {
            GeneratorWord w(n);
            for (auto idx : node.letters) w.append(alphabet[idx].symbol, alphabet[idx].exponent);
            return w;
        }
        if (node.letters.size() == max_length) continue;
        for (std::size_t idx = 0; idx < alphabet.size(); ++idx) {
            auto letters = node.letters;
            letters.push_back(idx);
            frontier.push_back({node.value * letter_mats[idx], std::move(letters)});
        }
    }
    return std::nullopt;
}

RewriteResult conjugate_rewrite(const Letter& conjugator, const Letter& target, std::size_t n) {
    const auto which = rewrite_case(conjugator, target, n);
    const IntMatrix e = letter_matrix(conjugator, n);
    const IntMatrix lhs = e * letter_matrix(target, n) * inverse_unimodular(e);
    GeneratorWord w = table_word(conjugator, target, n);
    if (word_to_matrix(w) == lhs) return {which, std::move(w), false};
    auto found = search_gamma_word(lhs, 3);
    if (!found) throw VerificationError("no short replacement word for " + describe(which));
    return {which, std::move(*found), true};
}

std::vector<FamilyReport> verify_identities(std::size_t n) {
    if (n < 2) throw InputError("verify_identities requires n >= 2");
    std::vector<FamilyReport> reports;
    for (int t = 1; t <= 4; ++t)
        for (int c = 1; c <= 4; ++c) reports.push_back(FamilyReport{{t, c}, 0, 0, std::nullopt});
    auto tally = [&](const RewriteResult& r) {
        auto& rep = reports[(r.which.table - 1) * 4 + (r.which.index - 1)];
        ++rep.tuples_checked;
        if (r.corrected) {
            ++rep.corrected;
            if (!rep.correction) rep.correction = r.word;
        }
    };
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j) {
            if (i == j) continue;
            for (int sign : {1, -1}) {
                const Letter conj{gen::E{i, j}, sign};
                for (std::size_t k = 1; k <= n; ++k)
                    for (std::size_t l = 1; l <= n; ++l)
                        if (k != l) tally(conjugate_rewrite(conj, {gen::E{k, l}, 2}, n));
                for (std::size_t k = 1; k < n; ++k) tally(conjugate_rewrite(conj, {gen::J{k}, 1}, n));
            }
        }
    return reports;
}

}  // namespace sphereprod
