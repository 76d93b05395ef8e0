#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "sphereprod/int_matrix.hpp"
#include "sphereprod/permutation.hpp"

namespace sphereprod {

// Generator symbols. Indices are 1-based, matching the serialized form.
namespace gen {

// I + e_ij
struct E {
    std::size_t i, j;
    friend bool operator==(const E&, const E&) = default;
};
// I - 2 e_ii - 2 e_(i+1)(i+1)
struct J {
    std::size_t i;
    friend bool operator==(const J&, const J&) = default;
};
// I - 2 e_ii - 2 e_kk
struct JRange {
    std::size_t i, k;
    friend bool operator==(const JRange&, const JRange&) = default;
};
// [[0,-1],[1,0]] (+) I
struct Tau {
    friend bool operator==(const Tau&, const Tau&) = default;
};
// P_sigma for an even sigma
struct PermEven {
    Permutation sigma;
    friend bool operator==(const PermEven&, const PermEven&) = default;
};
// -I_2
struct NegI {
    friend bool operator==(const NegI&, const NegI&) = default;
};

}  // namespace gen

using GeneratorSymbol = std::variant<gen::E, gen::J, gen::JRange, gen::Tau, gen::PermEven, gen::NegI>;

struct Letter {
    GeneratorSymbol symbol;
    Integer exponent;

    friend bool operator==(const Letter& a, const Letter& b) {
        return a.symbol == b.symbol && a.exponent == b.exponent;
    }
};

/**
 * Ordered product of generator powers in a fixed ambient dimension.
 *
 * Evaluation is the left-to-right product. append() merges a letter into
 * the previous one when the symbols agree, and reduces exponents of the
 * involutions (J, JR, NEG) mod 2, so words never carry zero exponents.
 */
class GeneratorWord {
public:
    explicit GeneratorWord(std::size_t n) : n_(n) {}
    GeneratorWord(std::size_t n, std::vector<Letter> letters);

    std::size_t dim() const noexcept { return n_; }
    const std::vector<Letter>& letters() const noexcept { return letters_; }
    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }

    GeneratorWord& append(GeneratorSymbol symbol, const Integer& exponent = 1);
    GeneratorWord& append(const GeneratorWord& tail);

    GeneratorWord inverse() const;

    friend bool operator==(const GeneratorWord&, const GeneratorWord&) = default;

private:
    std::size_t n_;
    std::vector<Letter> letters_;
};

// Throws InputError for out-of-range indices, odd permutations, or NEG with n != 2.
IntMatrix symbol_matrix(const GeneratorSymbol& s, std::size_t n);
IntMatrix letter_matrix(const Letter& letter, std::size_t n);
IntMatrix word_to_matrix(const GeneratorWord& w);

// The word uses only E(i,j) with even exponents, J, JR and (for n = 2) NEG.
bool is_gamma_word(const GeneratorWord& w);

std::string to_string(const GeneratorSymbol& s);
std::string to_string(const Letter& letter);
// Space-separated letters; the empty word renders as "I".
std::string to_string(const GeneratorWord& w);

// Inverse of to_string: tokens E(i,j)^t, J(i), JR(i,k), TAU, P((..)..), NEG,
// each optionally followed by ^t.
GeneratorWord parse_word(const std::string& text, std::size_t n);

// J(i) J(i+1) ... J(k-1) for i < k (symmetric in i, k); equals I - 2 e_ii - 2 e_kk.
GeneratorWord jrange_expand(std::size_t i, std::size_t k, std::size_t n);

}  // namespace sphereprod
