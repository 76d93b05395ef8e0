#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sphereprod/generators.hpp"

namespace sphereprod {

// The four conjugation tables showing that the subgroup generated by the
// E_ij^2 and J_i is normalized by every E_ij^{+-1}:
//   table 1: E_ij   E_kl^2 E_ij^-1      table 3: E_ij   J_k E_ij^-1
//   table 2: E_ij^-1 E_kl^2 E_ij        table 4: E_ij^-1 J_k E_ij
// Each table splits into four index cases (1-based: case 1..4).
struct RewriteCase {
    int table;
    int index;

    friend bool operator==(const RewriteCase&, const RewriteCase&) = default;
};

std::string describe(const RewriteCase& c);

struct RewriteResult {
    RewriteCase which;
    GeneratorWord word;
    // true when the tabulated word failed exact verification and `word`
    // came from the fallback search instead
    bool corrected;
};

// Case selected for conjugator E(i,j)^{+-1} and target E(k,l)^{+-2} or J(k).
RewriteCase rewrite_case(const Letter& conjugator, const Letter& target, std::size_t n);

// The tabulated right-hand side, without verification.
GeneratorWord table_word(const Letter& conjugator, const Letter& target, std::size_t n);

// A word in E^2 and J evaluating exactly to conjugator * target * conjugator^-1.
// The tabulated word is checked by exact multiplication; on mismatch a
// breadth-first search over short words supplies the replacement.
// Throws InputError for invalid letters and VerificationError if no word is found.
RewriteResult conjugate_rewrite(const Letter& conjugator, const Letter& target, std::size_t n);

// Exhaustive search over words of at most max_length letters drawn from
// E(a,b)^{+-2} and J(c) for one evaluating to `target`.
std::optional<GeneratorWord> search_gamma_word(const IntMatrix& target, std::size_t max_length);

struct FamilyReport {
    RewriteCase which;
    std::size_t tuples_checked = 0;
    std::size_t corrected = 0;
    // first corrected word, when any
    std::optional<GeneratorWord> correction;

    bool verified() const { return corrected == 0; }
};

// Runs every conjugator/target index tuple in dimension n and tallies each of
// the 16 case families. Families with no valid tuple in dimension n report
// tuples_checked = 0.
std::vector<FamilyReport> verify_identities(std::size_t n);

}  // namespace sphereprod
