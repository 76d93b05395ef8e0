#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "sphereprod/int_matrix.hpp"
#include "sphereprod/subgroups.hpp"

namespace sphereprod {

/**
 * Coefficients of f_*[iota_j, iota_l] for the row pair (j, l) of A, expanded
 * bilinearly in the basis {[iota_s, iota_t] : s < t} u {[iota_s, iota_s]}.
 * All indices are 1-based.
 */
struct PairCoefficients {
    std::size_t j, l;
    std::map<std::pair<std::size_t, std::size_t>, Integer> cross;  // (s,t), s<t: a_js a_lt - a_jt a_ls
    std::vector<Integer> diag;                                      // [s-1]: a_js a_ls
};

struct ObstructionWitness {
    std::size_t j, l, s;  // pair (j,l) and the diagonal index s whose coefficient blocks
    friend bool operator==(const ObstructionWitness&, const ObstructionWitness&) = default;
};

struct ObstructionReport {
    std::size_t n;
    KClass k_class;
    std::vector<PairCoefficients> pairs;  // every j < l
    std::vector<ObstructionWitness> witnesses;

    bool realizable() const { return witnesses.empty(); }
};

// Throws InputError when j == l or an index is out of range.
PairCoefficients whitehead_coeffs(const IntMatrix& a, std::size_t j, std::size_t l);

// hopf: never blocked. odd_generic: blocked where a diagonal coefficient is
// odd. even: blocked where a diagonal coefficient is non-zero.
// Throws MembershipError unless det(A) = +-1.
ObstructionReport classify(const IntMatrix& a, KClass k_class);

struct CrossCheck {
    bool consistent;
    std::size_t minors_checked;
};

// Compares the cross coefficients of (j, l) against the 2x2 minors of rows
// j, l computed independently through det().
CrossCheck cross_consistency(const IntMatrix& a, std::size_t j, std::size_t l);

}  // namespace sphereprod
