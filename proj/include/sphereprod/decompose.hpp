#pragma once

#include <cstddef>

#include "sphereprod/generators.hpp"

namespace sphereprod {

inline constexpr std::size_t kDefaultWordCap = 1'000'000;

// Gamma_2(2) element as a word over E(1,2)^{2t}, E(2,1)^{2t} and NEG.
//
// Right-multiplies by powers of E(1,2)^2 or E(2,1)^2 until the matrix is
// triangular, at each step shrinking the larger of |a|, |d| (ties toward a).
// Throws MembershipError when A is not in Gamma_2(2).
GeneratorWord decompose_gamma2(const IntMatrix& a, std::size_t word_cap = kDefaultWordCap);

// Gamma_n(2) element (n >= 3) as a word over E(i,j)^{2t} and J(i).
//
// Columns are cleared left to right with even row operations. The entries
// below the pivot are cleared top to bottom by a 2-adic Euclidean
// alternation inside the (pivot, row) pair; once they vanish the pivot is
// +-1 and the entries above it are cleared in one step each. The remaining
// +-1 diagonal is written as JR pairs expanded into consecutive J's.
GeneratorWord decompose_gamma_n(const IntMatrix& a, std::size_t word_cap = kDefaultWordCap);

// SL_n(Z) element as a word over E(i,j)^t by Euclidean column reduction.
// A leftover diagonal sign pair on {i,k} is written as
// (E(i,k) E(k,i)^-1 E(i,k))^2.
GeneratorWord decompose_sln(const IntMatrix& a, std::size_t word_cap = kDefaultWordCap);

}  // namespace sphereprod
