#pragma once

#include <cstddef>
#include <random>

#include "sphereprod/generators.hpp"

namespace sphereprod {

// All randomized routines take an explicit engine; callers seed it.
using Rng = std::mt19937_64;

// Uniformly chosen E(i,j)^{+-1} letters.
GeneratorWord random_elementary_word(std::size_t n, std::size_t length, Rng& rng);

// Product of 20-50 uniformly chosen E(i,j)^{+-1}.
IntMatrix random_sln(std::size_t n, Rng& rng);

// Letters drawn uniformly from E(1,2)^{+-2}, E(2,1)^{+-2}, NEG.
GeneratorWord random_gamma2_word(std::size_t length, Rng& rng);

// Letters drawn uniformly from E(i,j)^{+-2} and J(i).
GeneratorWord random_gamma_word(std::size_t n, std::size_t length, Rng& rng);

// Uniform integer matrix with entries in [lo, hi].
IntMatrix random_int_matrix(std::size_t n, long lo, long hi, Rng& rng);

}  // namespace sphereprod
