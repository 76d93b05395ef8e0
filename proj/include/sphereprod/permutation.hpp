#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sphereprod/int_matrix.hpp"

namespace sphereprod {

/**
 * Bijection of {1..n}. Stored 0-based: images()[i] is sigma(i+1)-1.
 *
 * The permutation matrix follows (P_sigma)_{ij} = delta_{j, sigma(i)}, so row
 * i carries its single 1 in column sigma(i). Under this convention
 * P_sigma * P_pi = P_{pi o sigma}.
 */
class Permutation {
public:
    explicit Permutation(std::vector<std::size_t> images);

    static Permutation identity(std::size_t n);
    // Transposition of the 1-based points a and b.
    static Permutation transposition(std::size_t n, std::size_t a, std::size_t b);
    // Parses 1-based cycle notation such as "(1 2 3)(4 5)"; "()" is the identity.
    static Permutation from_cycles(std::size_t n, const std::string& cycles);

    std::size_t size() const noexcept { return images_.size(); }
    std::size_t operator()(std::size_t i) const noexcept { return images_[i]; }
    const std::vector<std::size_t>& images() const noexcept { return images_; }

    int sign() const;
    bool is_even() const { return sign() == 1; }
    bool is_identity() const;
    Permutation inverse() const;

    // (p.then(q))(i) = q(p(i)).
    Permutation then(const Permutation& q) const;

    IntMatrix matrix() const;
    // 1-based disjoint cycles, fixed points omitted; identity renders "()".
    std::string cycles() const;
    std::vector<std::size_t> one_based() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<std::size_t> images_;
};

// All n! permutations of {1..n} in lexicographic order of image lists.
std::vector<Permutation> all_permutations(std::size_t n);

}  // namespace sphereprod
