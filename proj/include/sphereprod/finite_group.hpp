#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "sphereprod/int_matrix.hpp"
#include "sphereprod/residue_matrix.hpp"

namespace sphereprod {

inline constexpr std::size_t kDefaultGroupCap = 10'000'000;

/**
 * A finite subgroup of GL_n(Z/m), stored as its full element list in BFS
 * discovery order (identity first) plus the generators it was built from.
 * Immutable after construction, so concurrent membership queries are safe.
 */
class FiniteGroupTable {
public:
    std::size_t dim() const noexcept { return n_; }
    std::uint32_t modulus() const noexcept { return m_; }
    std::size_t order() const noexcept { return elements_.size(); }
    const std::vector<ResidueMatrix>& elements() const noexcept { return elements_; }
    const std::vector<ResidueMatrix>& generators() const noexcept { return generators_; }

    bool contains(const ResidueMatrix& x) const { return index_.count(x) != 0; }
    std::optional<std::size_t> index_of(const ResidueMatrix& x) const;
    bool is_subgroup_of(const FiniteGroupTable& g) const;

private:
    friend FiniteGroupTable enumerate_group(const std::vector<ResidueMatrix>&, std::size_t, std::uint32_t,
                                            std::size_t);

    std::size_t n_ = 0;
    std::uint32_t m_ = 2;
    std::vector<ResidueMatrix> elements_;
    std::vector<ResidueMatrix> generators_;
    std::unordered_map<ResidueMatrix, std::size_t, ResidueMatrixHash> index_;
};

// BFS closure of the identity under right multiplication by the generators
// and their inverses. Throws InputError for bad generators and LimitError
// past `cap` elements.
FiniteGroupTable enumerate_group(const std::vector<ResidueMatrix>& generators, std::size_t n,
                                 std::uint32_t m, std::size_t cap = kDefaultGroupCap);

// E_ij mod m for all i != j; generates SL_n(Z/m).
std::vector<ResidueMatrix> elementary_generators(std::size_t n, std::uint32_t m);

// Subgroup generated by { a^t : a in N }, N = <n_generators> inside G.
FiniteGroupTable power_subgroup(const FiniteGroupTable& g, const std::vector<ResidueMatrix>& n_generators,
                                std::uint64_t t, std::size_t cap = kDefaultGroupCap);

struct NormalityResult {
    bool normal;
    // g, h with g h g^-1 outside H, when not normal
    std::optional<std::pair<ResidueMatrix, ResidueMatrix>> violation;
};

// Conjugates the generators of H by the generators of G. Throws InputError
// when H is not contained in G.
NormalityResult is_normal(const FiniteGroupTable& h, const FiniteGroupTable& g);

// Every normal subgroup of G, as joins of normal closures of single elements,
// sorted by order.
std::vector<FiniteGroupTable> normal_subgroups(const FiniteGroupTable& g);

struct IndexReport {
    std::size_t n = 0;
    std::size_t permutation_group_order = 0;  // |P_n| enumerated in SL_n(Z/2)
    std::size_t factorial = 0;                // n!
    std::size_t sl_order = 0;                 // |SL_n(Z/2)|
    std::vector<IntMatrix> representatives;   // P_sigma, sigma even, then tau P_sigma
    bool representatives_in_w2 = false;
    bool representatives_distinct_mod2 = false;
    bool representatives_cover_permutations = false;
    // residue classes of SL_n(Z/2) with pairwise even row pre-dots equal P_n
    bool image_is_permutation_group = false;
    std::size_t samples_checked = 0;
    bool samples_in_image = false;

    bool passed() const {
        return permutation_group_order == factorial && representatives.size() == factorial &&
               representatives_in_w2 && representatives_distinct_mod2 && representatives_cover_permutations &&
               image_is_permutation_group && samples_in_image;
    }
};

// Desk-scale check of the index-n! coset structure of Gamma_n(2) in W_n(2),
// n in {2, 3, 4}. `samples` random SL_n(Z) elements are drawn (seeded) and
// the ones in W_n(2) are checked against the permutation image.
IndexReport index_check(std::size_t n, std::size_t samples = 4000, std::uint64_t seed = 42);

}  // namespace sphereprod
