#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sphereprod/int_matrix.hpp"
#include "sphereprod/permutation.hpp"

namespace sphereprod {

// Realizability regimes for products of k-spheres:
//   hopf        k in {1, 3, 7}: [iota, iota] = 0, every unimodular matrix occurs
//   odd_generic other odd k: [iota, iota] has order 2
//   even        even k: [iota, iota] has infinite order
enum class KClass { hopf, odd_generic, even };

KClass k_class_of(long k);
std::string to_string(KClass c);
// Accepts "hopf", "odd", "odd_generic", "even".
KClass parse_k_class(const std::string& s);

// Componentwise product (v1 w1, ..., vn wn).
std::vector<Integer> pre_dot(std::span<const Integer> v, std::span<const Integer> w);

// Block rotation [[0,-1],[1,0]] (+) I_{n-2}; stands in for the transposition (1 2).
IntMatrix tau_matrix(std::size_t n);

// det(A) = 1 and A == I mod m.
bool in_congruence(const IntMatrix& a, const Integer& m);

// det(A) = 1 and every pair of distinct rows has a componentwise even pre-dot.
bool in_W2(const IntMatrix& a);

// The permutation sigma with A == P_sigma mod 2, if A mod 2 is a permutation matrix.
std::optional<Permutation> mod2_class(const IntMatrix& a);

struct CosetCertificate {
    bool uses_tau;
    Permutation sigma;   // always even
    IntMatrix residual;  // in Gamma_n(2)

    // (tau if uses_tau else I) * P_sigma * residual
    IntMatrix reconstruct() const;
};

// Splits A in W_n(2) as [tau] * P_sigma * gamma. Throws MembershipError when
// A is not in W_n(2) and VerificationError if the reconstruction fails.
CosetCertificate coset_certificate(const IntMatrix& a);

struct MembershipVerdict {
    bool member;
    std::string reason;
};

MembershipVerdict hR_member(const IntMatrix& a, KClass k_class);

// |hR(k, n)| = 2^n n! for even k.
Integer count_hR_even(std::size_t n);

bool is_signed_permutation(const IntMatrix& a);

}  // namespace sphereprod
