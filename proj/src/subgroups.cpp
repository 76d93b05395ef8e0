#include "sphereprod/subgroups.hpp"

#include "sphereprod/errors.hpp"

namespace sphereprod {

KClass k_class_of(long k) {
    if (k < 1) throw InputError("sphere dimension k must be positive");
    if (k == 1 || k == 3 || k == 7) return KClass::hopf;
    return k % 2 == 1 ? KClass::odd_generic : KClass::even;
}

std::string to_string(KClass c) {
    switch (c) {
        case KClass::hopf: return "hopf";
        case KClass::odd_generic: return "odd_generic";
        case KClass::even: return "even";
    }
    return "unknown";
}

KClass parse_k_class(const std::string& s) {
    if (s == "hopf") return KClass::hopf;
    if (s == "odd" || s == "odd_generic") return KClass::odd_generic;
    if (s == "even") return KClass::even;
    throw InputError("unknown k-class '" + s + "' (expected hopf, odd or even)");
}

std::vector<Integer> pre_dot(std::span<const Integer> v, std::span<const Integer> w) {
    if (v.size() != w.size()) throw InputError("pre_dot: vector length mismatch");
    std::vector<Integer> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * w[i];
    return out;
}

IntMatrix tau_matrix(std::size_t n) {
    if (n < 2) throw InputError("tau requires n >= 2");
    std::vector<Integer> e(n * n, 0);
    e[0 * n + 1] = -1;
    e[1 * n + 0] = 1;
    for (std::size_t i = 2; i < n; ++i) e[i * n + i] = 1;
    return IntMatrix(n, std::move(e));
}

bool in_congruence(const IntMatrix& a, const Integer& m) {
    if (m < 2) throw InputError("congruence level must be at least 2");
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Integer diff = a(i, j) - (i == j ? 1 : 0);
            if (!mpz_divisible_p(diff.get_mpz_t(), m.get_mpz_t())) return false;
        }
    return det(a) == 1;
}

bool in_W2(const IntMatrix& a) {
    const std::size_t n = a.dim();
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t l = j + 1; l < n; ++l)
            for (const auto& c : pre_dot(a.row(j), a.row(l)))
                if (mpz_odd_p(c.get_mpz_t())) return false;
    return det(a) == 1;
}

std::optional<Permutation> mod2_class(const IntMatrix& a) {
    const std::size_t n = a.dim();
    std::vector<std::size_t> images(n);
    std::vector<bool> column_used(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t odd_count = 0;
        for (std::size_t j = 0; j < n; ++j)
            if (mpz_odd_p(a(i, j).get_mpz_t())) {
                ++odd_count;
                images[i] = j;
            }
        if (odd_count != 1 || column_used[images[i]]) return std::nullopt;
        column_used[images[i]] = true;
    }
    return Permutation(std::move(images));
}

IntMatrix CosetCertificate::reconstruct() const {
    const std::size_t n = residual.dim();
    IntMatrix out = sigma.matrix() * residual;
    return uses_tau ? tau_matrix(n) * out : out;
}

CosetCertificate coset_certificate(const IntMatrix& a) {
    if (!in_W2(a)) throw MembershipError("matrix is not in W_n(2)");
    const std::size_t n = a.dim();
    // in_W2 guarantees A mod 2 is a permutation matrix
    auto cls = mod2_class(a);
    if (!cls) throw VerificationError("W_n(2) member without a mod-2 permutation class");
    CosetCertificate cert{false, *cls, a};
    IntMatrix left_inverse = transpose(cls->matrix());
    if (!cls->is_even()) {
        // tau == P_(1 2) mod 2 and P_(1 2) P_sigma = P_{sigma o (1 2)}
        cert.uses_tau = true;
        cert.sigma = Permutation::transposition(n, 1, 2).then(*cls);
        left_inverse = transpose(cert.sigma.matrix()) * inverse_unimodular(tau_matrix(n));
    }
    cert.residual = left_inverse * a;
    if (!cert.sigma.is_even() || !in_congruence(cert.residual, 2) || cert.reconstruct() != a)
        throw VerificationError("coset certificate failed re-verification");
    return cert;
}

bool is_signed_permutation(const IntMatrix& a) {
    const std::size_t n = a.dim();
    std::vector<bool> column_used(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t nonzero = 0;
        for (std::size_t j = 0; j < n; ++j) {
            const Integer& v = a(i, j);
            if (v == 0) continue;
            if (v != 1 && v != -1) return false;
            if (column_used[j]) return false;
            column_used[j] = true;
            ++nonzero;
        }
        if (nonzero != 1) return false;
    }
    return true;
}

MembershipVerdict hR_member(const IntMatrix& a, KClass k_class) {
    const Integer d = det(a);
    const bool unimodular = d == 1 || d == -1;
    switch (k_class) {
        case KClass::hopf:
            if (!unimodular) return {false, "det = " + d.get_str() + " is not +-1"};
            return {true, "every unimodular matrix is realized for k in {1,3,7}"};
        case KClass::odd_generic:
            if (!unimodular) return {false, "det = " + d.get_str() + " is not +-1"};
            if (!mod2_class(a)) return {false, "A mod 2 is not a permutation matrix"};
            return {true, "A mod 2 is a permutation matrix"};
        case KClass::even:
            if (!is_signed_permutation(a)) return {false, "A is not a signed permutation matrix"};
            return {true, "A is a signed permutation matrix"};
    }
    return {false, "unknown k-class"};
}

Integer count_hR_even(std::size_t n) {
    if (n < 1) throw InputError("n must be positive");
    Integer out = 1;
    for (std::size_t i = 1; i <= n; ++i) out *= 2 * i;
    return out;
}

}  // namespace sphereprod
