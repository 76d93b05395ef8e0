#include "sphereprod/whitehead.hpp"

#include "sphereprod/errors.hpp"

namespace sphereprod {

PairCoefficients whitehead_coeffs(const IntMatrix& a, std::size_t j, std::size_t l) {
    const std::size_t n = a.dim();
    if (j < 1 || l < 1 || j > n || l > n) throw InputError("row index out of range");
    if (j == l) throw InputError("whitehead_coeffs requires j != l");
    PairCoefficients out{j, l, {}, std::vector<Integer>(n)};
    const auto rj = a.row(j - 1);
    const auto rl = a.row(l - 1);
    for (std::size_t s = 0; s < n; ++s) {
        out.diag[s] = rj[s] * rl[s];
        for (std::size_t t = s + 1; t < n; ++t) out.cross[{s + 1, t + 1}] = rj[s] * rl[t] - rj[t] * rl[s];
    }
    return out;
}

ObstructionReport classify(const IntMatrix& a, KClass k_class) {
    const Integer d = det(a);
    if (d != 1 && d != -1) throw MembershipError("classify expects a unimodular matrix");
    const std::size_t n = a.dim();
    ObstructionReport report{n, k_class, {}, {}};
    for (std::size_t j = 1; j <= n; ++j)
        for (std::size_t l = j + 1; l <= n; ++l) {
            auto coeffs = whitehead_coeffs(a, j, l);
            for (std::size_t s = 0; s < n; ++s) {
                const Integer& c = coeffs.diag[s];
                const bool blocked = (k_class == KClass::odd_generic && mpz_odd_p(c.get_mpz_t())) ||
                                     (k_class == KClass::even && c != 0);
                if (blocked) report.witnesses.push_back({j, l, s + 1});
            }
            report.pairs.push_back(std::move(coeffs));
        }
    return report;
}

CrossCheck cross_consistency(const IntMatrix& a, std::size_t j, std::size_t l) {
    const auto coeffs = whitehead_coeffs(a, j, l);
    CrossCheck out{true, 0};
    for (const auto& [st, value] : coeffs.cross) {
        const auto [s, t] = st;
        const IntMatrix minor(2, {a(j - 1, s - 1), a(j - 1, t - 1), a(l - 1, s - 1), a(l - 1, t - 1)});
        ++out.minors_checked;
        if (det(minor) != value) out.consistent = false;
    }
    return out;
}

}  // namespace sphereprod
