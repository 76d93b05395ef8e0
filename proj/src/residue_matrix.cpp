#include "sphereprod/residue_matrix.hpp"

#include <numeric>
#include <utility>

#include "sphereprod/errors.hpp"

namespace sphereprod {

namespace {

void check_modulus(std::uint64_t m) {
    if (m < 2 || m >= (1ULL << 31)) throw InputError("modulus must satisfy 2 <= m < 2^31");
}

std::uint32_t reduce(std::int64_t v, std::uint32_t m) {
    std::int64_t r = v % static_cast<std::int64_t>(m);
    if (r < 0) r += m;
    return static_cast<std::uint32_t>(r);
}

}  // namespace

ResidueMatrix::ResidueMatrix(std::size_t n, std::uint32_t modulus, std::vector<std::int64_t> entries)
    : n_(n), m_(modulus) {
    check_modulus(modulus);
    if (n == 0) throw InputError("matrix dimension must be positive");
    if (entries.size() != n * n) throw InputError("matrix entry count does not match n*n");
    entries_.reserve(entries.size());
    for (auto v : entries) entries_.push_back(reduce(v, modulus));
}

ResidueMatrix::ResidueMatrix(std::size_t n, std::uint32_t modulus,
                             std::vector<std::uint32_t> entries, int)
    : n_(n), m_(modulus), entries_(std::move(entries)) {}

ResidueMatrix ResidueMatrix::identity(std::size_t n, std::uint32_t modulus) {
    check_modulus(modulus);
    std::vector<std::uint32_t> e(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) e[i * n + i] = 1;
    return ResidueMatrix(n, modulus, std::move(e), 0);
}

bool ResidueMatrix::is_identity() const {
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            if ((*this)(i, j) != (i == j ? 1U : 0U)) return false;
    return true;
}

IntMatrix ResidueMatrix::lift() const {
    std::vector<Integer> e;
    e.reserve(entries_.size());
    for (auto v : entries_) e.emplace_back(static_cast<unsigned long>(v));
    return IntMatrix(n_, std::move(e));
}

std::uint32_t ResidueMatrix::det() const {
    Integer d = sphereprod::det(lift());
    Integer r = d % m_;
    if (r < 0) r += m_;
    return static_cast<std::uint32_t>(r.get_ui());
}

bool ResidueMatrix::has_unit_det() const { return std::gcd(det(), m_) == 1; }

ResidueMatrix ResidueMatrix::inverse() const {
    const std::uint32_t d = det();
    Integer dinv;
    const Integer dm = d;
    const Integer mm = m_;
    if (mpz_invert(dinv.get_mpz_t(), dm.get_mpz_t(), mm.get_mpz_t()) == 0)
        throw MembershipError("residue matrix determinant is not a unit");
    // adjugate over Z of the lift, then scale by det^{-1} mod m
    if (n_ == 1) return ResidueMatrix(1, m_, {static_cast<std::int64_t>(dinv.get_ui())});
    const IntMatrix a = lift();
    std::vector<std::int64_t> out(n_ * n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) {
            std::vector<Integer> minor;
            minor.reserve((n_ - 1) * (n_ - 1));
            for (std::size_t r = 0; r < n_; ++r) {
                if (r == i) continue;
                for (std::size_t c = 0; c < n_; ++c)
                    if (c != j) minor.push_back(a(r, c));
            }
            Integer cof = sphereprod::det(IntMatrix(n_ - 1, std::move(minor)));
            if ((i + j) % 2 != 0) cof = -cof;
            Integer v = (cof * dinv) % mm;
            if (v < 0) v += mm;
            out[j * n_ + i] = static_cast<std::int64_t>(v.get_ui());
        }
    return ResidueMatrix(n_, m_, std::move(out));
}

ResidueMatrix ResidueMatrix::pow(std::uint64_t exponent) const {
    ResidueMatrix result = identity(n_, m_);
    ResidueMatrix base = *this;
    while (exponent != 0) {
        if (exponent & 1U) result = result * base;
        exponent >>= 1;
        if (exponent != 0) base = base * base;
    }
    return result;
}

ResidueMatrix operator*(const ResidueMatrix& a, const ResidueMatrix& b) {
    if (a.n_ != b.n_ || a.m_ != b.m_) throw InputError("residue matrix shape or modulus mismatch");
    const std::size_t n = a.n_;
    const std::uint64_t m = a.m_;
    std::vector<std::uint32_t> out(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::uint64_t acc = 0;
            for (std::size_t k = 0; k < n; ++k)
                acc = (acc + static_cast<std::uint64_t>(a(i, k)) * b(k, j)) % m;
            out[i * n + j] = static_cast<std::uint32_t>(acc);
        }
    return ResidueMatrix(n, a.m_, std::move(out), 0);
}

ResidueMatrix reduce_mod(const IntMatrix& a, const Integer& m) {
    if (m < 2) throw InputError("modulus must be at least 2");
    if (m >= (1UL << 31)) throw InputError("modulus must be below 2^31");
    const auto mod = static_cast<std::uint32_t>(m.get_ui());
    std::vector<std::int64_t> e;
    e.reserve(a.entries().size());
    for (const auto& v : a.entries()) {
        Integer r = v % m;
        if (r < 0) r += m;
        e.push_back(static_cast<std::int64_t>(r.get_ui()));
    }
    return ResidueMatrix(a.dim(), mod, std::move(e));
}

std::size_t ResidueMatrixHash::operator()(const ResidueMatrix& a) const noexcept {
    std::size_t h = 1469598103934665603ULL ^ a.dim();
    for (auto v : a.entries()) {
        h ^= v;
        h *= 1099511628211ULL;
    }
    return h;
}

}  // namespace sphereprod
