#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "sphereprod/int_matrix.hpp"

namespace sphereprod {

// Square matrix over Z/m with entries kept in [0, m). The row-major entry
// tuple is the canonical encoding used for hashing and set membership.
class ResidueMatrix {
public:
    // Entries are reduced into [0, m); modulus must satisfy 2 <= m < 2^31.
    ResidueMatrix(std::size_t n, std::uint32_t modulus, std::vector<std::int64_t> entries);

    static ResidueMatrix identity(std::size_t n, std::uint32_t modulus);

    std::size_t dim() const noexcept { return n_; }
    std::uint32_t modulus() const noexcept { return m_; }
    std::uint32_t operator()(std::size_t row, std::size_t col) const noexcept {
        return entries_[row * n_ + col];
    }
    std::span<const std::uint32_t> entries() const noexcept { return entries_; }

    bool is_identity() const;
    // Determinant as a residue in [0, m).
    std::uint32_t det() const;
    bool has_unit_det() const;
    // Adjugate times det^{-1}; throws MembershipError when det is not a unit.
    ResidueMatrix inverse() const;
    ResidueMatrix pow(std::uint64_t exponent) const;
    // Smallest integer lift with entries in [0, m).
    IntMatrix lift() const;

    friend bool operator==(const ResidueMatrix& a, const ResidueMatrix& b) {
        return a.n_ == b.n_ && a.m_ == b.m_ && a.entries_ == b.entries_;
    }

private:
    ResidueMatrix(std::size_t n, std::uint32_t modulus, std::vector<std::uint32_t> entries,
                  int);

    std::size_t n_;
    std::uint32_t m_;
    std::vector<std::uint32_t> entries_;

    friend ResidueMatrix operator*(const ResidueMatrix& a, const ResidueMatrix& b);
};

ResidueMatrix operator*(const ResidueMatrix& a, const ResidueMatrix& b);

// Entrywise reduction into [0, m). Throws InputError for m < 2.
ResidueMatrix reduce_mod(const IntMatrix& a, const Integer& m);

struct ResidueMatrixHash {
    std::size_t operator()(const ResidueMatrix& a) const noexcept;
};

}  // namespace sphereprod
