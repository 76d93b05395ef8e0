#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace sphereprod {

using Integer = mpz_class;

/**
 * Square matrix of arbitrary-precision integers.
 *
 * Values are immutable once built: every operation returns a fresh matrix.
 * Element access is 0-based, row-major.
 */
class IntMatrix {
public:
    // Builds from a row-major entry list of length n*n.
    IntMatrix(std::size_t n, std::vector<Integer> entries);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix zero(std::size_t n);

    std::size_t dim() const noexcept { return n_; }
    const Integer& operator()(std::size_t row, std::size_t col) const noexcept {
        return entries_[row * n_ + col];
    }
    std::span<const Integer> entries() const noexcept { return entries_; }
    std::span<const Integer> row(std::size_t i) const noexcept {
        return std::span<const Integer>(entries_).subspan(i * n_, n_);
    }

    bool is_identity() const;

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.n_ == b.n_ && a.entries_ == b.entries_;
    }

private:
    std::size_t n_;
    std::vector<Integer> entries_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a);
IntMatrix transpose(const IntMatrix& a);

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);
// Integer power; negative exponents require a unimodular base.
IntMatrix mat_pow(const IntMatrix& a, long exponent);

// Exact determinant. Uses cofactor expansion for n <= 4 and fraction-free
// (Bareiss) elimination above that.
Integer det(const IntMatrix& a);
Integer det_cofactor(const IntMatrix& a);
Integer det_bareiss(const IntMatrix& a);

// Adjugate inverse; throws MembershipError unless det(a) = +-1.
IntMatrix inverse_unimodular(const IntMatrix& a);

// True iff the 2x2 matrix (det 1) has |trace| > 2, i.e. real eigenvalues
// lambda, 1/lambda off the unit circle.
bool hyperbolic_check(const IntMatrix& a);

// Multi-line rendering matching the text matrix format.
std::string to_text(const IntMatrix& a);
std::ostream& operator<<(std::ostream& os, const IntMatrix& a);

}  // namespace sphereprod
