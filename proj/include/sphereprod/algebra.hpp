#pragma once

#include <array>
#include <cstddef>
#include <initializer_list>
#include <string>

namespace sphereprod {

/**
 * Element of a normed division algebra of dimension 1, 2, 4 or 8 (reals,
 * complex numbers, quaternions, octonions).
 *
 * Multiplication is the Cayley-Dickson doubling
 *
 *     (a, b)(c, d) = (a c - conj(d) b,  d a + b conj(c)),
 *
 * applied recursively to the two halves of the component array. Components
 * are ordered 1, e1, ..., e(dim-1). For quaternions this gives the usual
 * basis 1, i, j, k with ij = k, jk = i, ki = j; for octonions e1..e3 span
 * that quaternion subalgebra, e4 is the doubling unit and e(4+r) = e_r e4.
 */
class AlgebraElement {
public:
    static constexpr std::size_t kMaxDim = 8;

    explicit AlgebraElement(std::size_t dim);  // zero
    AlgebraElement(std::size_t dim, std::initializer_list<double> components);

    static AlgebraElement one(std::size_t dim);
    // The basis unit e_index (e_0 = 1).
    static AlgebraElement unit(std::size_t dim, std::size_t index);

    std::size_t dim() const noexcept { return dim_; }
    double operator[](std::size_t i) const noexcept { return c_[i]; }
    double& operator[](std::size_t i) noexcept { return c_[i]; }

    double norm() const;
    double norm_squared() const;
    AlgebraElement conj() const;
    // conj / |x|^2; throws InputError for zero.
    AlgebraElement inverse() const;
    // Square-and-multiply; negative exponents go through inverse().
    AlgebraElement pow(long exponent) const;

    AlgebraElement operator+(const AlgebraElement& o) const;
    AlgebraElement operator-(const AlgebraElement& o) const;
    AlgebraElement operator-() const;
    AlgebraElement operator*(double s) const;

    std::string to_string() const;

private:
    std::size_t dim_;
    std::array<double, kMaxDim> c_{};
};

// Throws InputError on dimension mismatch.
AlgebraElement algebra_mul(const AlgebraElement& a, const AlgebraElement& b);
inline AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) { return algebra_mul(a, b); }

// Largest componentwise difference.
double max_abs_diff(const AlgebraElement& a, const AlgebraElement& b);

}  // namespace sphereprod
