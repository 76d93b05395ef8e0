#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "sphereprod/algebra.hpp"
#include "sphereprod/generators.hpp"
#include "sphereprod/int_matrix.hpp"

namespace sphereprod {

inline constexpr double kUnitTolerance = 1e-12;

// Unit vector in R^{k+1}.
class HyperPoint {
public:
    // Throws InputError unless | |coords| - 1 | <= 1e-12.
    explicit HyperPoint(std::vector<double> coords);
    // Scales a non-zero vector onto the sphere.
    static HyperPoint normalized(std::vector<double> v);

    std::size_t k() const noexcept { return coords_.size() - 1; }
    const std::vector<double>& coords() const noexcept { return coords_; }
    double operator[](std::size_t i) const noexcept { return coords_[i]; }

private:
    std::vector<double> coords_;
};

using AlgebraTuple = std::vector<AlgebraElement>;

// Monomial map: component i is x_1^{a_i1} x_2^{a_i2} ... x_n^{a_in}, multiplied
// left to right. Complex or quaternion unit inputs only; octonions are
// rejected because the ordered product is not well defined there.
AlgebraTuple p_a_eval(const IntMatrix& a, const AlgebraTuple& x);

// Elementary map replacing slot i by x_i x_j (1-based, i != j), and its
// inverse replacing slot i by x_i x_j^-1. Any algebra dimension.
AlgebraTuple p_ij_eval(std::size_t i, std::size_t j, const AlgebraTuple& x);
AlgebraTuple p_ij_inverse(std::size_t i, std::size_t j, const AlgebraTuple& x);

// P_{E_1} o ... o P_{E_r} for a word E_1 ... E_r of E(i,j)^t letters; the
// rightmost letter is applied first.
AlgebraTuple p_word_eval(const GeneratorWord& w, const AlgebraTuple& x);

// Two distinct points of (S^3)^2 with the same image under P_A for
// A = [[1,-1],[-1,2]]: (-i, -1) and (i + sqrt3 k, 1 + sqrt3 j) / 2, both sent
// to (i, i).
struct QuaternionWitness {
    AlgebraTuple first, second;
    AlgebraTuple image_first, image_second;
    double error;       // max componentwise distance of either image from (i, i)
    double separation;  // Euclidean distance between the two preimages

    bool confirmed() const { return error < 1e-12 && separation > 1.0; }
};

QuaternionWitness quaternion_witness();

// psi_x(y) = x - 2 <x, y> y.
HyperPoint psi_eval(const HyperPoint& x, const HyperPoint& y);

// Self-map of S^k given on unit vectors of R^{k+1}.
using SphereMap = std::function<std::vector<double>(std::span<const double>)>;

struct DegreeEstimate {
    double estimate;
    double standard_error;
    std::size_t samples;
};

inline constexpr std::size_t kDegreePartitions = 16;

// Mean over uniform sphere samples of the signed Jacobian determinant of the
// map in oriented orthonormal tangent frames, derivatives by central
// differences (step 1e-5) along great circles. Samples are split over a fixed
// number of partitions with independent seeds and summed in partition order,
// so the result depends only on (samples, seed). Throws InputError for
// fewer than 1000 samples.
DegreeEstimate degree_estimate(const SphereMap& map, std::size_t k, std::size_t sample_count,
                               std::uint64_t seed);

SphereMap psi_map(const HyperPoint& x);
SphereMap antipodal_map();

// Self-map of the n-torus on unit complex coordinates.
using TorusMap = std::function<std::vector<std::complex<double>>(std::span<const std::complex<double>>)>;

inline constexpr std::size_t kDefaultResolution = 1024;

// Integer matrix whose column j records the winding numbers of the image of
// the j-th coordinate loop (base point (1, ..., 1)); entry (s, j) is the
// winding of coordinate s. Each step is refined at its midpoint; a step whose
// halves disagree with the principal phase increment (a jump beyond pi), or
// whose increment exceeds pi/2, is rejected with VerificationError, as is a
// total more than 0.01 from an integer. Requires resolution >= 256.
IntMatrix induced_matrix_on_torus(const TorusMap& map, std::size_t n, std::size_t resolution = kDefaultResolution);

TorusMap p_a_torus_map(const IntMatrix& a);
// (x_1, x_2, ..., x_n) -> (psi_{x_1}(x_2), x_2, ..., x_n) with S^1 in C.
TorusMap lucas_saeki_map(std::size_t n);
// Complex conjugation of coordinate `slot` (1-based) applied before `map`.
TorusMap precompose_reflection(TorusMap map, std::size_t slot);

}  // namespace sphereprod
