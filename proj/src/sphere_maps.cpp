#include "sphereprod/sphere_maps.hpp"

#include <cmath>
#include <future>
#include <numbers>
#include <random>

#include <Eigen/Dense>

#include "sphereprod/errors.hpp"

namespace sphereprod {

namespace {

double euclidean_norm(std::span<const double> v) {
    double s = 0.0;
    for (double c : v) s += c * c;
    return std::sqrt(s);
}

long small_entry(const Integer& v) {
    if (!v.fits_slong_p()) throw InputError("matrix entry too large for a map exponent");
    return v.get_si();
}

void check_unit(const AlgebraElement& x) {
    if (std::abs(x.norm() - 1.0) > kUnitTolerance) throw InputError("input is not a unit element");
}

void check_slots(std::size_t i, std::size_t j, std::size_t n) {
    if (i < 1 || j < 1 || i > n || j > n) throw InputError("slot index out of range");
    if (i == j) throw InputError("P_ij requires i != j");
}

}  // namespace

HyperPoint::HyperPoint(std::vector<double> coords) : coords_(std::move(coords)) {
    if (coords_.size() < 2) throw InputError("a point of S^k needs at least two coordinates");
    if (std::abs(euclidean_norm(coords_) - 1.0) > kUnitTolerance) throw InputError("point is not on the unit sphere");
}

HyperPoint HyperPoint::normalized(std::vector<double> v) {
    const double r = euclidean_norm(v);
    if (r == 0.0) throw InputError("cannot normalize the zero vector");
    for (auto& c : v) c /= r;
    return HyperPoint(std::move(v));
}

AlgebraTuple p_a_eval(const IntMatrix& a, const AlgebraTuple& x) {
    const std::size_t n = a.dim();
    if (x.size() != n) throw InputError("tuple length does not match matrix dimension");
    for (const auto& xi : x) {
        if (xi.dim() != 2 && xi.dim() != 4)
            throw InputError("monomial maps need complex or quaternion coordinates");
        if (xi.dim() != x[0].dim()) throw InputError("mixed algebra dimensions");
        check_unit(xi);
    }
    AlgebraTuple out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        AlgebraElement acc = AlgebraElement::one(x[0].dim());
        for (std::size_t s = 0; s < n; ++s) acc = acc * x[s].pow(small_entry(a(i, s)));
        out.push_back(acc);
    }
    return out;
}

AlgebraTuple p_ij_eval(std::size_t i, std::size_t j, const AlgebraTuple& x) {
    check_slots(i, j, x.size());
    AlgebraTuple out = x;
    out[i - 1] = x[i - 1] * x[j - 1];
    return out;
}

AlgebraTuple p_ij_inverse(std::size_t i, std::size_t j, const AlgebraTuple& x) {
    check_slots(i, j, x.size());
    AlgebraTuple out = x;
    out[i - 1] = x[i - 1] * x[j - 1].inverse();
    return out;
}

AlgebraTuple p_word_eval(const GeneratorWord& w, const AlgebraTuple& x) {
    if (x.size() != w.dim()) throw InputError("tuple length does not match word dimension");
    AlgebraTuple out = x;
    const auto& letters = w.letters();
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
        const auto* e = std::get_if<gen::E>(&it->symbol);
        if (e == nullptr) throw InputError("p_word_eval accepts only E(i,j) letters");
        check_slots(e->i, e->j, out.size());
        out[e->i - 1] = out[e->i - 1] * out[e->j - 1].pow(small_entry(it->exponent));
    }
    return out;
}

QuaternionWitness quaternion_witness() {
    const double r3 = std::sqrt(3.0);
    const IntMatrix a{{1, -1}, {-1, 2}};
    QuaternionWitness w;
    w.first = {AlgebraElement(4, {0, -1, 0, 0}), AlgebraElement(4, {-1, 0, 0, 0})};
    w.second = {AlgebraElement(4, {0, 0.5, 0, r3 / 2}), AlgebraElement(4, {0.5, 0, r3 / 2, 0})};
    w.image_first = p_a_eval(a, w.first);
    w.image_second = p_a_eval(a, w.second);
    const AlgebraElement i = AlgebraElement::unit(4, 1);
    w.error = 0.0;
    for (const auto* img : {&w.image_first, &w.image_second})
        for (const auto& c : *img) w.error = std::max(w.error, max_abs_diff(c, i));
    double d2 = 0.0;
    for (std::size_t s = 0; s < 2; ++s) d2 += (w.first[s] - w.second[s]).norm_squared();
    w.separation = std::sqrt(d2);
    return w;
}

HyperPoint psi_eval(const HyperPoint& x, const HyperPoint& y) {
    if (x.k() != y.k()) throw InputError("psi_eval: points on spheres of different dimension");
    double dot = 0.0;
    for (std::size_t i = 0; i <= x.k(); ++i) dot += x[i] * y[i];
    std::vector<double> out(x.k() + 1);
    for (std::size_t i = 0; i <= x.k(); ++i) out[i] = x[i] - 2.0 * dot * y[i];
    return HyperPoint(std::move(out));
}

SphereMap psi_map(const HyperPoint& x) {
    return [x](std::span<const double> y) {
        double dot = 0.0;
        for (std::size_t i = 0; i < y.size(); ++i) dot += x[i] * y[i];
        std::vector<double> out(y.size());
        for (std::size_t i = 0; i < y.size(); ++i) out[i] = x[i] - 2.0 * dot * y[i];
        return out;
    };
}

SphereMap antipodal_map() {
    return [](std::span<const double> y) {
        std::vector<double> out(y.begin(), y.end());
        for (auto& c : out) c = -c;
        return out;
    };
}

namespace {

struct PartialSum {
    double sum = 0.0;
    double sum_sq = 0.0;
};

// Signed Jacobian at y: det [f(y), Df u_1, ..., Df u_k] with (y, u_1..u_k)
// a positively oriented orthonormal basis.
double jacobian_at(const SphereMap& map, const Eigen::VectorXd& y) {
    const Eigen::Index dim = y.size();
    constexpr double h = 1e-5;
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(y);
    Eigen::MatrixXd frame = qr.householderQ() * Eigen::MatrixXd::Identity(dim, dim);
    frame.col(0) = y;
    if (frame.determinant() < 0) frame.col(1) = -frame.col(1);

    auto eval = [&](const Eigen::VectorXd& p) {
        auto v = map(std::span<const double>(p.data(), static_cast<std::size_t>(p.size())));
        return Eigen::Map<const Eigen::VectorXd>(v.data(), dim).eval();
    };
    Eigen::MatrixXd m(dim, dim);
    m.col(0) = eval(y);
    for (Eigen::Index b = 1; b < dim; ++b) {
        const Eigen::VectorXd u = frame.col(b);
        const Eigen::VectorXd plus = std::cos(h) * y + std::sin(h) * u;
        const Eigen::VectorXd minus = std::cos(h) * y - std::sin(h) * u;
        m.col(b) = (eval(plus) - eval(minus)) / (2.0 * h);
    }
    return m.determinant();
}

PartialSum sample_partition(const SphereMap& map, std::size_t k, std::size_t count, std::uint64_t seed,
                            std::size_t partition) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(partition)};
    std::mt19937_64 rng(seq);
    std::normal_distribution<double> gauss(0.0, 1.0);
    PartialSum out;
    Eigen::VectorXd y(static_cast<Eigen::Index>(k + 1));
    for (std::size_t s = 0; s < count; ++s) {
        double r = 0.0;
        do {
            for (Eigen::Index i = 0; i < y.size(); ++i) y[i] = gauss(rng);
            r = y.norm();
        } while (r < 1e-12);
        y /= r;
        const double jac = jacobian_at(map, y);
        out.sum += jac;
        out.sum_sq += jac * jac;
    }
    return out;
}

}  // namespace

DegreeEstimate degree_estimate(const SphereMap& map, std::size_t k, std::size_t sample_count, std::uint64_t seed) {
    if (sample_count < 1000) throw InputError("degree_estimate needs at least 1000 samples");
    if (k < 1) throw InputError("sphere dimension must be positive");
    std::vector<std::future<PartialSum>> parts;
    for (std::size_t p = 0; p < kDegreePartitions; ++p) {
        const std::size_t count =
            sample_count / kDegreePartitions + (p < sample_count % kDegreePartitions ? 1 : 0);
        parts.push_back(std::async(std::launch::async, sample_partition, std::cref(map), k, count, seed, p));
    }
    PartialSum total;
    for (auto& f : parts) {
        const auto part = f.get();
        total.sum += part.sum;
        total.sum_sq += part.sum_sq;
    }
    const double n = static_cast<double>(sample_count);
    const double mean = total.sum / n;
    const double var = std::max(0.0, total.sum_sq / n - mean * mean);
    return {mean, std::sqrt(var / n), sample_count};
}

IntMatrix induced_matrix_on_torus(const TorusMap& map, std::size_t n, std::size_t resolution) {
    if (resolution < 256) throw InputError("winding resolution must be at least 256");
    if (n < 1) throw InputError("torus dimension must be positive");
    constexpr double two_pi = 2.0 * std::numbers::pi;
    std::vector<Integer> entries(n * n);
    std::vector<std::complex<double>> point(n, 1.0);

    auto image_at = [&](std::size_t loop, double theta) {
        point.assign(n, 1.0);
        point[loop] = std::polar(1.0, theta);
        auto img = map(point);
        if (img.size() != n) throw InputError("torus map returned the wrong number of coordinates");
        return img;
    };
    auto phase_step = [](std::complex<double> from, std::complex<double> to) { return std::arg(to / from); };

    for (std::size_t loop = 0; loop < n; ++loop) {
        std::vector<double> total(n, 0.0);
        auto prev = image_at(loop, 0.0);
        for (std::size_t m = 0; m < resolution; ++m) {
            const double t0 = two_pi * static_cast<double>(m) / static_cast<double>(resolution);
            const double t1 = two_pi * static_cast<double>(m + 1) / static_cast<double>(resolution);
            const auto mid = image_at(loop, 0.5 * (t0 + t1));
            const auto next = image_at(loop, t1);
            for (std::size_t s = 0; s < n; ++s) {
                const double full = phase_step(prev[s], next[s]);
                const double halves = phase_step(prev[s], mid[s]) + phase_step(mid[s], next[s]);
                if (std::abs(full - halves) > 1e-6 || std::abs(full) > std::numbers::pi / 2)
                    throw VerificationError("ambiguous phase step (jump beyond pi); raise the resolution");
                total[s] += full;
            }
            prev = next;
        }
        for (std::size_t s = 0; s < n; ++s) {
            const double turns = total[s] / two_pi;
            const double rounded = std::round(turns);
            if (std::abs(turns - rounded) > 0.01) throw VerificationError("winding number is not near an integer");
            entries[s * n + loop] = static_cast<long>(rounded);
        }
    }
    return IntMatrix(n, std::move(entries));
}

TorusMap p_a_torus_map(const IntMatrix& a) {
    return [a](std::span<const std::complex<double>> z) {
        AlgebraTuple x;
        x.reserve(z.size());
        for (auto c : z) x.push_back(AlgebraElement(2, {c.real(), c.imag()}));
        const auto y = p_a_eval(a, x);
        std::vector<std::complex<double>> out;
        out.reserve(y.size());
        for (const auto& e : y) out.emplace_back(e[0], e[1]);
        return out;
    };
}

TorusMap lucas_saeki_map(std::size_t n) {
    if (n < 2) throw InputError("the map needs at least two circle factors");
    return [](std::span<const std::complex<double>> z) {
        std::vector<std::complex<double>> out(z.begin(), z.end());
        const HyperPoint x({z[0].real(), z[0].imag()});
        const HyperPoint y({z[1].real(), z[1].imag()});
        const auto p = psi_eval(x, y);
        out[0] = {p[0], p[1]};
        return out;
    };
}

TorusMap precompose_reflection(TorusMap map, std::size_t slot) {
    if (slot < 1) throw InputError("slot index out of range");
    return [map = std::move(map), slot](std::span<const std::complex<double>> z) {
        if (slot > z.size()) throw InputError("slot index out of range");
        std::vector<std::complex<double>> in(z.begin(), z.end());
        in[slot - 1] = std::conj(in[slot - 1]);
        return map(in);
    };
}

}  // namespace sphereprod
