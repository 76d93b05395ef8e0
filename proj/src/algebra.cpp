#include "sphereprod/algebra.hpp"

#include <cmath>
#include <sstream>

#include "sphereprod/errors.hpp"

namespace sphereprod {

namespace {

void check_dim(std::size_t dim) {
    if (dim != 1 && dim != 2 && dim != 4 && dim != 8) throw InputError("algebra dimension must be 1, 2, 4 or 8");
}

// out = a * b on arrays of length len (a power of two), Cayley-Dickson.
void cd_mul(const double* a, const double* b, double* out, std::size_t len) {
    if (len == 1) {
        out[0] = a[0] * b[0];
        return;
    }
    const std::size_t h = len / 2;
    const double *a0 = a, *a1 = a + h, *b0 = b, *b1 = b + h;
    std::array<double, AlgebraElement::kMaxDim> b0c{}, b1c{}, t1{}, t2{};
    for (std::size_t i = 0; i < h; ++i) {
        b0c[i] = i == 0 ? b0[i] : -b0[i];
        b1c[i] = i == 0 ? b1[i] : -b1[i];
    }
    // first half: a0 b0 - conj(b1) a1
    cd_mul(a0, b0, t1.data(), h);
    cd_mul(b1c.data(), a1, t2.data(), h);
    for (std::size_t i = 0; i < h; ++i) out[i] = t1[i] - t2[i];
    // second half: b1 a0 + a1 conj(b0)
    cd_mul(b1, a0, t1.data(), h);
    cd_mul(a1, b0c.data(), t2.data(), h);
    for (std::size_t i = 0; i < h; ++i) out[h + i] = t1[i] + t2[i];
}

}  // namespace

AlgebraElement::AlgebraElement(std::size_t dim) : dim_(dim) { check_dim(dim); }

AlgebraElement::AlgebraElement(std::size_t dim, std::initializer_list<double> components) : dim_(dim) {
    check_dim(dim);
    if (components.size() != dim) throw InputError("component count does not match algebra dimension");
    std::size_t i = 0;
    for (double v : components) c_[i++] = v;
}

AlgebraElement AlgebraElement::one(std::size_t dim) { return unit(dim, 0); }

AlgebraElement AlgebraElement::unit(std::size_t dim, std::size_t index) {
    AlgebraElement out(dim);
    if (index >= dim) throw InputError("basis index out of range");
    out.c_[index] = 1.0;
    return out;
}

double AlgebraElement::norm_squared() const {
    double s = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) s += c_[i] * c_[i];
    return s;
}

double AlgebraElement::norm() const { return std::sqrt(norm_squared()); }

AlgebraElement AlgebraElement::conj() const {
    AlgebraElement out = *this;
    for (std::size_t i = 1; i < dim_; ++i) out.c_[i] = -out.c_[i];
    return out;
}

AlgebraElement AlgebraElement::inverse() const {
    const double n2 = norm_squared();
    if (n2 == 0.0) throw InputError("cannot invert the zero element");
    return conj() * (1.0 / n2);
}

AlgebraElement AlgebraElement::pow(long exponent) const {
    AlgebraElement base = exponent < 0 ? inverse() : *this;
    unsigned long e = exponent < 0 ? -static_cast<unsigned long>(exponent) : static_cast<unsigned long>(exponent);
    AlgebraElement result = one(dim_);
    while (e != 0) {
        if (e & 1UL) result = result * base;
        e >>= 1;
        if (e != 0) base = base * base;
    }
    return result;
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
    if (o.dim_ != dim_) throw InputError("algebra dimension mismatch");
    AlgebraElement out = *this;
    for (std::size_t i = 0; i < dim_; ++i) out.c_[i] += o.c_[i];
    return out;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const { return *this + (-o); }

AlgebraElement AlgebraElement::operator-() const { return *this * -1.0; }

AlgebraElement AlgebraElement::operator*(double s) const {
    AlgebraElement out = *this;
    for (std::size_t i = 0; i < dim_; ++i) out.c_[i] *= s;
    return out;
}

std::string AlgebraElement::to_string() const {
    std::ostringstream os;
    os.precision(17);
    os << '(';
    for (std::size_t i = 0; i < dim_; ++i) os << (i ? ", " : "") << c_[i];
    os << ')';
    return os.str();
}

AlgebraElement algebra_mul(const AlgebraElement& a, const AlgebraElement& b) {
    if (a.dim() != b.dim()) throw InputError("algebra dimension mismatch");
    AlgebraElement out(a.dim());
    std::array<double, AlgebraElement::kMaxDim> ra{}, rb{}, ro{};
    for (std::size_t i = 0; i < a.dim(); ++i) {
        ra[i] = a[i];
        rb[i] = b[i];
    }
    cd_mul(ra.data(), rb.data(), ro.data(), a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) out[i] = ro[i];
    return out;
}

double max_abs_diff(const AlgebraElement& a, const AlgebraElement& b) {
    if (a.dim() != b.dim()) throw InputError("algebra dimension mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

}  // namespace sphereprod
