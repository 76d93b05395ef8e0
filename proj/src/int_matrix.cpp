#include "sphereprod/int_matrix.hpp"

#include <ostream>
#include <sstream>
#include <utility>

#include "sphereprod/errors.hpp"

namespace sphereprod {

IntMatrix::IntMatrix(std::size_t n, std::vector<Integer> entries)
    : n_(n), entries_(std::move(entries)) {
    if (n_ == 0) throw InputError("matrix dimension must be positive");
    if (entries_.size() != n_ * n_) throw InputError("matrix entry count does not match n*n");
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) : n_(rows.size()) {
    if (n_ == 0) throw InputError("matrix dimension must be positive");
    entries_.reserve(n_ * n_);
    for (const auto& r : rows) {
        if (r.size() != n_) throw InputError("matrix rows must have length n");
        for (long v : r) entries_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    std::vector<Integer> e(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) e[i * n + i] = 1;
    return IntMatrix(n, std::move(e));
}

IntMatrix IntMatrix::zero(std::size_t n) { return IntMatrix(n, std::vector<Integer>(n * n, 0)); }

bool IntMatrix::is_identity() const {
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.dim() != b.dim()) throw InputError("matrix dimension mismatch in product");
    const std::size_t n = a.dim();
    std::vector<Integer> out(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const Integer& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < n; ++j) out[i * n + j] += aik * b(k, j);
        }
    return IntMatrix(n, std::move(out));
}

IntMatrix operator-(const IntMatrix& a) {
    std::vector<Integer> out(a.entries().begin(), a.entries().end());
    for (auto& v : out) v = -v;
    return IntMatrix(a.dim(), std::move(out));
}

IntMatrix transpose(const IntMatrix& a) {
    const std::size_t n = a.dim();
    std::vector<Integer> out(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out[j * n + i] = a(i, j);
    return IntMatrix(n, std::move(out));
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) { return a * b; }

IntMatrix mat_pow(const IntMatrix& a, long exponent) {
    IntMatrix base = exponent < 0 ? inverse_unimodular(a) : a;
    unsigned long e = exponent < 0 ? -static_cast<unsigned long>(exponent)
                                   : static_cast<unsigned long>(exponent);
    IntMatrix result = IntMatrix::identity(a.dim());
    while (e != 0) {
        if (e & 1UL) result = result * base;
        e >>= 1;
        if (e != 0) base = base * base;
    }
    return result;
}

namespace {

// Determinant of the submatrix picked out by `rows` x `cols` via Laplace
// expansion along the first listed row.
Integer cofactor_expand(const IntMatrix& a, const std::vector<std::size_t>& rows,
                        const std::vector<std::size_t>& cols) {
    const std::size_t k = rows.size();
    if (k == 1) return a(rows[0], cols[0]);
    if (k == 2)
        return a(rows[0], cols[0]) * a(rows[1], cols[1]) - a(rows[0], cols[1]) * a(rows[1], cols[0]);
    std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
    Integer total = 0;
    for (std::size_t c = 0; c < k; ++c) {
        const Integer& pivot = a(rows[0], cols[c]);
        if (pivot == 0) continue;
        std::vector<std::size_t> sub_cols;
        sub_cols.reserve(k - 1);
        for (std::size_t d = 0; d < k; ++d)
            if (d != c) sub_cols.push_back(cols[d]);
        Integer minor = cofactor_expand(a, sub_rows, sub_cols);
        if (c % 2 == 0)
            total += pivot * minor;
        else
            total -= pivot * minor;
    }
    return total;
}

std::vector<std::size_t> iota_vec(std::size_t n, std::size_t skip = static_cast<std::size_t>(-1)) {
    std::vector<std::size_t> v;
    v.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        if (i != skip) v.push_back(i);
    return v;
}

}  // namespace

Integer det_cofactor(const IntMatrix& a) {
    const auto idx = iota_vec(a.dim());
    return cofactor_expand(a, idx, idx);
}

Integer det_bareiss(const IntMatrix& a) {
    const std::size_t n = a.dim();
    std::vector<Integer> m(a.entries().begin(), a.entries().end());
    auto at = [&](std::size_t i, std::size_t j) -> Integer& { return m[i * n + j]; };
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (at(k, k) == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && at(swap_row, k) == 0) ++swap_row;
            if (swap_row == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(swap_row, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer v = at(i, j) * at(k, k) - at(i, k) * at(k, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                at(i, j) = std::move(v);
            }
            at(i, k) = 0;
        }
        prev = at(k, k);
    }
    Integer d = at(n - 1, n - 1);
    return sign < 0 ? Integer(-d) : d;
}

Integer det(const IntMatrix& a) { return a.dim() <= 4 ? det_cofactor(a) : det_bareiss(a); }

IntMatrix inverse_unimodular(const IntMatrix& a) {
    const std::size_t n = a.dim();
    const Integer d = det(a);
    if (d != 1 && d != -1) throw MembershipError("matrix is not unimodular (det = " + d.get_str() + ")");
    if (n == 1) return IntMatrix(1, {d});
    std::vector<Integer> out(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto rows = iota_vec(n, i);
        for (std::size_t j = 0; j < n; ++j) {
            const auto cols = iota_vec(n, j);
            Integer c = cofactor_expand(a, rows, cols);
            if ((i + j) % 2 != 0) c = -c;
            // adjugate is the transposed cofactor matrix; divide by det = +-1
            out[j * n + i] = d == 1 ? c : Integer(-c);
        }
    }
    return IntMatrix(n, std::move(out));
}

bool hyperbolic_check(const IntMatrix& a) {
    if (a.dim() != 2) throw InputError("hyperbolic_check expects a 2x2 matrix");
    if (det(a) != 1) throw MembershipError("hyperbolic_check expects det = 1");
    Integer trace = a(0, 0) + a(1, 1);
    return abs(trace) > 2;
}

std::string to_text(const IntMatrix& a) {
    std::ostringstream os;
    os << a.dim() << '\n';
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
            if (j) os << ' ';
            os << a(i, j);
        }
        os << '\n';
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& a) {
    os << '[';
    for (std::size_t i = 0; i < a.dim(); ++i) {
        if (i) os << ',';
        os << '[';
        for (std::size_t j = 0; j < a.dim(); ++j) {
            if (j) os << ',';
            os << a(i, j);
        }
        os << ']';
    }
    return os << ']';
}

}  // namespace sphereprod
