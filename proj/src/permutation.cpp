#include "sphereprod/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "sphereprod/errors.hpp"

namespace sphereprod {

Permutation::Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
    if (images_.empty()) throw InputError("permutation must act on at least one point");
    std::vector<bool> seen(images_.size(), false);
    for (auto v : images_) {
        if (v >= images_.size() || seen[v]) throw InputError("permutation images are not a bijection");
        seen[v] = true;
    }
}

Permutation Permutation::identity(std::size_t n) {
    std::vector<std::size_t> v(n);
    std::iota(v.begin(), v.end(), std::size_t{0});
    return Permutation(std::move(v));
}

Permutation Permutation::transposition(std::size_t n, std::size_t a, std::size_t b) {
    if (a < 1 || b < 1 || a > n || b > n || a == b) throw InputError("invalid transposition points");
    auto p = identity(n).images_;
    std::swap(p[a - 1], p[b - 1]);
    return Permutation(std::move(p));
}

Permutation Permutation::from_cycles(std::size_t n, const std::string& cycles) {
    std::vector<std::size_t> img(n);
    std::iota(img.begin(), img.end(), std::size_t{0});
    std::vector<bool> touched(n, false);
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < cycles.size() && std::isspace(static_cast<unsigned char>(cycles[pos]))) ++pos;
    };
    skip_ws();
    while (pos < cycles.size()) {
        if (cycles[pos] != '(') throw InputError("expected '(' in cycle notation: " + cycles);
        ++pos;
        std::vector<std::size_t> cyc;
        for (;;) {
            skip_ws();
            if (pos < cycles.size() && cycles[pos] == ',') {
                ++pos;
                continue;
            }
            if (pos < cycles.size() && cycles[pos] == ')') {
                ++pos;
                break;
            }
            std::size_t start = pos;
            while (pos < cycles.size() && std::isdigit(static_cast<unsigned char>(cycles[pos]))) ++pos;
            if (start == pos) throw InputError("malformed cycle notation: " + cycles);
            const std::size_t point = std::stoul(cycles.substr(start, pos - start));
            if (point < 1 || point > n) throw InputError("cycle point out of range: " + cycles);
            if (touched[point - 1]) throw InputError("cycles must be disjoint: " + cycles);
            touched[point - 1] = true;
            cyc.push_back(point - 1);
        }
        for (std::size_t i = 0; i < cyc.size(); ++i) img[cyc[i]] = cyc[(i + 1) % cyc.size()];
        skip_ws();
    }
    return Permutation(std::move(img));
}

int Permutation::sign() const {
    std::vector<bool> seen(images_.size(), false);
    int s = 1;
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (seen[i]) continue;
        std::size_t len = 0;
        for (std::size_t j = i; !seen[j]; j = images_[j]) {
            seen[j] = true;
            ++len;
        }
        if (len % 2 == 0) s = -s;
    }
    return s;
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (images_[i] != i) return false;
    return true;
}

Permutation Permutation::inverse() const {
    std::vector<std::size_t> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = i;
    return Permutation(std::move(inv));
}

Permutation Permutation::then(const Permutation& q) const {
    if (q.size() != size()) throw InputError("permutation size mismatch");
    std::vector<std::size_t> out(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) out[i] = q.images_[images_[i]];
    return Permutation(std::move(out));
}

IntMatrix Permutation::matrix() const {
    const std::size_t n = images_.size();
    std::vector<Integer> e(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) e[i * n + images_[i]] = 1;
    return IntMatrix(n, std::move(e));
}

std::string Permutation::cycles() const {
    std::ostringstream os;
    std::vector<bool> seen(images_.size(), false);
    bool any = false;
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (seen[i] || images_[i] == i) continue;
        any = true;
        os << '(';
        bool first = true;
        for (std::size_t j = i; !seen[j]; j = images_[j]) {
            seen[j] = true;
            if (!first) os << ' ';
            os << j + 1;
            first = false;
        }
        os << ')';
    }
    return any ? os.str() : "()";
}

std::vector<std::size_t> Permutation::one_based() const {
    std::vector<std::size_t> out(images_);
    for (auto& v : out) ++v;
    return out;
}

std::vector<Permutation> all_permutations(std::size_t n) {
    std::vector<std::size_t> v(n);
    std::iota(v.begin(), v.end(), std::size_t{0});
    std::vector<Permutation> out;
    do {
        out.emplace_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

}  // namespace sphereprod
