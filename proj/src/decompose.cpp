#include "sphereprod/decompose.hpp"

#include <utility>

#include "sphereprod/errors.hpp"
#include "sphereprod/subgroups.hpp"

namespace sphereprod {

namespace {

// Mutable scratch copy of a matrix; row/column operations are recorded by
// the callers as generator letters.
class Work {
public:
    explicit Work(const IntMatrix& a) : n_(a.dim()), v_(a.entries().begin(), a.entries().end()) {}

    Integer& at(std::size_t r, std::size_t c) { return v_[r * n_ + c]; }

    // row r += t * row s  (left multiplication by E(r,s)^t)
    void add_row(std::size_t r, std::size_t s, const Integer& t) {
        for (std::size_t c = 0; c < n_; ++c) v_[r * n_ + c] += t * v_[s * n_ + c];
    }
    // col c += t * col s  (right multiplication by E(s,c)^t)
    void add_col(std::size_t c, std::size_t s, const Integer& t) {
        for (std::size_t r = 0; r < n_; ++r) v_[r * n_ + c] += t * v_[r * n_ + s];
    }

private:
    std::size_t n_;
    std::vector<Integer> v_;
};

// Representative of x modulo 2|y| in (-|y|, |y|]. With x and y of opposite
// parity the bound |r| < |y| is strict.
Integer symmetric_residue(const Integer& x, const Integer& y) {
    const Integer m = 2 * abs(y);
    Integer r = x % m;
    if (r < 0) r += m;
    if (r > abs(y)) r -= m;
    return r;
}

// Exact quotient (r - x) / y, the even multiplier that moves x to r.
Integer even_multiplier(const Integer& x, const Integer& y) {
    Integer t = symmetric_residue(x, y) - x;
    mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), y.get_mpz_t());
    return t;
}

class StepCounter {
public:
    explicit StepCounter(std::size_t cap) : cap_(cap) {}
    void tick() {
        if (++steps_ > cap_) throw LimitError("decomposition exceeded the word-length cap");
    }

private:
    std::size_t cap_;
    std::size_t steps_ = 0;
};

// Left-operation log L_1, ..., L_m with L_m ... L_1 A = D; emits
// L_1^-1 ... L_m^-1 followed by the word for D.
GeneratorWord undo_left_ops(std::size_t n, const std::vector<Letter>& ops) {
    GeneratorWord w(n);
    for (const auto& op : ops) w.append(op.symbol, -op.exponent);
    return w;
}

std::vector<std::size_t> negative_diagonal(Work& w, std::size_t n) {
    std::vector<std::size_t> neg;
    for (std::size_t i = 0; i < n; ++i) {
        const Integer& d = w.at(i, i);
        if (d == -1)
            neg.push_back(i + 1);
        else if (d != 1)
            throw VerificationError("elimination left a non-unit diagonal entry");
    }
    if (neg.size() % 2 != 0) throw VerificationError("elimination left a diagonal of determinant -1");
    return neg;
}

void verify(const GeneratorWord& w, const IntMatrix& a) {
    if (word_to_matrix(w) != a) throw VerificationError("decomposition failed re-multiplication");
}

}  // namespace

GeneratorWord decompose_gamma2(const IntMatrix& a, std::size_t word_cap) {
    if (a.dim() != 2) throw InputError("decompose_gamma2 expects a 2x2 matrix");
    if (!in_congruence(a, 2)) throw MembershipError("matrix is not in Gamma_2(2)");
    Work w(a);
    StepCounter counter(word_cap);
    std::vector<Letter> right;  // A R_1 ... R_m = T
    Integer &ea = w.at(0, 0), &eb = w.at(0, 1), &ec = w.at(1, 0), &ed = w.at(1, 1);
    while (eb != 0 && ec != 0) {
        counter.tick();
        const bool can_a = abs(ea) > abs(eb);
        const bool can_d = abs(ed) > abs(ec);
        const bool reduce_a = can_a && (!can_d || abs(ea) >= abs(ed));
        if (reduce_a) {
            const Integer s = even_multiplier(ea, eb);
            w.add_col(0, 1, s);
            right.push_back({gen::E{2, 1}, s});
        } else if (can_d) {
            const Integer s = even_multiplier(ed, ec);
            w.add_col(1, 0, s);
            right.push_back({gen::E{1, 2}, s});
        } else {
            throw VerificationError("Euclidean step made no progress");
        }
    }
    const Integer eps = ea;
    if (eps != ed || (eps != 1 && eps != -1)) throw VerificationError("triangular residue has bad diagonal");
    GeneratorWord out(2);
    if (eps == -1) out.append(gen::NegI{});
    if (ec == 0)
        out.append(gen::E{1, 2}, eps * eb);
    else
        out.append(gen::E{2, 1}, eps * ec);
    for (auto it = right.rbegin(); it != right.rend(); ++it) out.append(it->symbol, -it->exponent);
    verify(out, a);
    return out;
}

GeneratorWord decompose_gamma_n(const IntMatrix& a, std::size_t word_cap) {
    const std::size_t n = a.dim();
    if (n < 3) throw InputError("decompose_gamma_n expects n >= 3");
    if (!in_congruence(a, 2)) throw MembershipError("matrix is not in Gamma_n(2)");
    Work w(a);
    StepCounter counter(word_cap);
    std::vector<Letter> ops;
    auto row_op = [&](std::size_t r, std::size_t s, const Integer& t) {
        counter.tick();
        w.add_row(r, s, t);
        ops.push_back({gen::E{r + 1, s + 1}, t});
    };
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t r = c + 1; r < n; ++r) {
            while (w.at(r, c) != 0) {
                const Integer p = w.at(c, c);  // odd
                const Integer q = w.at(r, c);  // even
                if (abs(q) > abs(p))
                    row_op(r, c, even_multiplier(q, p));
                else
                    row_op(c, r, even_multiplier(p, q));
            }
        }
        const Integer p = w.at(c, c);
        if (p != 1 && p != -1) throw VerificationError("pivot is not a unit after clearing its column");
        for (std::size_t r = 0; r < c; ++r) {
            const Integer q = w.at(r, c);
            if (q != 0) row_op(r, c, -q * p);
        }
    }
    GeneratorWord out = undo_left_ops(n, ops);
    const auto neg = negative_diagonal(w, n);
    for (std::size_t idx = 0; idx < neg.size(); idx += 2) out.append(jrange_expand(neg[idx], neg[idx + 1], n));
    verify(out, a);
    return out;
}

GeneratorWord decompose_sln(const IntMatrix& a, std::size_t word_cap) {
    const std::size_t n = a.dim();
    if (det(a) != 1) throw MembershipError("matrix is not in SL_n(Z)");
    Work w(a);
    StepCounter counter(word_cap);
    std::vector<Letter> ops;
    auto row_op = [&](std::size_t r, std::size_t s, const Integer& t) {
        if (t == 0) return;
        counter.tick();
        w.add_row(r, s, t);
        ops.push_back({gen::E{r + 1, s + 1}, t});
    };
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t r = c + 1; r < n; ++r) {
            while (w.at(r, c) != 0) {
                Integer t;
                mpz_tdiv_q(t.get_mpz_t(), w.at(c, c).get_mpz_t(), w.at(r, c).get_mpz_t());
                row_op(c, r, -t);
                if (w.at(c, c) == 0) {
                    // move the remaining entry into the pivot slot
                    row_op(c, r, 1);
                    row_op(r, c, -1);
                    break;
                }
                mpz_tdiv_q(t.get_mpz_t(), w.at(r, c).get_mpz_t(), w.at(c, c).get_mpz_t());
                row_op(r, c, -t);
            }
        }
        const Integer p = w.at(c, c);
        if (p != 1 && p != -1) throw VerificationError("pivot is not a unit after clearing its column");
        for (std::size_t r = 0; r < c; ++r) row_op(r, c, -w.at(r, c) * p);
    }
    GeneratorWord out = undo_left_ops(n, ops);
    const auto neg = negative_diagonal(w, n);
    for (std::size_t idx = 0; idx < neg.size(); idx += 2) {
        const std::size_t i = neg[idx], k = neg[idx + 1];
        for (int rep = 0; rep < 2; ++rep) {
            out.append(gen::E{i, k}, 1);
            out.append(gen::E{k, i}, -1);
            out.append(gen::E{i, k}, 1);
        }
    }
    verify(out, a);
    return out;
}

}  // namespace sphereprod
