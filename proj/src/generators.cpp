#include "sphereprod/generators.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

#include "sphereprod/errors.hpp"
#include "sphereprod/subgroups.hpp"

namespace sphereprod {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

bool is_involution(const GeneratorSymbol& s) {
    return std::holds_alternative<gen::J>(s) || std::holds_alternative<gen::JRange>(s) ||
           std::holds_alternative<gen::NegI>(s);
}

void check_index(std::size_t i, std::size_t n, const char* what) {
    if (i < 1 || i > n) throw InputError(std::string(what) + ": index out of range");
}

IntMatrix diagonal_flip(std::size_t n, std::size_t a, std::size_t b) {
    std::vector<Integer> e(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) e[i * n + i] = 1;
    e[(a - 1) * n + (a - 1)] = -1;
    e[(b - 1) * n + (b - 1)] = -1;
    return IntMatrix(n, std::move(e));
}

// Reduces t into [0, period) for a symbol of the given finite order.
unsigned long reduce_exponent(const Integer& t, unsigned long period) {
    Integer r = t % period;
    if (r < 0) r += period;
    return r.get_ui();
}

unsigned long permutation_order(const Permutation& p) {
    unsigned long order = 1;
    std::vector<bool> seen(p.size(), false);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        unsigned long len = 0;
        for (std::size_t j = i; !seen[j]; j = p(j)) {
            seen[j] = true;
            ++len;
        }
        order = std::lcm(order, len);
    }
    return order;
}

}  // namespace

GeneratorWord::GeneratorWord(std::size_t n, std::vector<Letter> letters) : n_(n) {
    for (auto& l : letters) append(std::move(l.symbol), l.exponent);
}

GeneratorWord& GeneratorWord::append(GeneratorSymbol symbol, const Integer& exponent) {
    Integer t = exponent;
    if (!letters_.empty() && letters_.back().symbol == symbol) {
        t += letters_.back().exponent;
        letters_.pop_back();
    }
    if (is_involution(symbol)) t = mpz_odd_p(t.get_mpz_t()) ? 1 : 0;
    if (t != 0) letters_.push_back(Letter{std::move(symbol), std::move(t)});
    return *this;
}

GeneratorWord& GeneratorWord::append(const GeneratorWord& tail) {
    if (tail.n_ != n_) throw InputError("word dimension mismatch");
    for (const auto& l : tail.letters_) append(l.symbol, l.exponent);
    return *this;
}

GeneratorWord GeneratorWord::inverse() const {
    GeneratorWord out(n_);
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.append(it->symbol, -it->exponent);
    return out;
}

IntMatrix symbol_matrix(const GeneratorSymbol& s, std::size_t n) {
    return std::visit(
        overloaded{
            [n](const gen::E& e) {
                check_index(e.i, n, "E");
                check_index(e.j, n, "E");
                if (e.i == e.j) throw InputError("E(i,j) requires i != j");
                const IntMatrix id = IntMatrix::identity(n);
        std::vector<Integer> v(id.entries().begin(), id.entries().end());
                v[(e.i - 1) * n + (e.j - 1)] = 1;
                return IntMatrix(n, std::move(v));
            },
            [n](const gen::J& j) {
                if (j.i < 1 || j.i >= n) throw InputError("J(i) requires 1 <= i < n");
                return diagonal_flip(n, j.i, j.i + 1);
            },
            [n](const gen::JRange& j) {
                check_index(j.i, n, "JR");
                check_index(j.k, n, "JR");
                if (j.i == j.k) throw InputError("JR(i,k) requires i != k");
                return diagonal_flip(n, j.i, j.k);
            },
            [n](const gen::Tau&) { return tau_matrix(n); },
            [n](const gen::PermEven& p) {
                if (p.sigma.size() != n) throw InputError("permutation size does not match dimension");
                if (!p.sigma.is_even()) throw InputError("P(sigma) requires an even permutation");
                return p.sigma.matrix();
            },
            [n](const gen::NegI&) {
                if (n != 2) throw InputError("NEG is only defined for n = 2");
                return -IntMatrix::identity(2);
            },
        },
        s);
}

IntMatrix letter_matrix(const Letter& letter, std::size_t n) {
    const IntMatrix base = symbol_matrix(letter.symbol, n);
    if (const auto* e = std::get_if<gen::E>(&letter.symbol)) {
        const IntMatrix id = IntMatrix::identity(n);
        std::vector<Integer> v(id.entries().begin(), id.entries().end());
        v[(e->i - 1) * n + (e->j - 1)] = letter.exponent;
        return IntMatrix(n, std::move(v));
    }
    unsigned long period = 2;
    if (std::holds_alternative<gen::Tau>(letter.symbol)) period = 4;
    if (const auto* p = std::get_if<gen::PermEven>(&letter.symbol)) period = permutation_order(p->sigma);
    return mat_pow(base, static_cast<long>(reduce_exponent(letter.exponent, period)));
}

IntMatrix word_to_matrix(const GeneratorWord& w) {
    IntMatrix out = IntMatrix::identity(w.dim());
    for (const auto& l : w.letters()) out = out * letter_matrix(l, w.dim());
    return out;
}

bool is_gamma_word(const GeneratorWord& w) {
    for (const auto& l : w.letters()) {
        if (std::holds_alternative<gen::E>(l.symbol)) {
            if (mpz_odd_p(l.exponent.get_mpz_t())) return false;
        } else if (std::holds_alternative<gen::NegI>(l.symbol)) {
            if (w.dim() != 2) return false;
        } else if (!std::holds_alternative<gen::J>(l.symbol) &&
                   !std::holds_alternative<gen::JRange>(l.symbol)) {
            return false;
        }
    }
    return true;
}

std::string to_string(const GeneratorSymbol& s) {
    return std::visit(overloaded{
                          [](const gen::E& e) {
                              return "E(" + std::to_string(e.i) + "," + std::to_string(e.j) + ")";
                          },
                          [](const gen::J& j) { return "J(" + std::to_string(j.i) + ")"; },
                          [](const gen::JRange& j) {
                              return "JR(" + std::to_string(j.i) + "," + std::to_string(j.k) + ")";
                          },
                          [](const gen::Tau&) { return std::string("TAU"); },
                          [](const gen::PermEven& p) { return "P(" + p.sigma.cycles() + ")"; },
                          [](const gen::NegI&) { return std::string("NEG"); },
                      },
                      s);
}

std::string to_string(const Letter& letter) {
    std::string out = to_string(letter.symbol);
    if (std::holds_alternative<gen::E>(letter.symbol) || letter.exponent != 1)
        out += "^" + letter.exponent.get_str();
    return out;
}

std::string to_string(const GeneratorWord& w) {
    if (w.empty()) return "I";
    std::string out;
    for (const auto& l : w.letters()) {
        if (!out.empty()) out += ' ';
        out += to_string(l);
    }
    return out;
}

namespace {

class WordParser {
public:
    WordParser(const std::string& text, std::size_t n) : s_(text), n_(n) {}

    GeneratorWord parse() {
        GeneratorWord w(n_);
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == 'I' && rest_is_ws(pos_ + 1)) return w;
        while (pos_ < s_.size()) {
            GeneratorSymbol sym = symbol();
            Integer t = 1;
            if (pos_ < s_.size() && s_[pos_] == '^') {
                ++pos_;
                t = integer();
            }
            w.append(std::move(sym), t);
            skip_ws();
        }
        return w;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw InputError("cannot parse word at offset " + std::to_string(pos_) + ": " + what);
    }

    bool rest_is_ws(std::size_t from) const {
        for (std::size_t i = from; i < s_.size(); ++i)
            if (!std::isspace(static_cast<unsigned char>(s_[i]))) return false;
        return true;
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool consume(const std::string& lit) {
        if (s_.compare(pos_, lit.size(), lit) == 0) {
            pos_ += lit.size();
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    std::size_t index() {
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected index");
        return std::stoul(s_.substr(start, pos_ - start));
    }

    Integer integer() {
        const std::size_t start = pos_;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        std::string body = s_.substr(start, pos_ - start);
        if (!body.empty() && body[0] == '+') body.erase(0, 1);
        Integer v;
        if (body.empty() || body == "-" || v.set_str(body, 10) != 0) fail("expected exponent");
        return v;
    }

    GeneratorSymbol symbol() {
        if (consume("JR(")) {
            const auto i = index();
            expect(',');
            const auto k = index();
            expect(')');
            return gen::JRange{i, k};
        }
        if (consume("J(")) {
            const auto i = index();
            expect(')');
            return gen::J{i};
        }
        if (consume("E(")) {
            const auto i = index();
            expect(',');
            const auto j = index();
            expect(')');
            return gen::E{i, j};
        }
        if (consume("TAU")) return gen::Tau{};
        if (consume("NEG")) return gen::NegI{};
        if (consume("P(")) {
            const std::size_t start = pos_;
            int depth = 1;
            while (pos_ < s_.size() && depth > 0) {
                if (s_[pos_] == '(') ++depth;
                if (s_[pos_] == ')') --depth;
                ++pos_;
            }
            if (depth != 0) fail("unbalanced P(...)");
            return gen::PermEven{Permutation::from_cycles(n_, s_.substr(start, pos_ - 1 - start))};
        }
        fail("unknown generator");
    }

    const std::string& s_;
    std::size_t n_;
    std::size_t pos_ = 0;
};

}  // namespace

GeneratorWord parse_word(const std::string& text, std::size_t n) {
    GeneratorWord w = WordParser(text, n).parse();
    // validate every symbol against the ambient dimension
    for (const auto& l : w.letters()) (void)symbol_matrix(l.symbol, n);
    return w;
}

GeneratorWord jrange_expand(std::size_t i, std::size_t k, std::size_t n) {
    if (i < 1 || k < 1 || i > n || k > n || i == k) throw InputError("jrange_expand: need 1 <= i != k <= n");
    if (i > k) std::swap(i, k);
    GeneratorWord w(n);
    for (std::size_t m = i; m < k; ++m) w.append(gen::J{m});
    return w;
}

}  // namespace sphereprod
