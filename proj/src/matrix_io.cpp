#include "sphereprod/matrix_io.hpp"

#include <fstream>
#include <sstream>
#include <string>

#include "sphereprod/errors.hpp"

namespace sphereprod {

namespace {

// Whitespace tokenizer that skips '#' comment lines.
class TokenStream {
public:
    explicit TokenStream(std::istream& in) {
        std::string line;
        while (std::getline(in, line)) {
            auto first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos || line[first] == '#') continue;
            std::istringstream ls(line);
            std::string tok;
            while (ls >> tok) tokens_.push_back(tok);
        }
    }

    bool empty() const { return pos_ == tokens_.size(); }
    const std::string& next() {
        if (empty()) throw InputError("unexpected end of matrix input");
        return tokens_[pos_++];
    }

private:
    std::vector<std::string> tokens_;
    std::size_t pos_ = 0;
};

Integer parse_integer(const std::string& tok) {
    Integer v;
    std::string body = tok;
    if (!body.empty() && body[0] == '+') body.erase(0, 1);
    if (body.empty() || v.set_str(body, 10) != 0) throw InputError("invalid integer token '" + tok + "'");
    return v;
}

IntMatrix next_matrix(TokenStream& ts) {
    const Integer n = parse_integer(ts.next());
    if (n < 1) throw InputError("matrix dimension must be positive");
    if (n > 64) throw InputError("matrix dimension too large");
    const std::size_t dim = n.get_ui();
    std::vector<Integer> e;
    e.reserve(dim * dim);
    for (std::size_t i = 0; i < dim * dim; ++i) e.push_back(parse_integer(ts.next()));
    return IntMatrix(dim, std::move(e));
}

std::ifstream open(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open matrix file '" + path.string() + "'");
    return in;
}

}  // namespace

IntMatrix read_matrix(std::istream& in) {
    TokenStream ts(in);
    IntMatrix m = next_matrix(ts);
    if (!ts.empty()) throw InputError("trailing tokens after matrix");
    return m;
}

IntMatrix parse_matrix(std::string_view text) {
    std::istringstream in{std::string(text)};
    return read_matrix(in);
}

std::vector<IntMatrix> parse_matrices(std::string_view text) {
    std::istringstream in{std::string(text)};
    TokenStream ts(in);
    std::vector<IntMatrix> out;
    while (!ts.empty()) out.push_back(next_matrix(ts));
    if (out.empty()) throw InputError("no matrices in input");
    return out;
}

IntMatrix read_matrix_file(const std::filesystem::path& path) {
    auto in = open(path);
    return read_matrix(in);
}

std::vector<IntMatrix> read_matrices_file(const std::filesystem::path& path) {
    auto in = open(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_matrices(buf.str());
}

}  // namespace sphereprod
