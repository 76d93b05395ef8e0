#include "sphereprod/sampling.hpp"

#include "sphereprod/errors.hpp"

namespace sphereprod {

namespace {

gen::E random_pair(std::size_t n, Rng& rng) {
    std::uniform_int_distribution<std::size_t> pick(1, n);
    std::size_t i = pick(rng), j = pick(rng);
    while (j == i) j = pick(rng);
    return {i, j};
}

int random_sign(Rng& rng) { return std::uniform_int_distribution<int>(0, 1)(rng) == 0 ? -1 : 1; }

}  // namespace

GeneratorWord random_elementary_word(std::size_t n, std::size_t length, Rng& rng) {
    if (n < 2) throw InputError("elementary words need n >= 2");
    GeneratorWord w(n);
    for (std::size_t k = 0; k < length; ++k) w.append(random_pair(n, rng), random_sign(rng));
    return w;
}

IntMatrix random_sln(std::size_t n, Rng& rng) {
    const std::size_t length = std::uniform_int_distribution<std::size_t>(20, 50)(rng);
    return word_to_matrix(random_elementary_word(n, length, rng));
}

GeneratorWord random_gamma2_word(std::size_t length, Rng& rng) {
    GeneratorWord w(2);
    std::uniform_int_distribution<int> pick(0, 4);
    for (std::size_t k = 0; k < length; ++k) {
        switch (pick(rng)) {
            case 0: w.append(gen::E{1, 2}, 2); break;
            case 1: w.append(gen::E{1, 2}, -2); break;
            case 2: w.append(gen::E{2, 1}, 2); break;
            case 3: w.append(gen::E{2, 1}, -2); break;
            default: w.append(gen::NegI{}); break;
        }
    }
    return w;
}

GeneratorWord random_gamma_word(std::size_t n, std::size_t length, Rng& rng) {
    if (n < 2) throw InputError("gamma words need n >= 2");
    GeneratorWord w(n);
    const std::size_t e_letters = n * (n - 1);
    std::uniform_int_distribution<std::size_t> pick(0, e_letters + (n - 1) - 1);
    for (std::size_t k = 0; k < length; ++k) {
        const std::size_t choice = pick(rng);
        if (choice < e_letters)
            w.append(random_pair(n, rng), 2 * random_sign(rng));
        else
            w.append(gen::J{choice - e_letters + 1});
    }
    return w;
}

IntMatrix random_int_matrix(std::size_t n, long lo, long hi, Rng& rng) {
    std::uniform_int_distribution<long> pick(lo, hi);
    std::vector<Integer> e;
    e.reserve(n * n);
    for (std::size_t i = 0; i < n * n; ++i) e.emplace_back(pick(rng));
    return IntMatrix(n, std::move(e));
}

}  // namespace sphereprod
