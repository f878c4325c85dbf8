#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "l2res/ideal.hpp"
#include "l2res/lsquared.hpp"
#include "l2res/simplicial.hpp"

namespace l2res {

/// Variables a, b, c, ... (n <= 26).
inline VariableTable letter_table(std::size_t n) {
    if (n > 26) throw Error("letter_table supports at most 26 variables");
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.emplace_back(1, static_cast<char>('a' + i));
    return VariableTable(std::move(names));
}

/// q generators, each a uniform nonempty subset of the n variables; the whole
/// set is redrawn until it is a minimal generating set.
inline MonomialIdeal random_squarefree_ideal(std::mt19937_64& rng, std::size_t n, std::size_t q) {
    if (n < 1 || n > 26) throw Error("random ideals need 1 <= n <= 26");
    if (q < 1 || q > binomial(static_cast<std::int64_t>(n), static_cast<std::int64_t>(n / 2))) {
        throw Error("no antichain of " + std::to_string(q) + " subsets of " + std::to_string(n) + " variables");
    }
    std::uniform_int_distribution<std::uint64_t> subset(1, (std::uint64_t{1} << n) - 1);
    std::vector<Monomial> gens(q);
    while (true) {
        for (auto& g : gens) g = Monomial::from_support(n, subset(rng));
        if (minimalize(gens).size() == q) return MonomialIdeal(letter_table(n), gens);
    }
}

/// The sweep model: n uniform in [1, max_n], then q uniform in
/// [1, min(max_q, C(n, n/2))], then random_squarefree_ideal.
inline std::vector<MonomialIdeal> random_sweep_ideals(std::uint64_t seed, std::size_t max_n, std::size_t max_q,
                                                      std::size_t count) {
    if (max_n < 1 || max_q < 1) throw Error("sweep ranges must be positive");
    std::mt19937_64 rng(seed);
    std::vector<MonomialIdeal> out;
    out.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        const auto n = std::uniform_int_distribution<std::size_t>(1, max_n)(rng);
        const auto widest = binomial(static_cast<std::int64_t>(n), static_cast<std::int64_t>(n / 2));
        const auto q = std::uniform_int_distribution<std::size_t>(1, std::min<std::size_t>(max_q, widest))(rng);
        out.push_back(random_squarefree_ideal(rng, n, q));
    }
    return out;
}

/// Random facet complex: `facets` nonempty vertex subsets of [0, vertices).
inline SimplicialComplex random_complex(std::mt19937_64& rng, int vertices, int facets) {
    std::uniform_int_distribution<std::uint64_t> subset(1, (std::uint64_t{1} << vertices) - 1);
    std::vector<Face> fs;
    for (int k = 0; k < facets; ++k) fs.emplace_back(subset(rng));
    return SimplicialComplex(std::move(fs));
}

}  // namespace l2res
