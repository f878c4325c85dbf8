#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <unordered_set>
#include <vector>

#include "l2res/error.hpp"
#include "l2res/monomial.hpp"

namespace l2res {

/// A monomial ideal presented by its minimal generators m_1..m_q (stored 0-based).
class MonomialIdeal {
public:
    /// `gens` must already be minimal; use generated_by() to minimalize.
    MonomialIdeal(VariableTable vars, std::vector<Monomial> gens) : vars_(std::move(vars)), gens_(std::move(gens)) {
        if (gens_.empty()) throw Error("a monomial ideal needs at least one generator");
        for (const auto& g : gens_) {
            if (g.size() != vars_.size()) {
                throw VariableMismatch("generator has " + std::to_string(g.size()) + " exponents, table has " +
                                       std::to_string(vars_.size()) + " variables");
            }
        }
        if (minimalize(gens_).size() != gens_.size()) {
            throw Error("generators are not a minimal generating set");
        }
    }

    static MonomialIdeal generated_by(VariableTable vars, std::span<const Monomial> gens) {
        return MonomialIdeal(std::move(vars), minimalize(gens));
    }

    const VariableTable& vars() const noexcept { return vars_; }
    const std::vector<Monomial>& gens() const noexcept { return gens_; }
    std::size_t size() const noexcept { return gens_.size(); }
    const Monomial& gen(std::size_t i) const { return gens_.at(i); }

    bool is_squarefree() const {
        return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& m) { return l2res::is_squarefree(m); });
    }

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
    VariableTable vars_;
    std::vector<Monomial> gens_;
};

/// A product of generators together with the nondecreasing index multiset that formed it.
struct IndexedProduct {
    std::vector<std::size_t> indices;
    Monomial product;
};

/// All products of r generators, index multisets in lexicographic order.
inline std::vector<IndexedProduct> power_products(const MonomialIdeal& ideal, std::size_t r) {
    if (r == 0) throw Error("ideal power exponent must be positive");
    const std::size_t q = ideal.size();
    std::vector<IndexedProduct> out;
    std::vector<std::size_t> idx(r, 0);
    while (true) {
        Monomial p = ideal.gen(idx[0]);
        for (std::size_t k = 1; k < r; ++k) p = multiply(p, ideal.gen(idx[k]));
        out.push_back({idx, std::move(p)});
        // next nondecreasing sequence
        std::size_t pos = r;
        while (pos > 0 && idx[pos - 1] == q - 1) --pos;
        if (pos == 0) break;
        const std::size_t v = idx[pos - 1] + 1;
        for (std::size_t k = pos - 1; k < r; ++k) idx[k] = v;
    }
    return out;
}

inline MonomialIdeal ideal_power(const MonomialIdeal& ideal, std::size_t r) {
    auto products = power_products(ideal, r);
    std::vector<Monomial> gens;
    gens.reserve(products.size());
    for (auto& p : products) gens.push_back(std::move(p.product));
    return MonomialIdeal::generated_by(ideal.vars(), gens);
}

/// A deduplicated set of multidegrees, kept in GradedOrder.
class MultidegreeSet {
public:
    MultidegreeSet() = default;
    explicit MultidegreeSet(std::vector<Monomial> elements) : elements_(std::move(elements)) {
        std::sort(elements_.begin(), elements_.end(), GradedOrder{});
        elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
    }

    const std::vector<Monomial>& elements() const noexcept { return elements_; }
    std::size_t size() const noexcept { return elements_.size(); }
    auto begin() const { return elements_.begin(); }
    auto end() const { return elements_.end(); }

    bool contains(const Monomial& m) const {
        return std::binary_search(elements_.begin(), elements_.end(), m, GradedOrder{});
    }

    friend bool operator==(const MultidegreeSet&, const MultidegreeSet&) = default;

private:
    std::vector<Monomial> elements_;
};

/// LCM(I): lcms of all nonempty subsets of the generators, by closure under
/// joining with a single generator.
inline MultidegreeSet lcm_lattice(const MonomialIdeal& ideal) {
    std::unordered_set<Monomial, MonomialHash> seen(ideal.gens().begin(), ideal.gens().end());
    std::deque<Monomial> frontier(ideal.gens().begin(), ideal.gens().end());
    while (!frontier.empty()) {
        Monomial cur = std::move(frontier.front());
        frontier.pop_front();
        for (const auto& g : ideal.gens()) {
            Monomial joined = lcm(cur, g);
            if (seen.insert(joined).second) frontier.push_back(std::move(joined));
        }
    }
    return MultidegreeSet(std::vector<Monomial>(seen.begin(), seen.end()));
}

/// Same set by enumerating all 2^q - 1 subsets. Cross-check only.
inline MultidegreeSet lcm_lattice_by_subsets(const MonomialIdeal& ideal, std::size_t max_q = 20) {
    const std::size_t q = ideal.size();
    if (q > max_q) throw ResourceError("subset enumeration of LCM lattice with q=" + std::to_string(q), kEnumerationCapFlag);
    std::vector<Monomial> by_subset(std::size_t{1} << q);
    by_subset[0] = Monomial(ideal.vars().size());
    for (std::size_t s = 1; s < by_subset.size(); ++s) {
        const auto low = static_cast<std::size_t>(__builtin_ctzll(s));
        by_subset[s] = lcm(by_subset[s & (s - 1)], ideal.gen(low));
    }
    by_subset.erase(by_subset.begin());
    return MultidegreeSet(std::move(by_subset));
}

}  // namespace l2res
