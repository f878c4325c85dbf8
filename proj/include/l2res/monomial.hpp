#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "l2res/error.hpp"

namespace l2res {

/// Ordered list of distinct variable names; position i is the variable x_i.
class VariableTable {
public:
    VariableTable() = default;

    explicit VariableTable(std::vector<std::string> names) : names_(std::move(names)) {
        for (std::size_t i = 0; i < names_.size(); ++i) {
            if (names_[i].empty()) {
                throw Error("variable names must be nonempty");
            }
            if (!index_.emplace(names_[i], i).second) {
                throw Error("duplicate variable name '" + names_[i] + "'");
            }
        }
    }

    std::size_t size() const noexcept { return names_.size(); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    const std::string& name(std::size_t i) const { return names_.at(i); }

    /// Index of `name`, or size() when absent.
    std::size_t find(const std::string& name) const {
        auto it = index_.find(name);
        return it == index_.end() ? names_.size() : it->second;
    }

    /// True when every name is a single character, which selects the compact text form.
    bool single_letter() const {
        return std::all_of(names_.begin(), names_.end(), [](const std::string& s) { return s.size() == 1; });
    }

    friend bool operator==(const VariableTable& a, const VariableTable& b) { return a.names_ == b.names_; }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, std::size_t> index_;
};

/// Dense exponent vector. The all-zero vector is the monomial 1.
class Monomial {
public:
    using Exponent = std::uint16_t;

    Monomial() = default;
    explicit Monomial(std::size_t num_vars) : exps_(num_vars, 0) {}
    explicit Monomial(std::vector<Exponent> exponents) : exps_(std::move(exponents)) {}
    Monomial(std::initializer_list<Exponent> exponents) : exps_(exponents) {}

    /// Square-free monomial whose support is the bit set `mask` (bit i is x_i).
    static Monomial from_support(std::size_t num_vars, std::uint64_t mask) {
        Monomial m(num_vars);
        for (std::size_t i = 0; i < num_vars && i < 64; ++i) {
            m.exps_[i] = static_cast<Exponent>((mask >> i) & 1U);
        }
        return m;
    }

    std::size_t size() const noexcept { return exps_.size(); }
    Exponent operator[](std::size_t i) const { return exps_[i]; }
    Exponent& operator[](std::size_t i) { return exps_[i]; }
    std::span<const Exponent> exponents() const noexcept { return exps_; }

    std::uint64_t degree() const {
        std::uint64_t d = 0;
        for (auto e : exps_) d += e;
        return d;
    }

    bool is_one() const {
        return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
    }

    /// Bit set of variables with a nonzero exponent. Requires size() <= 64.
    std::uint64_t support() const {
        std::uint64_t mask = 0;
        for (std::size_t i = 0; i < exps_.size(); ++i) {
            if (exps_[i] != 0) mask |= std::uint64_t{1} << i;
        }
        return mask;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;

private:
    std::vector<Exponent> exps_;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept {
        std::size_t h = 0xcbf29ce484222325ULL;
        for (auto e : m.exponents()) {
            h ^= e;
            h *= 0x100000001b3ULL;
        }
        return h;
    }
};

namespace detail {

inline void require_same_table(const Monomial& a, const Monomial& b) {
    if (a.size() != b.size()) {
        throw VariableMismatch("monomials over different variable tables (" + std::to_string(a.size()) +
                               " vs " + std::to_string(b.size()) + " variables)");
    }
}

}  // namespace detail

inline bool divides(const Monomial& a, const Monomial& b) {
    detail::require_same_table(a, b);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) return false;
    }
    return true;
}

/// a | b and a != b.
inline bool strictly_divides(const Monomial& a, const Monomial& b) { return divides(a, b) && a != b; }

inline Monomial lcm(const Monomial& a, const Monomial& b) {
    detail::require_same_table(a, b);
    Monomial out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
    return out;
}

inline Monomial multiply(const Monomial& a, const Monomial& b) {
    detail::require_same_table(a, b);
    Monomial out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        const unsigned sum = unsigned{a[i]} + unsigned{b[i]};
        if (sum > 0xFFFFU) throw Error("exponent overflow in monomial product");
        out[i] = static_cast<Monomial::Exponent>(sum);
    }
    return out;
}

inline bool is_squarefree(const Monomial& m) {
    return std::all_of(m.exponents().begin(), m.exponents().end(), [](auto e) { return e <= 1; });
}

/// Drops every monomial strictly divisible by another entry and collapses exact
/// duplicates onto their first occurrence. Relative order is preserved.
inline std::vector<Monomial> minimalize(std::span<const Monomial> gens) {
    if (gens.empty()) throw Error("cannot minimalize an empty generator list");
    std::vector<Monomial> out;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        bool keep = true;
        for (std::size_t j = 0; j < gens.size() && keep; ++j) {
            if (i == j) continue;
            if (gens[j] == gens[i]) {
                keep = j > i;
            } else if (divides(gens[j], gens[i])) {
                keep = false;
            }
        }
        if (keep) out.push_back(gens[i]);
    }
    return out;
}

/// Degree first, then descending exponent vectors (xy before xz before yz).
struct GradedOrder {
    bool operator()(const Monomial& a, const Monomial& b) const {
        const auto da = a.degree();
        const auto db = b.degree();
        if (da != db) return da < db;
        return b < a;
    }
};

}  // namespace l2res
