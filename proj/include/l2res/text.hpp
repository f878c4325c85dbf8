#pragma once

// Monomial text syntax.
//
//   single-letter mode:  abe, a^2bc        (every variable is one letter)
//   starred mode:        x1*x2^2*x5        (selected when '*' appears or a
//                                           name carries digits)
//
// An ideal is a comma-separated list of monomials. Variable order is the
// order of first appearance unless an explicit table is supplied.

#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "l2res/error.hpp"
#include "l2res/ideal.hpp"
#include "l2res/monomial.hpp"

namespace l2res {

inline std::string to_string(const Monomial& m, const VariableTable& vars) {
    if (m.size() != vars.size()) throw VariableMismatch("monomial does not match variable table");
    const bool compact = vars.single_letter();
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!compact && !out.empty()) out += '*';
        out += vars.name(i);
        if (m[i] > 1) out += '^' + std::to_string(m[i]);
    }
    return out.empty() ? "1" : out;
}

inline std::string to_string(const MonomialIdeal& ideal) {
    std::string out;
    for (std::size_t i = 0; i < ideal.size(); ++i) {
        if (i) out += ',';
        out += to_string(ideal.gen(i), ideal.vars());
    }
    return out;
}

struct ParsedIdeal {
    MonomialIdeal ideal;
    /// False when duplicates or redundant generators were dropped.
    bool was_minimal = true;
};

namespace detail {

struct Factor {
    std::string name;
    unsigned exponent = 1;
};

struct RawGenerator {
    std::vector<Factor> factors;
    bool unit = false;
    bool zero = false;
    std::size_t position = 0;
};

class MonomialLexer {
public:
    MonomialLexer(std::string_view text, std::size_t offset) : text_(text), offset_(offset) {}

    RawGenerator parse(bool starred) {
        RawGenerator g;
        skip_space();
        g.position = offset_ + pos_;
        if (at_end()) throw ParseError("empty monomial", offset_ + pos_);
        if (text_[pos_] == '1' || text_[pos_] == '0') {
            const char c = text_[pos_++];
            skip_space();
            if (!at_end()) throw ParseError("unexpected character after constant", offset_ + pos_);
            (c == '1' ? g.unit : g.zero) = true;
            return g;
        }
        while (true) {
            skip_space();
            if (at_end()) break;
            Factor f;
            f.name = starred ? read_name() : read_letter();
            skip_space();
            if (!at_end() && text_[pos_] == '^') {
                ++pos_;
                skip_space();
                f.exponent = read_number();
            }
            g.factors.push_back(std::move(f));
            skip_space();
            if (starred) {
                if (at_end()) break;
                if (text_[pos_] != '*') throw ParseError("expected '*' between factors", offset_ + pos_);
                ++pos_;
                skip_space();
                if (at_end()) throw ParseError("dangling '*'", offset_ + pos_);
            }
        }
        return g;
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }

    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    std::string read_letter() {
        const char c = text_[pos_];
        if (!std::isalpha(static_cast<unsigned char>(c))) {
            throw ParseError(std::string("unexpected character '") + c + "'", offset_ + pos_);
        }
        ++pos_;
        return std::string(1, c);
    }

    std::string read_name() {
        const std::size_t start = pos_;
        if (at_end() || !(std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
            throw ParseError("expected a variable name", offset_ + pos_);
        }
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    unsigned read_number() {
        const std::size_t start = pos_;
        unsigned long value = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + static_cast<unsigned>(text_[pos_] - '0');
            if (value > 0xFFFFUL) throw ParseError("exponent too large", offset_ + start);
            ++pos_;
        }
        if (pos_ == start) throw ParseError("expected an exponent after '^'", offset_ + pos_);
        return static_cast<unsigned>(value);
    }

    std::string_view text_;
    std::size_t offset_;
    std::size_t pos_ = 0;
};

inline bool looks_starred(std::string_view text) {
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '*') return true;
        if (i > 0 && std::isdigit(static_cast<unsigned char>(text[i])) &&
            (std::isalpha(static_cast<unsigned char>(text[i - 1])) || text[i - 1] == '_')) {
            return true;
        }
    }
    return false;
}

inline Monomial assemble(const RawGenerator& g, VariableTable& vars, bool table_fixed,
                         std::vector<std::string>& order) {
    std::vector<unsigned> exps(vars.size(), 0);
    for (const auto& f : g.factors) {
        std::size_t idx = vars.find(f.name);
        if (idx == vars.size()) {
            if (table_fixed) throw ParseError("unknown variable '" + f.name + "'", g.position);
            order.push_back(f.name);
            vars = VariableTable(order);
            exps.resize(vars.size(), 0);
        }
        exps[idx] += f.exponent;
        if (exps[idx] > 0xFFFFU) throw ParseError("exponent too large", g.position);
    }
    std::vector<Monomial::Exponent> out(exps.begin(), exps.end());
    return Monomial(std::move(out));
}

}  // namespace detail

/// Parses a single monomial over a fixed table.
inline Monomial parse_monomial(std::string_view text, const VariableTable& vars) {
    const bool starred = !vars.single_letter() || detail::looks_starred(text);
    auto raw = detail::MonomialLexer(text, 0).parse(starred);
    if (raw.zero) throw ParseError("0 is not a monomial", raw.position);
    VariableTable table = vars;
    std::vector<std::string> order = vars.names();
    return detail::assemble(raw, table, true, order);
}

/// Parses "abe,bc,cdf,ad" (or starred form) into a minimally generated ideal.
/// The zero ideal and the unit ideal are rejected.
inline ParsedIdeal parse_ideal(std::string_view text, std::optional<std::vector<std::string>> vars = std::nullopt) {
    const bool starred = detail::looks_starred(text) || (vars && !VariableTable(*vars).single_letter());
    std::vector<detail::RawGenerator> raw;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        const std::size_t stop = comma == std::string_view::npos ? text.size() : comma;
        raw.push_back(detail::MonomialLexer(text.substr(start, stop - start), start).parse(starred));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }

    const bool fixed = vars.has_value();
    std::vector<std::string> order = fixed ? *vars : std::vector<std::string>{};
    VariableTable table(order);
    std::vector<Monomial> gens;
    for (const auto& g : raw) {
        if (g.zero) continue;
        if (g.unit) throw ParseError("the unit ideal is not supported", g.position);
        gens.push_back(detail::assemble(g, table, fixed, order));
    }
    if (gens.empty()) throw ParseError("the zero ideal is not supported", 0);
    for (auto& g : gens) {
        std::vector<Monomial::Exponent> e(g.exponents().begin(), g.exponents().end());
        e.resize(table.size(), 0);
        g = Monomial(std::move(e));
    }
    auto minimal = minimalize(gens);
    const bool was_minimal = minimal.size() == gens.size();
    return {MonomialIdeal(std::move(table), std::move(minimal)), was_minimal};
}

}  // namespace l2res
