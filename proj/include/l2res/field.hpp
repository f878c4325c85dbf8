#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "l2res/error.hpp"

namespace l2res {

/// Exact arithmetic over Q.
struct RationalField {
    using value_type = mpq_class;

    value_type from_int(long v) const { return value_type(v); }
    bool is_zero(const value_type& a) const { return sgn(a) == 0; }
    value_type sub(const value_type& a, const value_type& b) const { return a - b; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    value_type div(const value_type& a, const value_type& b) const { return a / b; }
};

/// Arithmetic modulo a prime p < 2^31.
struct PrimeField {
    using value_type = std::uint32_t;

    std::uint32_t p;

    value_type from_int(long v) const {
        const long r = v % static_cast<long>(p);
        return static_cast<value_type>(r < 0 ? r + p : r);
    }
    bool is_zero(value_type a) const { return a == 0; }
    value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + (p - b); }
    value_type mul(value_type a, value_type b) const {
        return static_cast<value_type>((std::uint64_t{a} * b) % p);
    }
    value_type inv(value_type a) const {
        // Fermat
        std::uint64_t result = 1, base = a, e = p - 2;
        while (e) {
            if (e & 1) result = result * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return static_cast<value_type>(result);
    }
    value_type div(value_type a, value_type b) const { return mul(a, inv(b)); }
};

/// Which coefficient field homology is computed over.
struct FieldSpec {
    enum class Kind { kRational, kPrime };

    Kind kind = Kind::kRational;
    std::uint32_t prime = 0;

    static FieldSpec rational() { return {}; }
    static FieldSpec gf(std::uint32_t p) {
        if (p < 2 || p >= (std::uint32_t{1} << 31)) throw Error("field characteristic must lie in [2, 2^31)");
        for (std::uint32_t d = 2; std::uint64_t{d} * d <= p; ++d) {
            if (p % d == 0) throw Error("GF(" + std::to_string(p) + ") is not a field: " + std::to_string(p) + " is not prime");
        }
        return {Kind::kPrime, p};
    }

    /// Accepts "rational", "QQ", "gf:p", "gfp".
    static FieldSpec parse(std::string_view text) {
        if (text == "rational" || text == "QQ" || text == "Q") return rational();
        std::string_view digits;
        if (text.starts_with("gf:")) {
            digits = text.substr(3);
        } else if (text.starts_with("gf") || text.starts_with("GF")) {
            digits = text.substr(2);
        } else {
            throw Error("unknown field '" + std::string(text) + "' (expected rational or gf:p)");
        }
        if (digits.empty() || digits.size() > 10 || digits.find_first_not_of("0123456789") != std::string_view::npos) {
            throw Error("bad field characteristic in '" + std::string(text) + "'");
        }
        const auto p = std::stoull(std::string(digits));
        if (p >= (std::uint64_t{1} << 31)) throw Error("field characteristic must lie in [2, 2^31)");
        return gf(static_cast<std::uint32_t>(p));
    }

    std::string to_string() const { return kind == Kind::kRational ? "rational" : "gf:" + std::to_string(prime); }

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// Calls fn(field) with the concrete field object selected by `spec`.
template <class Fn>
decltype(auto) visit_field(const FieldSpec& spec, Fn&& fn) {
    if (spec.kind == FieldSpec::Kind::kPrime) return fn(PrimeField{spec.prime});
    return fn(RationalField{});
}

}  // namespace l2res
