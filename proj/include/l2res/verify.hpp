#pragma once

// Invariant suite run over random square-free ideals: L^2(I) is a quasi-forest
// supporting a resolution of I^2 under both criteria, its face counts match
// the closed form and bound the Betti numbers, and the generator-level
// divisibility facts the construction relies on hold.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "l2res/error.hpp"
#include "l2res/field.hpp"
#include "l2res/ideal.hpp"
#include "l2res/labeled.hpp"
#include "l2res/lsquared.hpp"
#include "l2res/random.hpp"
#include "l2res/text.hpp"

namespace l2res {

/// If m_i^r | m_{u_1}...m_{u_r} or the reverse, then every u_k = i (r = 2, 3).
inline bool power_product_rigidity_holds(const MonomialIdeal& ideal) {
    for (std::size_t r = 2; r <= 3; ++r) {
        const auto products = power_products(ideal, r);
        for (std::size_t i = 0; i < ideal.size(); ++i) {
            Monomial power = ideal.gen(i);
            for (std::size_t k = 1; k < r; ++k) power = multiply(power, ideal.gen(i));
            for (const auto& p : products) {
                if (!divides(power, p.product) && !divides(p.product, power)) continue;
                for (auto u : p.indices) {
                    if (u != i) return false;
                }
            }
        }
    }
    return true;
}

/// For q >= 2: every i has a partner j != i such that no m_u m_v with
/// u, v outside {i, j} divides m_i m_j.
inline bool irredundant_partner_holds(const MonomialIdeal& ideal) {
    const std::size_t q = ideal.size();
    if (q < 2) return true;
    for (std::size_t i = 0; i < q; ++i) {
        bool found = false;
        for (std::size_t j = 0; j < q && !found; ++j) {
            if (j == i) continue;
            const Monomial target = multiply(ideal.gen(i), ideal.gen(j));
            bool blocked = false;
            for (std::size_t u = 0; u < q && !blocked; ++u) {
                if (u == i || u == j) continue;
                for (std::size_t v = u; v < q && !blocked; ++v) {
                    if (v == i || v == j) continue;
                    blocked = divides(multiply(ideal.gen(u), ideal.gen(v)), target);
                }
            }
            found = !blocked;
        }
        if (!found) return false;
    }
    return true;
}

struct VerifyOptions {
    FieldSpec field = FieldSpec::rational();
    Limits limits;
    bool taylor_check = false;  ///< also compare Betti numbers against Taylor(I^2)
    bool sharpness = false;     ///< require β(I^2) = f-vector of L^2_q with no deletions
};

struct CheckOutcome {
    std::string name;
    bool passed;
    std::string detail;
};

struct InstanceReport {
    std::size_t index = 0;
    std::string ideal;
    std::vector<CheckOutcome> checks;

    bool passed() const {
        for (const auto& c : checks) {
            if (!c.passed) return false;
        }
        return true;
    }
};

namespace detail {

inline std::string join(const std::vector<std::uint64_t>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + std::to_string(v[i]);
    return out;
}

}  // namespace detail

inline InstanceReport verify_instance(const MonomialIdeal& ideal, const VerifyOptions& options = {},
                                      std::size_t index = 0) {
    InstanceReport report;
    report.index = index;
    report.ideal = to_string(ideal);
    auto record = [&](std::string name, bool ok, std::string detail = {}) {
        report.checks.push_back({std::move(name), ok, std::move(detail)});
        return ok;
    };

    std::optional<L2Complex> l2;
    try {
        l2 = build_l2i(ideal);
        record("l2_construction", true);
    } catch (const std::exception& e) {
        record("l2_construction", false, e.what());
        return report;
    }
    const int q = static_cast<int>(ideal.size());
    const auto square = ideal_power(ideal, 2);
    const auto& delta = l2->complex;
    const auto& rec = l2->record;

    bool diagonal = true;
    for (int i = 1; i <= q; ++i) diagonal = diagonal && delta.complex().vertex_set().contains(pair_vertex_id({i, i}, q));
    record("diagonal_kept", diagonal);

    std::uint64_t t_sum = 0;
    for (int ti : rec.t) t_sum += static_cast<std::uint64_t>(ti);
    record("deletion_record_consistent",
           rec.s == square.size() && rec.s + rec.deleted.size() == num_pair_vertices(q) &&
               t_sum == 2 * rec.deleted.size() &&
               static_cast<std::uint64_t>(delta.complex().num_vertices()) == rec.s);

    record("induced_in_l2q", delta.complex() == induced_subcomplex(build_l2q(q), delta.complex().vertex_set()));

    const auto order = quasi_forest_order(delta.complex());
    record("quasi_forest", order.has_value() && is_leaf_order(*order));

    try {
        const auto conn = supports_resolution_quasitree(delta, square);
        record("support_connectivity", conn.supported,
               conn.witness ? "disconnected at " + to_string(*conn.witness, ideal.vars()) : "");
    } catch (const std::exception& e) {
        record("support_connectivity", false, e.what());
    }
    const auto acyc = supports_resolution_homological(delta, square, options.field, options.limits);
    record("support_acyclicity", acyc.supported,
           acyc.witness ? "homology in degree " + std::to_string(*acyc.degree) + " at " +
                              to_string(*acyc.witness, ideal.vars())
                        : "");

    const auto fv = f_vector(delta.complex(), options.limits);
    bool formula = true;
    for (int d = 0; d <= static_cast<int>(fv.size()); ++d) {
        const std::uint64_t counted = d < static_cast<int>(fv.size()) ? fv[static_cast<std::size_t>(d)] : 0;
        formula = formula && bound_b(rec, d) == counted;
    }
    record("face_count_formula", formula, "f-vector " + detail::join(fv));

    const auto betti = betti_numbers(delta, square, options.field, options.limits, SupportCheck::kAssume);
    bool chain = betti.at(0) == square.size();
    for (int d = 0; d <= static_cast<int>(fv.size()); ++d) {
        chain = chain && betti.at(d) <= bound_b(rec, d) && bound_b(rec, d) <= bound_a(q, d);
    }
    record("bound_chain", chain, "betti " + detail::join(betti.total));

    record("power_product_rigidity", power_product_rigidity_holds(ideal));
    record("irredundant_partner", irredundant_partner_holds(ideal));

    if (options.taylor_check) {
        const auto taylor = betti_numbers(taylor_complex(square, options.limits), square, options.field,
                                          options.limits, SupportCheck::kAssume);
        record("taylor_oracle", taylor == betti, "taylor " + detail::join(taylor.total));
    }
    if (options.sharpness) {
        record("sharpness", rec.deleted.empty() && betti.total == l2q_f_vector(q, options.limits));
    }
    return report;
}

struct SweepConfig {
    std::uint64_t seed = 1;
    std::size_t count = 100;
    std::size_t max_n = 6;
    std::size_t max_q = 4;
    bool fixtures = false;
    VerifyOptions options;
};

struct SweepReport {
    std::vector<InstanceReport> instances;

    std::size_t failures() const {
        std::size_t n = 0;
        for (const auto& r : instances) n += r.passed() ? 0 : 1;
        return n;
    }
};

/// Fixed ideals from the literature appended by `fixtures`.
inline std::vector<std::pair<std::string, bool>> sweep_fixtures() {
    return {{"x,y,z,w", false}, {"abe,bc,cdf,ad", false}, {"xabc,yade,zbdf,wcef", true}};
}

inline SweepReport run_sweep(const SweepConfig& config) {
    if (config.max_q > config.options.limits.max_enumeration_q) {
        throw ResourceError("sweep with q up to " + std::to_string(config.max_q), kEnumerationCapFlag);
    }
    SweepReport report;
    const auto ideals = random_sweep_ideals(config.seed, config.max_n, config.max_q, config.count);
    for (std::size_t k = 0; k < ideals.size(); ++k) {
        report.instances.push_back(verify_instance(ideals[k], config.options, k));
    }
    if (config.fixtures) {
        for (const auto& [text, sharp] : sweep_fixtures()) {
            auto opts = config.options;
            opts.sharpness = sharp;
            report.instances.push_back(verify_instance(parse_ideal(text).ideal, opts, report.instances.size()));
        }
    }
    return report;
}

inline std::string format_sweep(const SweepConfig& config, const SweepReport& report) {
    std::ostringstream out;
    out << "verify seed=" << config.seed << " count=" << config.count << " max-n=" << config.max_n
        << " max-q=" << config.max_q << " field=" << config.options.field.to_string()
        << (config.fixtures ? " fixtures=on" : "") << '\n';
    std::vector<std::string> names;
    std::map<std::string, std::pair<std::size_t, std::size_t>> tally;
    for (const auto& inst : report.instances) {
        for (const auto& c : inst.checks) {
            auto [it, fresh] = tally.try_emplace(c.name, 0, 0);
            if (fresh) names.push_back(c.name);
            it->second.first += c.passed ? 1 : 0;
            ++it->second.second;
        }
    }
    out << "instances " << report.instances.size() << " passed " << report.instances.size() - report.failures()
        << " failed " << report.failures() << '\n';
    for (const auto& name : names) {
        out << "  " << name << std::string(name.size() < 28 ? 28 - name.size() : 1, ' ') << tally[name].first << '/'
            << tally[name].second << '\n';
    }
    for (const auto& inst : report.instances) {
        for (const auto& c : inst.checks) {
            if (c.passed) continue;
            out << "COUNTEREXAMPLE #" << inst.index << " ideal=" << inst.ideal << " check=" << c.name;
            if (!c.detail.empty()) out << " (" << c.detail << ')';
            out << '\n';
        }
    }
    return out.str();
}

}  // namespace l2res
