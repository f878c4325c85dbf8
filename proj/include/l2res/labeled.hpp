#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "l2res/error.hpp"
#include "l2res/homology.hpp"
#include "l2res/ideal.hpp"
#include "l2res/monomial.hpp"
#include "l2res/simplicial.hpp"
#include "l2res/text.hpp"

namespace l2res {

/// A simplicial complex whose vertices carry monomial labels. Faces are
/// labeled by the lcm of their vertex labels.
class LabeledComplex {
public:
    LabeledComplex(SimplicialComplex complex, const std::map<VertexId, Monomial>& labels, VariableTable vars)
        : complex_(std::move(complex)), vars_(std::move(vars)), labels_(kMaxVertices) {
        for (const auto& [v, m] : labels) {
            if (v < 0 || v >= kMaxVertices) throw Error("label for vertex id " + std::to_string(v) + " outside [0, 64)");
            if (m.size() != vars_.size()) throw VariableMismatch("label of vertex " + std::to_string(v) + " has wrong arity");
            labels_[static_cast<std::size_t>(v)] = m;
        }
        for (auto v : complex_.vertex_set().vertices()) {
            if (!labels.contains(v)) throw Error("vertex " + std::to_string(v) + " has no label");
        }
    }

    const SimplicialComplex& complex() const noexcept { return complex_; }
    const VariableTable& vars() const noexcept { return vars_; }

    const Monomial& label(VertexId v) const {
        if (!complex_.vertex_set().contains(v)) throw Error("vertex " + std::to_string(v) + " is not in the complex");
        return labels_[static_cast<std::size_t>(v)];
    }

    /// lcm of the vertex labels; the empty face gets 1.
    Monomial face_label(Face f) const {
        Monomial out(vars_.size());
        for (auto v : f.vertices()) out = lcm(out, label(v));
        return out;
    }

    std::map<VertexId, Monomial> labels() const {
        std::map<VertexId, Monomial> out;
        for (auto v : complex_.vertex_set().vertices()) out.emplace(v, labels_[static_cast<std::size_t>(v)]);
        return out;
    }

    /// Vertices whose label divides `m`.
    Face vertices_dividing(const Monomial& m) const {
        Face out;
        for (auto v : complex_.vertex_set().vertices()) {
            if (divides(labels_[static_cast<std::size_t>(v)], m)) out.insert(v);
        }
        return out;
    }

    /// Same labeled vertices, different face structure.
    LabeledComplex with_complex(SimplicialComplex sub) const {
        LabeledComplex out = *this;
        out.complex_ = std::move(sub);
        return out;
    }

private:
    SimplicialComplex complex_;
    VariableTable vars_;
    std::vector<Monomial> labels_;  // indexed by vertex id
};

struct GradedBetti {
    int d;
    Monomial multidegree;
    std::uint64_t rank;

    friend bool operator==(const GradedBetti&, const GradedBetti&) = default;
};

/// Betti numbers (or bounds) by homological degree, trailing zeros trimmed.
struct BettiTable {
    std::vector<std::uint64_t> total;
    std::optional<std::vector<GradedBetti>> graded;

    std::uint64_t at(int d) const {
        return d >= 0 && static_cast<std::size_t>(d) < total.size() ? total[static_cast<std::size_t>(d)] : 0;
    }

    void trim() {
        while (!total.empty() && total.back() == 0) total.pop_back();
    }

    friend bool operator==(const BettiTable&, const BettiTable&) = default;
};

/// Full simplex on the generators, vertex i labeled m_{i+1}.
inline LabeledComplex taylor_complex(const MonomialIdeal& ideal, const Limits& limits = {}) {
    const std::size_t q = ideal.size();
    if (q > limits.max_taylor_vertices || q > static_cast<std::size_t>(kMaxVertices)) {
        throw ResourceError("Taylor complex on " + std::to_string(q) + " vertices", kTaylorCapFlag);
    }
    std::map<VertexId, Monomial> labels;
    Face all;
    for (std::size_t i = 0; i < q; ++i) {
        labels.emplace(static_cast<VertexId>(i), ideal.gen(i));
        all.insert(static_cast<VertexId>(i));
    }
    return LabeledComplex(SimplicialComplex{all}, labels, ideal.vars());
}

/// Δ_m: induced on the vertices whose labels divide m.
inline LabeledComplex restrict_divides(const LabeledComplex& delta, const Monomial& m) {
    return delta.with_complex(induced_subcomplex(delta.complex(), delta.vertices_dividing(m)));
}

/// Faces of Δ whose label strictly divides m (not an induced subcomplex).
inline FaceLattice strict_faces(const LabeledComplex& delta, const Monomial& m, const Limits& limits = {}) {
    const Face below = delta.vertices_dividing(m);
    const auto candidates = faces(induced_subcomplex(delta.complex(), below), limits);
    // lcm(F) == m iff for every variable in supp(m), F meets the vertices attaining m's exponent.
    std::vector<Face> attaining;
    for (std::size_t k = 0; k < m.size(); ++k) {
        if (m[k] == 0) continue;
        Face hit;
        for (auto v : below.vertices()) {
            if (delta.label(v)[k] == m[k]) hit.insert(v);
        }
        attaining.push_back(hit);
    }
    std::vector<Face> kept;
    for (const auto& layer : candidates.by_dim) {
        for (auto f : layer) {
            const bool reaches = std::all_of(attaining.begin(), attaining.end(), [f](Face a) { return !(a & f).empty(); });
            if (!reaches) kept.push_back(f);
        }
    }
    return group_by_dimension(std::move(kept));
}

/// Maximal elements of a downward-closed face set.
inline std::vector<Face> maximal_faces(const FaceLattice& lattice) {
    std::vector<Face> out;
    Face verts;
    if (!lattice.by_dim.empty()) {
        for (auto v : lattice.by_dim[0]) verts = verts | v;
    }
    for (std::size_t d = lattice.by_dim.size(); d-- > 0;) {
        for (auto f : lattice.by_dim[d]) {
            bool maximal = true;
            if (d + 1 < lattice.by_dim.size()) {
                const auto& up = lattice.by_dim[d + 1];
                for (auto v : verts.without(f).vertices()) {
                    if (std::binary_search(up.begin(), up.end(), f | Face::singleton(v))) {
                        maximal = false;
                        break;
                    }
                }
            }
            if (maximal) out.push_back(f);
        }
    }
    return out;
}

/// Δ_{<m}: the subcomplex of faces whose label strictly divides m.
inline LabeledComplex restrict_strict(const LabeledComplex& delta, const Monomial& m, const Limits& limits = {}) {
    return delta.with_complex(SimplicialComplex(maximal_faces(strict_faces(delta, m, limits))));
}

/// Outcome of a support criterion. On failure `witness` is a multidegree
/// where the criterion breaks and, for the homological test, `degree` is the
/// first nonvanishing reduced homology degree.
struct SupportResult {
    bool supported = true;
    std::optional<Monomial> witness;
    std::optional<int> degree;
};

namespace detail {

inline void require_labels_match(const LabeledComplex& delta, const MonomialIdeal& ideal) {
    if (delta.vars() != ideal.vars()) throw VariableMismatch("complex labels and ideal use different variables");
    std::vector<Monomial> labels;
    for (const auto& [v, m] : delta.labels()) labels.push_back(m);
    std::vector<Monomial> gens = ideal.gens();
    std::sort(labels.begin(), labels.end());
    std::sort(gens.begin(), gens.end());
    if (labels != gens) {
        throw Error("vertex labels are not in bijection with the minimal generators of the ideal");
    }
}

}  // namespace detail

/// For a quasi-forest: Δ supports a resolution iff every Δ_m, m in LCM(I),
/// is empty or connected.
inline SupportResult supports_resolution_quasitree(const LabeledComplex& delta, const MonomialIdeal& ideal) {
    detail::require_labels_match(delta, ideal);
    if (!quasi_forest_order(delta.complex())) {
        throw CriterionInapplicable("the complex is not a quasi-forest; the connectivity criterion does not apply");
    }
    for (const auto& m : lcm_lattice(ideal)) {
        if (connectivity(restrict_divides(delta, m).complex()) == Connectivity::kDisconnected) {
            return {false, m, std::nullopt};
        }
    }
    return {};
}

/// Δ supports a resolution iff every nonempty Δ_m, m in LCM(I), is acyclic over the field.
inline SupportResult supports_resolution_homological(const LabeledComplex& delta, const MonomialIdeal& ideal,
                                                     const FieldSpec& field = FieldSpec::rational(),
                                                     const Limits& limits = {}) {
    detail::require_labels_match(delta, ideal);
    for (const auto& m : lcm_lattice(ideal)) {
        const auto sub = restrict_divides(delta, m).complex();
        if (sub.empty()) continue;
        const auto ranks = reduced_homology_ranks(sub, field, limits);
        for (std::size_t i = 0; i < ranks.size(); ++i) {
            if (ranks[i] != 0) return {false, m, static_cast<int>(i) - 1};
        }
    }
    return {};
}

enum class SupportCheck { kVerify, kAssume };

/// Betti numbers of I from a complex supporting its resolution:
/// β_{d,m} = rank H̃_{d-1}(Δ_{<m}) for m in LCM(I).
inline BettiTable betti_numbers(const LabeledComplex& delta, const MonomialIdeal& ideal,
                                const FieldSpec& field = FieldSpec::rational(), const Limits& limits = {},
                                SupportCheck check = SupportCheck::kVerify) {
    if (check == SupportCheck::kVerify) {
        const auto support = supports_resolution_homological(delta, ideal, field, limits);
        if (!support.supported) {
            throw Error("the complex does not support a resolution of the ideal; witness multidegree " +
                        to_string(*support.witness, ideal.vars()) + " in homological degree " +
                        std::to_string(*support.degree));
        }
    } else {
        detail::require_labels_match(delta, ideal);
    }
    BettiTable table;
    table.graded.emplace();
    for (const auto& m : lcm_lattice(ideal)) {
        const auto ranks = reduced_homology_ranks(strict_faces(delta, m, limits), field);
        for (std::size_t d = 0; d < ranks.size(); ++d) {
            if (ranks[d] == 0) continue;
            if (table.total.size() <= d) table.total.resize(d + 1, 0);
            table.total[d] += ranks[d];
            table.graded->push_back({static_cast<int>(d), m, ranks[d]});
        }
    }
    std::stable_sort(table.graded->begin(), table.graded->end(),
                     [](const GradedBetti& a, const GradedBetti& b) { return a.d < b.d; });
    table.trim();
    return table;
}

/// β_d is bounded by the number of d-faces of any supporting complex.
inline BettiTable betti_upper_bounds(const LabeledComplex& delta, const Limits& limits = {}) {
    BettiTable table;
    table.total = f_vector(delta.complex(), limits);
    table.trim();
    return table;
}

}  // namespace l2res
