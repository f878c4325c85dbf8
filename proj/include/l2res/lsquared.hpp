#pragma once

// The quasi-tree L^2_q on vertices l_{i,j} (1 <= i <= j <= q), its labeled
// induced subcomplex L^2(I) for square-free I, and the face-count bounds on
// the Betti numbers of I^2 that it yields.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "l2res/error.hpp"
#include "l2res/ideal.hpp"
#include "l2res/labeled.hpp"
#include "l2res/simplicial.hpp"
#include "l2res/text.hpp"

namespace l2res {

/// C(n, k) with C(n, k) = 0 for k < 0, n < 0 or k > n. Throws on uint64 overflow.
inline std::uint64_t binomial(std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 acc = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        acc = acc * static_cast<unsigned __int128>(n - k + i) / static_cast<unsigned __int128>(i);
        if (acc > UINT64_MAX) throw std::overflow_error("binomial coefficient exceeds 64 bits");
    }
    return static_cast<std::uint64_t>(acc);
}

/// Vertex l_{i,j} with 1-based indices; l_{j,i} normalizes to l_{i,j}.
struct PairVertex {
    int i;
    int j;

    PairVertex(int a, int b) : i(std::min(a, b)), j(std::max(a, b)) {
        if (i < 1) throw Error("pair vertex indices are 1-based");
    }

    bool diagonal() const noexcept { return i == j; }

    friend bool operator==(const PairVertex&, const PairVertex&) = default;
    friend auto operator<=>(const PairVertex&, const PairVertex&) = default;
};

inline std::size_t num_pair_vertices(int q) { return static_cast<std::size_t>(q) * (q + 1) / 2; }

/// Row-major id: (1,1), (1,2), ..., (1,q), (2,2), ...
inline VertexId pair_vertex_id(PairVertex p, int q) {
    if (p.j > q) throw Error("pair vertex index exceeds q");
    return (p.i - 1) * q - (p.i - 1) * (p.i - 2) / 2 + (p.j - p.i);
}

inline PairVertex pair_vertex_from_id(VertexId id, int q) {
    for (int i = 1; i <= q; ++i) {
        const int row = q - i + 1;
        if (id < row) return PairVertex(i, i + id);
        id -= row;
    }
    throw Error("vertex id out of range for q");
}

namespace detail {

inline void require_l2q_fits(int q) {
    if (q < 1) throw Error("q must be at least 1");
    if (num_pair_vertices(q) > static_cast<std::size_t>(kMaxVertices)) {
        throw ResourceError("L^2_q for q=" + std::to_string(q) + " has more than 64 vertices", kEnumerationCapFlag);
    }
}

}  // namespace detail

/// Facets of L^2_q. For q >= 3 the order is F_0 (all off-diagonal vertices)
/// followed by the rows F_1..F_q; for q <= 2 only the rows.
inline std::vector<Face> l2q_facets(int q) {
    detail::require_l2q_fits(q);
    std::vector<Face> rows;
    for (int i = 1; i <= q; ++i) {
        Face row;
        for (int j = 1; j <= q; ++j) row.insert(pair_vertex_id(PairVertex(i, j), q));
        rows.push_back(row);
    }
    if (q < 3) return rows;
    Face big;
    for (int i = 1; i <= q; ++i) {
        for (int j = i + 1; j <= q; ++j) big.insert(pair_vertex_id(PairVertex(i, j), q));
    }
    rows.insert(rows.begin(), big);
    return rows;
}

inline SimplicialComplex build_l2q(int q) { return SimplicialComplex(l2q_facets(q)); }

/// Bookkeeping of the vertices removed from L^2_q when forming L^2(I).
struct DeletionRecord {
    int q = 0;
    std::vector<PairVertex> deleted;  // sorted
    std::uint64_t s = 0;              ///< surviving vertices = minimal generators of I^2
    std::vector<int> t;               ///< t[i-1] = number of deleted l_{i,j}

    friend bool operator==(const DeletionRecord&, const DeletionRecord&) = default;
};

inline DeletionRecord make_deletion_record(int q, std::vector<PairVertex> deleted) {
    std::sort(deleted.begin(), deleted.end());
    deleted.erase(std::unique(deleted.begin(), deleted.end()), deleted.end());
    DeletionRecord rec;
    rec.q = q;
    rec.t.assign(static_cast<std::size_t>(q), 0);
    for (const auto& p : deleted) {
        if (p.diagonal()) throw std::logic_error("diagonal vertex in deletion record");
        ++rec.t[static_cast<std::size_t>(p.i) - 1];
        ++rec.t[static_cast<std::size_t>(p.j) - 1];
    }
    rec.s = num_pair_vertices(q) - deleted.size();
    rec.deleted = std::move(deleted);
    return rec;
}

struct L2Complex {
    LabeledComplex complex;  ///< vertex ids are pair_vertex_id(l_{i,j}, q)
    DeletionRecord record;
};

/// L^2(I): label l_{i,j} by m_i m_j and delete l_{u,v} whenever some other
/// product m_i m_j properly divides m_u m_v; among equal products the vertex
/// whose index pair holds the smallest index is deleted.
inline L2Complex build_l2i(const MonomialIdeal& ideal) {
    for (const auto& g : ideal.gens()) {
        if (!is_squarefree(g)) {
            throw Error("L^2(I) needs square-free generators; got " + to_string(g, ideal.vars()));
        }
    }
    const int q = static_cast<int>(ideal.size());
    detail::require_l2q_fits(q);

    struct Vertex {
        PairVertex pair;
        Monomial label;
    };
    std::vector<Vertex> verts;
    for (int i = 1; i <= q; ++i) {
        for (int j = i; j <= q; ++j) {
            verts.push_back({PairVertex(i, j), multiply(ideal.gen(static_cast<std::size_t>(i) - 1),
                                                        ideal.gen(static_cast<std::size_t>(j) - 1))});
        }
    }

    std::set<PairVertex> deleted;
    for (std::size_t a = 0; a < verts.size(); ++a) {
        for (std::size_t b = a + 1; b < verts.size(); ++b) {
            const auto& x = verts[a];
            const auto& y = verts[b];
            if (x.label == y.label) {
                // both pairs cannot hold the minimum unless the other indices tie; then the smaller second index goes
                const int mx = x.pair.i;
                const int my = y.pair.i;
                const bool drop_x = mx != my ? mx < my : x.pair.j < y.pair.j;
                deleted.insert(drop_x ? x.pair : y.pair);
            } else if (divides(x.label, y.label)) {
                deleted.insert(y.pair);
            } else if (divides(y.label, x.label)) {
                deleted.insert(x.pair);
            }
        }
    }

    std::map<VertexId, Monomial> labels;
    Face survivors;
    std::vector<Monomial> surviving_labels;
    for (const auto& v : verts) {
        if (deleted.contains(v.pair)) continue;
        const VertexId id = pair_vertex_id(v.pair, q);
        survivors.insert(id);
        labels.emplace(id, v.label);
        surviving_labels.push_back(v.label);
    }

    // The survivors must be exactly the minimal generators of I^2, once each.
    auto expected = ideal_power(ideal, 2).gens();
    std::sort(expected.begin(), expected.end());
    std::sort(surviving_labels.begin(), surviving_labels.end());
    if (expected != surviving_labels) {
        throw std::logic_error("L^2(I) vertex labels disagree with the minimal generators of I^2");
    }

    auto record = make_deletion_record(q, std::vector<PairVertex>(deleted.begin(), deleted.end()));
    return {LabeledComplex(induced_subcomplex(build_l2q(q), survivors), labels, ideal.vars()), std::move(record)};
}

/// Number of d-faces of L^2_q: C(q(q-1)/2, d+1) + q C(q-1, d).
inline std::uint64_t bound_a(int q, int d) {
    if (q < 1) throw Error("q must be at least 1");
    const std::int64_t off_diagonal = static_cast<std::int64_t>(q) * (q - 1) / 2;
    return binomial(off_diagonal, d + 1) + static_cast<std::uint64_t>(q) * binomial(q - 1, d);
}

/// Number of d-faces of L^2(I): C(s-q, d+1) + sum_i C(q-1-t_i, d).
inline std::uint64_t bound_b(const DeletionRecord& record, int d) {
    if (static_cast<int>(record.t.size()) != record.q) throw Error("deletion record inconsistent with q");
    std::uint64_t total = binomial(static_cast<std::int64_t>(record.s) - record.q, d + 1);
    for (int ti : record.t) total += binomial(record.q - 1 - ti, d);
    return total;
}

/// d-faces of a simplex on `vertices` vertices: C(vertices, d+1).
inline std::uint64_t taylor_bound(std::uint64_t vertices, int d) {
    if (vertices < 1) throw Error("Taylor bound needs at least one vertex");
    return binomial(static_cast<std::int64_t>(vertices), d + 1);
}

/// f-vector of L^2_q; enumerated and cross-checked for q <= 6, closed form beyond.
inline FVector l2q_f_vector(int q, const Limits& limits = {}) {
    if (q < 1) throw Error("q must be at least 1");
    FVector closed;
    for (int d = 0;; ++d) {
        const auto n = bound_a(q, d);
        if (n == 0) break;
        closed.push_back(n);
    }
    if (q <= 6) {
        if (f_vector(build_l2q(q), limits) != closed) throw std::logic_error("L^2_q face count formula mismatch");
    }
    return closed;
}

struct BoundRow {
    int d;
    std::uint64_t taylor_largest;  ///< C(q(q+1)/2, d+1)
    std::uint64_t taylor_actual;   ///< C(s, d+1)
    std::uint64_t l2q;             ///< bound_a
    std::uint64_t l2i;             ///< bound_b
    std::optional<std::uint64_t> betti;
};

struct BoundTable {
    int q = 0;
    std::uint64_t s = 0;
    std::vector<BoundRow> rows;
    bool has_betti = false;
};

/// Rows d = 0..q(q-1)/2 comparing the Taylor bounds with bound_a and bound_b;
/// exact β_d(I^2) is filled in when q is within the enumeration cap.
inline BoundTable bound_table(const MonomialIdeal& ideal, const FieldSpec& field = FieldSpec::rational(),
                              const Limits& limits = {}) {
    const auto l2 = build_l2i(ideal);
    const int q = static_cast<int>(ideal.size());
    BoundTable table;
    table.q = q;
    table.s = l2.record.s;

    std::optional<BettiTable> betti;
    if (static_cast<std::size_t>(q) <= limits.max_enumeration_q) {
        try {
            betti = betti_numbers(l2.complex, ideal_power(ideal, 2), field, limits, SupportCheck::kAssume);
        } catch (const ResourceError&) {
            betti.reset();
        }
    }
    table.has_betti = betti.has_value();
    const int last = q * (q - 1) / 2;
    for (int d = 0; d <= last; ++d) {
        BoundRow row{d, taylor_bound(num_pair_vertices(q), d), taylor_bound(l2.record.s, d), bound_a(q, d),
                     bound_b(l2.record, d), std::nullopt};
        if (betti) row.betti = betti->at(d);
        table.rows.push_back(row);
    }
    return table;
}

}  // namespace l2res
