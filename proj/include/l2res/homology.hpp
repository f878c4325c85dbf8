#pragma once

// Reduced simplicial homology ranks by exact sparse elimination of the
// augmented boundary matrices.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "l2res/field.hpp"
#include "l2res/simplicial.hpp"

namespace l2res {

namespace detail {

template <class Value>
struct Entry {
    std::uint32_t row;
    Value value;
};

template <class Value>
using SparseColumn = std::vector<Entry<Value>>;

/// col -= factor * pivot, both sorted by row.
template <class Field>
void eliminate(const Field& field, SparseColumn<typename Field::value_type>& col,
               const SparseColumn<typename Field::value_type>& pivot, const typename Field::value_type& factor,
               SparseColumn<typename Field::value_type>& scratch) {
    scratch.clear();
    auto a = col.begin();
    auto b = pivot.begin();
    while (a != col.end() || b != pivot.end()) {
        if (b == pivot.end() || (a != col.end() && a->row < b->row)) {
            scratch.push_back(std::move(*a++));
        } else if (a == col.end() || b->row < a->row) {
            scratch.push_back({b->row, field.sub(field.from_int(0), field.mul(factor, b->value))});
            ++b;
        } else {
            auto v = field.sub(a->value, field.mul(factor, b->value));
            if (!field.is_zero(v)) scratch.push_back({a->row, std::move(v)});
            ++a;
            ++b;
        }
    }
    col.swap(scratch);
}

inline std::uint32_t face_index(const std::vector<Face>& sorted, Face f) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), f);
    return static_cast<std::uint32_t>(it - sorted.begin());
}

/// Nonempty complexes with a vertex v such that F + v is a face for every face F are cones.
inline bool is_cone(const FaceLattice& lattice) {
    if (lattice.by_dim.empty()) return false;
    Face candidates;
    for (auto v : lattice.by_dim[0]) candidates = candidates | v;
    for (std::size_t d = lattice.by_dim.size(); d-- > 0 && !candidates.empty();) {
        for (auto f : lattice.by_dim[d]) {
            for (auto v : candidates.without(f).vertices()) {
                const Face up = f | Face::singleton(v);
                const bool present = d + 1 < lattice.by_dim.size() &&
                                     std::binary_search(lattice.by_dim[d + 1].begin(), lattice.by_dim[d + 1].end(), up);
                if (!present) candidates = candidates.without(Face::singleton(v));
            }
            if (candidates.empty()) break;
        }
    }
    return !candidates.empty();
}

template <class Field>
std::vector<std::uint64_t> reduced_homology_ranks(const FaceLattice& lattice, const Field& field) {
    using Value = typename Field::value_type;
    const int top = lattice.dim();
    if (top < 0) return {1};  // only the empty face

    std::vector<std::uint64_t> ranks(static_cast<std::size_t>(top) + 2, 0);  // ranks[d+1] = rank of ∂_d
    if (is_cone(lattice)) return std::vector<std::uint64_t>(static_cast<std::size_t>(top) + 2, 0);

    std::vector<char> cleared;  // columns of ∂_d known to reduce to zero
    SparseColumn<Value> col, scratch;
    for (int d = top; d >= 0; --d) {
        const auto& cols = lattice.by_dim[static_cast<std::size_t>(d)];
        const std::size_t num_rows = d == 0 ? 1 : lattice.by_dim[static_cast<std::size_t>(d) - 1].size();
        std::vector<std::int64_t> pivot_of_row(num_rows, -1);
        std::vector<SparseColumn<Value>> reduced;
        std::vector<char> next_cleared(num_rows, 0);
        cleared.resize(cols.size(), 0);

        for (std::size_t c = 0; c < cols.size(); ++c) {
            if (cleared[c]) continue;
            col.clear();
            if (d == 0) {
                col.push_back({0, field.from_int(1)});
            } else {
                const auto& rows = lattice.by_dim[static_cast<std::size_t>(d) - 1];
                int position = 0;
                for (std::uint64_t b = cols[c].bits(); b; b &= b - 1, ++position) {
                    const Face boundary(cols[c].bits() & ~(b & -b));
                    col.push_back({face_index(rows, boundary), field.from_int(position % 2 == 0 ? 1 : -1)});
                }
                std::sort(col.begin(), col.end(), [](const auto& x, const auto& y) { return x.row < y.row; });
            }
            while (!col.empty()) {
                const auto low = col.back().row;
                const auto p = pivot_of_row[low];
                if (p < 0) break;
                const Value factor = col.back().value;
                eliminate(field, col, reduced[static_cast<std::size_t>(p)], factor, scratch);
            }
            if (col.empty()) continue;
            // normalize so the pivot entry is 1
            const Value lead = col.back().value;
            for (auto& e : col) e.value = field.div(e.value, lead);
            pivot_of_row[col.back().row] = static_cast<std::int64_t>(reduced.size());
            next_cleared[col.back().row] = 1;
            reduced.push_back(col);
            ++ranks[static_cast<std::size_t>(d) + 1];
        }
        cleared = std::move(next_cleared);
    }

    std::vector<std::uint64_t> homology(static_cast<std::size_t>(top) + 2, 0);
    for (int d = -1; d <= top; ++d) {
        const std::uint64_t chains = d < 0 ? 1 : lattice.by_dim[static_cast<std::size_t>(d)].size();
        const std::uint64_t out = ranks[static_cast<std::size_t>(d) + 1];
        const std::uint64_t in = d + 2 < static_cast<int>(ranks.size()) ? ranks[static_cast<std::size_t>(d) + 2] : 0;
        homology[static_cast<std::size_t>(d) + 1] = chains - out - in;
    }
    return homology;
}

}  // namespace detail

/// Ranks of H̃_{-1}, H̃_0, ..., H̃_dim over `field` for a downward-closed face set.
inline std::vector<std::uint64_t> reduced_homology_ranks(const FaceLattice& lattice,
                                                         const FieldSpec& field = FieldSpec::rational()) {
    return visit_field(field, [&](const auto& f) { return detail::reduced_homology_ranks(lattice, f); });
}

/// The empty complex yields {1}: its only face is the empty face.
inline std::vector<std::uint64_t> reduced_homology_ranks(const SimplicialComplex& complex,
                                                         const FieldSpec& field = FieldSpec::rational(),
                                                         const Limits& limits = {}) {
    return reduced_homology_ranks(faces(complex, limits), field);
}

}  // namespace l2res
