#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "l2res/error.hpp"

namespace l2res {

using VertexId = int;
inline constexpr VertexId kMaxVertices = 64;

/// A set of vertex ids in [0, 64), stored as a bit set.
class Face {
public:
    constexpr Face() = default;
    constexpr explicit Face(std::uint64_t bits) : bits_(bits) {}
    Face(std::initializer_list<VertexId> vertices) {
        for (auto v : vertices) insert(v);
    }
    explicit Face(std::span<const VertexId> vertices) {
        for (auto v : vertices) insert(v);
    }

    static constexpr Face singleton(VertexId v) { return Face(std::uint64_t{1} << v); }

    constexpr std::uint64_t bits() const noexcept { return bits_; }
    constexpr int size() const noexcept { return std::popcount(bits_); }
    constexpr int dim() const noexcept { return size() - 1; }
    constexpr bool empty() const noexcept { return bits_ == 0; }
    constexpr bool contains(VertexId v) const noexcept { return (bits_ >> v) & 1U; }
    constexpr bool subset_of(Face other) const noexcept { return (bits_ & ~other.bits_) == 0; }

    void insert(VertexId v) {
        if (v < 0 || v >= kMaxVertices) throw Error("vertex id " + std::to_string(v) + " outside [0, 64)");
        bits_ |= std::uint64_t{1} << v;
    }

    std::vector<VertexId> vertices() const {
        std::vector<VertexId> out;
        for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b));
        return out;
    }

    constexpr Face operator|(Face o) const noexcept { return Face(bits_ | o.bits_); }
    constexpr Face operator&(Face o) const noexcept { return Face(bits_ & o.bits_); }
    constexpr Face without(Face o) const noexcept { return Face(bits_ & ~o.bits_); }

    friend constexpr bool operator==(Face, Face) = default;
    friend constexpr auto operator<=>(Face, Face) = default;

private:
    std::uint64_t bits_ = 0;
};

/// Calls fn(Face) for every subset of `f`, including the empty set and f itself.
template <class Fn>
void for_each_subface(Face f, Fn&& fn) {
    const std::uint64_t full = f.bits();
    std::uint64_t s = full;
    while (true) {
        fn(Face(s));
        if (s == 0) break;
        s = (s - 1) & full;
    }
}

/// A simplicial complex given by its facets. Facets keep the order in which
/// they were supplied (minus non-maximal and duplicate entries).
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    explicit SimplicialComplex(std::vector<Face> generators) {
        std::erase_if(generators, [](Face f) { return f.empty(); });
        for (std::size_t i = 0; i < generators.size(); ++i) {
            bool maximal = true;
            for (std::size_t j = 0; j < generators.size() && maximal; ++j) {
                if (i == j) continue;
                if (generators[j] == generators[i]) {
                    maximal = j > i;
                } else if (generators[i].subset_of(generators[j])) {
                    maximal = false;
                }
            }
            if (maximal) facets_.push_back(generators[i]);
        }
        for (auto f : facets_) vertices_ = vertices_ | f;
    }

    SimplicialComplex(std::initializer_list<Face> generators) : SimplicialComplex(std::vector<Face>(generators)) {}

    const std::vector<Face>& facets() const noexcept { return facets_; }
    Face vertex_set() const noexcept { return vertices_; }
    int num_vertices() const noexcept { return vertices_.size(); }
    bool empty() const noexcept { return facets_.empty(); }

    /// -1 for the empty complex.
    int dim() const {
        int d = -1;
        for (auto f : facets_) d = std::max(d, f.dim());
        return d;
    }

    bool contains_face(Face f) const {
        return std::any_of(facets_.begin(), facets_.end(), [f](Face g) { return f.subset_of(g); });
    }

    /// Facet sets compared without regard to order.
    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
        auto x = a.facets_;
        auto y = b.facets_;
        std::sort(x.begin(), x.end());
        std::sort(y.begin(), y.end());
        return x == y;
    }

private:
    std::vector<Face> facets_;
    Face vertices_;
};

/// Nonempty faces grouped by dimension; by_dim[d] is sorted.
struct FaceLattice {
    std::vector<std::vector<Face>> by_dim;

    std::uint64_t total() const {
        std::uint64_t n = 0;
        for (const auto& v : by_dim) n += v.size();
        return n;
    }
    int dim() const { return static_cast<int>(by_dim.size()) - 1; }
};

using FVector = std::vector<std::uint64_t>;

/// Groups an arbitrary downward-closed set of nonempty faces by dimension.
inline FaceLattice group_by_dimension(std::vector<Face> faces) {
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    FaceLattice out;
    for (auto f : faces) {
        if (f.empty()) continue;
        const auto d = static_cast<std::size_t>(f.dim());
        if (out.by_dim.size() <= d) out.by_dim.resize(d + 1);
        out.by_dim[d].push_back(f);
    }
    return out;
}

inline FaceLattice faces(const SimplicialComplex& complex, const Limits& limits = {}) {
    std::vector<Face> all;
    for (auto f : complex.facets()) {
        if (f.size() >= 63 || (std::uint64_t{1} << f.size()) - 1 > limits.max_faces) {
            throw ResourceError("facet of dimension " + std::to_string(f.dim()) + " exceeds the face cap",
                                kFaceCapFlag);
        }
        for_each_subface(f, [&](Face s) {
            if (!s.empty()) all.push_back(s);
        });
        if (all.size() > 4 * limits.max_faces) {
            std::sort(all.begin(), all.end());
            all.erase(std::unique(all.begin(), all.end()), all.end());
            if (all.size() > limits.max_faces) throw ResourceError("face enumeration exceeds the face cap", kFaceCapFlag);
        }
    }
    auto lattice = group_by_dimension(std::move(all));
    if (lattice.total() > limits.max_faces) throw ResourceError("face enumeration exceeds the face cap", kFaceCapFlag);
    return lattice;
}

inline FVector f_vector(const FaceLattice& lattice) {
    FVector out;
    for (const auto& v : lattice.by_dim) out.push_back(v.size());
    return out;
}

inline FVector f_vector(const SimplicialComplex& complex, const Limits& limits = {}) {
    return f_vector(faces(complex, limits));
}

/// Faces of `complex` contained in `subset`. Sets `*ignored_outside` when
/// `subset` names vertices that are not in the complex.
inline SimplicialComplex induced_subcomplex(const SimplicialComplex& complex, Face subset,
                                            bool* ignored_outside = nullptr) {
    if (ignored_outside) *ignored_outside = !subset.subset_of(complex.vertex_set());
    std::vector<Face> pieces;
    pieces.reserve(complex.facets().size());
    for (auto f : complex.facets()) pieces.push_back(f & subset);
    return SimplicialComplex(std::move(pieces));
}

inline SimplicialComplex delete_vertex(const SimplicialComplex& complex, VertexId v) {
    if (v < 0 || v >= kMaxVertices || !complex.vertex_set().contains(v)) {
        throw Error("vertex " + std::to_string(v) + " is not in the complex");
    }
    return induced_subcomplex(complex, complex.vertex_set().without(Face::singleton(v)));
}

enum class Connectivity { kEmpty, kConnected, kDisconnected };

/// Union-find over the 1-skeleton (vertices sharing a facet are adjacent).
inline Connectivity connectivity(const SimplicialComplex& complex) {
    if (complex.empty()) return Connectivity::kEmpty;
    std::array<int, kMaxVertices> parent{};
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto f : complex.facets()) {
        const int root = find(std::countr_zero(f.bits()));
        for (auto v : f.vertices()) parent[find(v)] = root;
    }
    const auto verts = complex.vertex_set().vertices();
    const int root = find(verts.front());
    for (auto v : verts) {
        if (find(v) != root) return Connectivity::kDisconnected;
    }
    return Connectivity::kConnected;
}

inline bool is_connected(const SimplicialComplex& complex) { return connectivity(complex) == Connectivity::kConnected; }

struct Leaf {
    std::size_t facet;                 ///< index into the facet list
    std::optional<std::size_t> joint;  ///< empty only when the facet is alone
};

/// Whether facets[index] is a leaf of the complex generated by `facets`;
/// returns a witnessing joint index when it is.
inline std::optional<Leaf> leaf_witness(std::span<const Face> facets, std::size_t index) {
    if (facets.size() == 1) return Leaf{index, std::nullopt};
    const Face f = facets[index];
    Face shared;
    for (std::size_t h = 0; h < facets.size(); ++h) {
        if (h != index) shared = shared | (f & facets[h]);
    }
    for (std::size_t g = 0; g < facets.size(); ++g) {
        if (g != index && shared.subset_of(facets[g])) return Leaf{index, g};
    }
    return std::nullopt;
}

/// Some leaf of the complex (searched from the last facet backwards), or none.
inline std::optional<Leaf> find_leaf(const SimplicialComplex& complex) {
    const auto& fs = complex.facets();
    if (fs.empty()) throw Error("find_leaf on the empty complex");
    for (std::size_t k = fs.size(); k-- > 0;) {
        if (auto leaf = leaf_witness(fs, k)) return leaf;
    }
    return std::nullopt;
}

/// True when each order[i] is a leaf of <order[0], ..., order[i]>.
inline bool is_leaf_order(std::span<const Face> order) {
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (!leaf_witness(order.first(i + 1), i)) return false;
    }
    return true;
}

/// Repeatedly strips a leaf from the remaining facets; the removal sequence
/// reversed is a leaf order. Returns none when the process gets stuck.
inline std::optional<std::vector<Face>> greedy_leaf_order(const SimplicialComplex& complex) {
    std::vector<Face> remaining = complex.facets();
    std::vector<Face> removed;
    while (!remaining.empty()) {
        std::optional<Leaf> leaf;
        for (std::size_t k = remaining.size(); k-- > 0 && !leaf;) leaf = leaf_witness(remaining, k);
        if (!leaf) return std::nullopt;
        removed.push_back(remaining[leaf->facet]);
        remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(leaf->facet));
    }
    std::reverse(removed.begin(), removed.end());
    return removed;
}

/// Exhaustive search over leaf removal sequences, memoizing dead facet subsets.
inline std::optional<std::vector<Face>> backtracking_leaf_order(const SimplicialComplex& complex,
                                                                std::size_t max_facets = 20) {
    const auto& fs = complex.facets();
    const std::size_t n = fs.size();
    if (n > max_facets) {
        throw ResourceError("backtracking quasi-forest search on " + std::to_string(n) + " facets",
                            kEnumerationCapFlag);
    }
    std::vector<char> dead(std::size_t{1} << n, 0);
    std::vector<Face> removed;
    auto search = [&](auto&& self, std::uint32_t alive) -> bool {
        if (alive == 0) return true;
        if (dead[alive]) return false;
        std::vector<Face> current;
        std::vector<std::size_t> ids;
        for (std::size_t i = 0; i < n; ++i) {
            if ((alive >> i) & 1U) {
                current.push_back(fs[i]);
                ids.push_back(i);
            }
        }
        for (std::size_t k = 0; k < current.size(); ++k) {
            if (!leaf_witness(current, k)) continue;
            removed.push_back(current[k]);
            if (self(self, alive & ~(std::uint32_t{1} << ids[k]))) return true;
            removed.pop_back();
        }
        dead[alive] = 1;
        return false;
    };
    if (!search(search, n == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1)) return std::nullopt;
    std::reverse(removed.begin(), removed.end());
    return removed;
}

struct QuasiForestOptions {
    /// Backtracking fallback is attempted only up to this many facets.
    std::size_t backtrack_max_facets = 16;
};

/// A leaf order F_0..F_k witnessing that the complex is a quasi-forest, or none.
/// The empty complex has the empty order.
inline std::optional<std::vector<Face>> quasi_forest_order(const SimplicialComplex& complex,
                                                           const QuasiForestOptions& options = {}) {
    if (auto order = greedy_leaf_order(complex)) return order;
    if (complex.facets().size() <= options.backtrack_max_facets) return backtracking_leaf_order(complex);
    return std::nullopt;
}

}  // namespace l2res
