#pragma once

#include <map>

#include "l2res/labeled.hpp"
#include "l2res/text.hpp"

namespace fixture {

using namespace l2res;

inline Face face(std::initializer_list<VertexId> vs) { return Face(std::vector<VertexId>(vs)); }

inline SimplicialComplex hollow_triangle() { return {face({0, 1}), face({1, 2}), face({0, 2})}; }

/// (x^2, y^2, z^2, xy, xz, yz); vertex k carries generator k.
inline MonomialIdeal six_quadrics() { return parse_ideal("x^2,y^2,z^2,xy,xz,yz").ideal; }

/// Big triangle on xy, xz, yz with a triangle hanging off each edge,
/// listed F_0 (the middle) first.
inline LabeledComplex six_quadrics_complex() {
    const auto ideal = six_quadrics();
    std::map<VertexId, Monomial> labels;
    for (std::size_t k = 0; k < ideal.size(); ++k) labels.emplace(static_cast<VertexId>(k), ideal.gen(k));
    SimplicialComplex c{face({3, 4, 5}), face({0, 3, 4}), face({1, 3, 5}), face({2, 4, 5})};
    return LabeledComplex(std::move(c), labels, ideal.vars());
}

/// Complex labeled by the generators of `ideal`, vertex k carrying generator k.
inline LabeledComplex label_by_generators(SimplicialComplex c, const MonomialIdeal& ideal) {
    std::map<VertexId, Monomial> labels;
    for (auto v : c.vertex_set().vertices()) labels.emplace(v, ideal.gen(static_cast<std::size_t>(v)));
    return LabeledComplex(std::move(c), labels, ideal.vars());
}

}  // namespace fixture
