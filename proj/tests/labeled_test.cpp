#include <random>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "l2res/labeled.hpp"
#include "l2res/lsquared.hpp"
#include "l2res/random.hpp"
#include "oracles.hpp"

namespace {

using namespace l2res;
using fixture::face;

MonomialIdeal I(const char* text) { return parse_ideal(text).ideal; }

std::map<std::pair<int, Monomial>, std::uint64_t> graded_map(const BettiTable& t) {
    std::map<std::pair<int, Monomial>, std::uint64_t> out;
    for (const auto& e : *t.graded) out[{e.d, e.multidegree}] += e.rank;
    return out;
}

TEST(Taylor, Shape) {
    const auto point = taylor_complex(I("ab"));
    EXPECT_EQ(point.complex().num_vertices(), 1);
    EXPECT_EQ(faces(taylor_complex(I("x,y,z")).complex()).total(), 7U);
    const auto sq = ideal_power(I("abe,bc,cdf,ad"), 2);
    const auto t = taylor_complex(sq);
    EXPECT_EQ(t.complex().facets().size(), 1U);
    EXPECT_EQ(t.complex().num_vertices(), 9);
    Limits tight;
    tight.max_taylor_vertices = 3;
    EXPECT_THROW(taylor_complex(sq, tight), ResourceError);
}

TEST(Restrict, Divides) {
    const auto delta = fixture::six_quadrics_complex();
    const auto& vars = delta.vars();
    const auto top = restrict_divides(delta, parse_monomial("x^2y^2z^2", vars));
    EXPECT_EQ(top.complex(), delta.complex());
    // x^2yz is the label of F_1, but yz divides it too, so F_0 comes along
    const auto f1 = restrict_divides(delta, parse_monomial("x^2yz", vars));
    EXPECT_EQ(f1.complex(), (SimplicialComplex{face({0, 3, 4}), face({3, 4, 5})}));
    EXPECT_EQ(f1.face_label(face({0, 3, 4})), parse_monomial("x^2yz", vars));
}

TEST(Restrict, DividesInL2) {
    const auto ideal = I("abe,bc,cdf,ad");
    const auto l2 = build_l2i(ideal);
    const auto m = multiply(ideal.gen(0), ideal.gen(0));
    const auto sub = restrict_divides(l2.complex, m);
    EXPECT_EQ(sub.complex(), (SimplicialComplex{Face::singleton(pair_vertex_id({1, 1}, 4))}));
}

TEST(Restrict, Strict) {
    const auto xy = I("x,y");
    const auto point = fixture::label_by_generators(SimplicialComplex{face({0})}, xy);
    EXPECT_TRUE(restrict_strict(point, xy.gen(0)).complex().empty());

    const auto xyz = I("x,y,z");
    const auto circle = fixture::label_by_generators(fixture::hollow_triangle(), xyz);
    EXPECT_EQ(restrict_strict(circle, parse_monomial("xyz", xyz.vars())).complex(), fixture::hollow_triangle());

    const auto edge = restrict_strict(taylor_complex(xy), parse_monomial("xy", xy.vars()));
    EXPECT_EQ(edge.complex(), (SimplicialComplex{face({0}), face({1})}));
}

TEST(Support, Examples) {
    const auto delta = fixture::six_quadrics_complex();
    const auto ideal = fixture::six_quadrics();
    EXPECT_TRUE(supports_resolution_quasitree(delta, ideal).supported);
    EXPECT_TRUE(supports_resolution_homological(delta, ideal).supported);

    const auto abe = I("abe,bc,cdf,ad");
    const auto l2 = build_l2i(abe);
    EXPECT_TRUE(supports_resolution_quasitree(l2.complex, ideal_power(abe, 2)).supported);
    EXPECT_TRUE(supports_resolution_homological(l2.complex, ideal_power(abe, 2)).supported);

    const auto xyz = I("x,y,z");
    const auto path = fixture::label_by_generators(SimplicialComplex{face({0, 1}), face({2})}, xyz);
    const auto conn = supports_resolution_quasitree(path, xyz);
    EXPECT_FALSE(conn.supported);
    EXPECT_EQ(*conn.witness, parse_monomial("xz", xyz.vars()));

    const auto circle = fixture::label_by_generators(fixture::hollow_triangle(), xyz);
    EXPECT_THROW(supports_resolution_quasitree(circle, xyz), CriterionInapplicable);
    const auto homo = supports_resolution_homological(circle, xyz);
    EXPECT_FALSE(homo.supported);
    EXPECT_EQ(*homo.witness, parse_monomial("xyz", xyz.vars()));
    EXPECT_EQ(*homo.degree, 1);

    const auto j = I("x,y,z,w");
    EXPECT_TRUE(supports_resolution_homological(build_l2i(j).complex, ideal_power(j, 2)).supported);
}

TEST(Support, LabelMismatchThrows) {
    const auto xyz = I("x,y,z");
    const auto path = fixture::label_by_generators(SimplicialComplex{face({0, 1})}, xyz);
    EXPECT_THROW(supports_resolution_homological(path, xyz), Error);
}

TEST(SupportProperty, TaylorAlwaysSupports) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        const auto ideal = oracle::random_ideal(rng, 6, 1 + trial % 6);
        EXPECT_TRUE(supports_resolution_homological(taylor_complex(ideal), ideal).supported);
        const auto sq = ideal_power(ideal, 2);
        if (sq.size() <= 12) {
            EXPECT_TRUE(supports_resolution_homological(taylor_complex(sq), sq).supported);
        }
    }
}

TEST(SupportProperty, CriteriaAgreeOnQuasiForests) {
    std::mt19937_64 rng(37);
    int supported = 0, tested = 0;
    while (tested < 300) {
        const int k = 2 + static_cast<int>(rng() % 5);
        const auto c = random_complex(rng, k, 1 + static_cast<int>(rng() % 4));
        if (c.num_vertices() != k || !quasi_forest_order(c)) continue;
        const auto ideal = oracle::random_ideal(rng, 5, static_cast<std::size_t>(k));
        const auto delta = fixture::label_by_generators(c, ideal);
        const bool a = supports_resolution_quasitree(delta, ideal).supported;
        const bool b = supports_resolution_homological(delta, ideal).supported;
        EXPECT_EQ(a, b) << to_string(ideal);
        supported += a;
        ++tested;
    }
    EXPECT_GT(supported, 10);
    EXPECT_LT(supported, 300);
}

TEST(Betti, Examples) {
    const auto delta = fixture::six_quadrics_complex();
    const auto ideal = fixture::six_quadrics();
    EXPECT_EQ(betti_numbers(delta, ideal).total, (std::vector<std::uint64_t>{6, 8, 3}));
    EXPECT_EQ(betti_upper_bounds(delta).total, (std::vector<std::uint64_t>{6, 9, 4}));

    const auto j = I("x,y,z,w");
    const auto j2 = ideal_power(j, 2);
    EXPECT_EQ(betti_numbers(taylor_complex(j2), j2).total, (std::vector<std::uint64_t>{10, 20, 15, 4}));

    const auto abe = I("abe,bc,cdf,ad");
    const auto abe2 = ideal_power(abe, 2);
    EXPECT_EQ(betti_numbers(build_l2i(abe).complex, abe2).total, (std::vector<std::uint64_t>{9, 14, 6}));
    EXPECT_EQ(betti_upper_bounds(build_l2i(j).complex).total, (std::vector<std::uint64_t>{10, 27, 32, 19, 6, 1}));
}

TEST(Betti, TaylorBoundsAreBinomials) {
    const auto t = betti_upper_bounds(taylor_complex(I("a,b,c,d,e")));
    EXPECT_EQ(t.total, (std::vector<std::uint64_t>{5, 10, 10, 5, 1}));
}

TEST(Betti, UnsupportedComplexThrows) {
    const auto xyz = I("x,y,z");
    const auto circle = fixture::label_by_generators(fixture::hollow_triangle(), xyz);
    EXPECT_THROW(betti_numbers(circle, xyz), Error);
}

TEST(Betti, FieldIndependenceOnExamples) {
    const auto delta = fixture::six_quadrics_complex();
    const auto ideal = fixture::six_quadrics();
    const auto abe = I("abe,bc,cdf,ad");
    const auto j = I("x,y,z,w");
    for (auto field : {FieldSpec::gf(2), FieldSpec::gf(3)}) {
        EXPECT_EQ(betti_numbers(delta, ideal, field), betti_numbers(delta, ideal));
        EXPECT_EQ(betti_numbers(build_l2i(abe).complex, ideal_power(abe, 2), field),
                  betti_numbers(build_l2i(abe).complex, ideal_power(abe, 2)));
        EXPECT_EQ(betti_numbers(build_l2i(j).complex, ideal_power(j, 2), field),
                  betti_numbers(build_l2i(j).complex, ideal_power(j, 2)));
    }
}

// Graded Betti numbers from a supporting complex against the upper Koszul
// complex, which visits every divisor of the top lcm rather than LCM(I).
TEST(BettiProperty, MatchesKoszulOracle) {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 40; ++trial) {
        const auto ideal = oracle::random_ideal(rng, 4, 1 + trial % 4);
        const auto table = betti_numbers(taylor_complex(ideal), ideal);
        EXPECT_EQ(graded_map(table), oracle::koszul_betti(ideal)) << to_string(ideal);
        EXPECT_EQ(table.total, oracle::koszul_totals(ideal));
        EXPECT_EQ(table.at(0), ideal.size());

        if (trial % 4 == 0) {
            const auto sq = ideal_power(ideal, 2);
            const auto l2 = betti_numbers(build_l2i(ideal).complex, sq, FieldSpec::rational(), {}, SupportCheck::kAssume);
            EXPECT_EQ(graded_map(l2), oracle::koszul_betti(sq)) << to_string(ideal);
        }
    }
    const auto six = fixture::six_quadrics();
    EXPECT_EQ(graded_map(betti_numbers(fixture::six_quadrics_complex(), six)), oracle::koszul_betti(six));
}

TEST(BettiProperty, TaylorAndL2Agree) {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 60; ++trial) {
        const auto ideal = oracle::random_ideal(rng, 6, 1 + trial % 5);
        const auto sq = ideal_power(ideal, 2);
        const auto l2 = build_l2i(ideal).complex;
        for (auto field : {FieldSpec::rational(), FieldSpec::gf(2)}) {
            const auto a = betti_numbers(taylor_complex(sq), sq, field, {}, SupportCheck::kAssume);
            const auto b = betti_numbers(l2, sq, field);
            EXPECT_EQ(a, b) << to_string(ideal);
            for (int d = 0; d < 8; ++d) EXPECT_LE(b.at(d), betti_upper_bounds(l2).at(d));
        }
    }
}

}  // namespace
