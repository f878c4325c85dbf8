#include <random>

#include <gtest/gtest.h>

#include "l2res/ideal.hpp"
#include "l2res/text.hpp"
#include "l2res/verify.hpp"
#include "oracles.hpp"

namespace {

using namespace l2res;

MonomialIdeal I(const char* text) { return parse_ideal(text).ideal; }

Monomial M(const char* text, const MonomialIdeal& ideal) { return parse_monomial(text, ideal.vars()); }

Monomial random_monomial(std::mt19937_64& rng, std::size_t n, int max_exp) {
    std::uniform_int_distribution<int> e(0, max_exp);
    Monomial m(n);
    for (std::size_t i = 0; i < n; ++i) m[i] = static_cast<Monomial::Exponent>(e(rng));
    return m;
}

TEST(Monomial, Divides) {
    const auto ex = I("abe,bc,cdf,ad");
    EXPECT_TRUE(divides(M("abe", ex), M("abe", ex)));
    EXPECT_TRUE(divides(M("abcd", ex), M("abcdef", ex)));
    EXPECT_TRUE(divides(multiply(ex.gen(1), ex.gen(3)), multiply(ex.gen(0), ex.gen(2))));

    const auto xyz = I("x,y,z");
    EXPECT_FALSE(divides(M("x^2", xyz), M("xyz", xyz)));
}

TEST(Monomial, LcmAndMultiply) {
    const auto xyz = I("x,y,z");
    EXPECT_EQ(lcm(M("xy", xyz), M("xz", xyz)), M("xyz", xyz));
    EXPECT_EQ(lcm(M("x^2y", xyz), M("x^2y", xyz)), M("x^2y", xyz));
    EXPECT_EQ(multiply(M("x", xyz), M("x", xyz)), M("x^2", xyz));
    EXPECT_EQ(multiply(M("xz", xyz), Monomial(3)), M("xz", xyz));

    const auto ex = I("abe,bc,cdf,ad");
    EXPECT_EQ(lcm(M("abe", ex), M("cdf", ex)), M("abcdef", ex));
    EXPECT_EQ(multiply(M("abe", ex), M("bc", ex)), M("ab^2ce", ex));
}

TEST(Monomial, MismatchedTablesThrow) {
    const Monomial a{1, 0};
    const Monomial b{1, 0, 0};
    EXPECT_THROW(divides(a, b), VariableMismatch);
    EXPECT_THROW(lcm(a, b), VariableMismatch);
    EXPECT_THROW(multiply(a, b), VariableMismatch);
}

TEST(Monomial, Squarefree) {
    const auto ex = I("abe,x");
    EXPECT_TRUE(is_squarefree(M("abe", ex)));
    EXPECT_FALSE(is_squarefree(M("x^2", ex)));
    EXPECT_TRUE(is_squarefree(Monomial(4)));
}

TEST(Monomial, Minimalize) {
    const auto xy = I("x,y");
    const std::vector<Monomial> in{M("x", xy), M("xy", xy), M("y", xy)};
    EXPECT_EQ(minimalize(in), (std::vector<Monomial>{M("x", xy), M("y", xy)}));

    const auto ex = I("abe,bc,cdf,ad");
    EXPECT_EQ(minimalize(ex.gens()), ex.gens());

    // (ab, bc, ad)^2: all six products are pairwise incomparable
    const auto small = I("ab,bc,ad");
    std::vector<Monomial> products;
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = i; j < 3; ++j) products.push_back(multiply(small.gen(i), small.gen(j)));
    }
    EXPECT_EQ(minimalize(products).size(), 6U);

    const std::vector<Monomial> dup{M("x", xy), M("y", xy), M("x", xy)};
    EXPECT_EQ(minimalize(dup), (std::vector<Monomial>{M("x", xy), M("y", xy)}));
    EXPECT_THROW(minimalize(std::vector<Monomial>{}), Error);
}

TEST(MonomialProperty, DividesIsPartialOrder) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 2000; ++trial) {
        const auto a = random_monomial(rng, 3, 2);
        const auto b = random_monomial(rng, 3, 2);
        const auto c = random_monomial(rng, 3, 2);
        EXPECT_TRUE(divides(a, a));
        if (divides(a, b) && divides(b, a)) {
            EXPECT_EQ(a, b);
        }
        if (divides(a, b) && divides(b, c)) {
            EXPECT_TRUE(divides(a, c));
        }
    }
}

TEST(MonomialProperty, LcmIsLeastUpperBound) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 2000; ++trial) {
        const auto a = random_monomial(rng, 4, 3);
        const auto b = random_monomial(rng, 4, 3);
        const auto c = random_monomial(rng, 4, 3);
        const auto l = lcm(a, b);
        EXPECT_TRUE(divides(a, l));
        EXPECT_TRUE(divides(b, l));
        if (divides(a, c) && divides(b, c)) {
            EXPECT_TRUE(divides(l, c));
        }
    }
}

TEST(Ideal, RejectsNonMinimalOrEmpty) {
    const auto xy = I("x,y");
    EXPECT_THROW(MonomialIdeal(xy.vars(), {M("x", xy), M("xy", xy)}), Error);
    EXPECT_THROW(MonomialIdeal(xy.vars(), {}), Error);
    EXPECT_EQ(MonomialIdeal::generated_by(xy.vars(), std::vector<Monomial>{M("xy", xy), M("x", xy)}).size(), 1U);
}

TEST(Ideal, Power) {
    const auto ab = I("ab");
    const auto sq = ideal_power(ab, 2);
    ASSERT_EQ(sq.size(), 1U);
    EXPECT_EQ(sq.gen(0), M("a^2b^2", ab));

    EXPECT_EQ(ideal_power(I("x,y,z,w"), 2).size(), 10U);
    EXPECT_EQ(ideal_power(I("abe,bc,cdf,ad"), 2).size(), 9U);
    EXPECT_EQ(ideal_power(I("x,y,z"), 3).size(), 10U);
    EXPECT_THROW(ideal_power(ab, 0), Error);
}

TEST(Ideal, PowerProductsAreLexicographic) {
    const auto products = power_products(I("a,b,c"), 2);
    ASSERT_EQ(products.size(), 6U);
    EXPECT_EQ(products[0].indices, (std::vector<std::size_t>{0, 0}));
    EXPECT_EQ(products[1].indices, (std::vector<std::size_t>{0, 1}));
    EXPECT_EQ(products[3].indices, (std::vector<std::size_t>{1, 1}));
    EXPECT_EQ(products[5].indices, (std::vector<std::size_t>{2, 2}));
}

TEST(IdealProperty, SquareGeneratorsComeFromProducts) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        const auto ideal = oracle::random_ideal(rng, 6, 1 + trial % 5);
        const auto sq = ideal_power(ideal, 2);
        const auto products = power_products(ideal, 2);
        EXPECT_LE(sq.size(), ideal.size() * (ideal.size() + 1) / 2);
        for (const auto& g : sq.gens()) {
            EXPECT_TRUE(std::any_of(products.begin(), products.end(), [&](const auto& p) { return p.product == g; }));
        }
        for (const auto& p : products) {
            EXPECT_TRUE(std::any_of(sq.gens().begin(), sq.gens().end(), [&](const auto& g) { return divides(g, p.product); }));
        }
    }
}

TEST(Ideal, LcmLattice) {
    const auto ab = I("ab");
    EXPECT_EQ(lcm_lattice(ab).elements(), (std::vector<Monomial>{M("ab", ab)}));

    const auto abc = I("ab,bc");
    const auto lattice = lcm_lattice(abc);
    EXPECT_EQ(lattice.size(), 3U);
    EXPECT_TRUE(lattice.contains(M("ab", abc)));
    EXPECT_TRUE(lattice.contains(M("bc", abc)));
    EXPECT_TRUE(lattice.contains(M("abc", abc)));

    const auto xyz = I("x,y,z");
    const auto seven = lcm_lattice(xyz);
    EXPECT_EQ(seven.size(), 7U);
    // graded order: generators first, then xy, xz, yz, then xyz
    EXPECT_EQ(seven.elements()[3], M("xy", xyz));
    EXPECT_EQ(seven.elements()[4], M("xz", xyz));
    EXPECT_EQ(seven.elements()[6], M("xyz", xyz));
}

TEST(IdealProperty, LatticeClosureMatchesSubsetEnumeration) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t q = 1 + static_cast<std::size_t>(trial % 12);
        const auto ideal = oracle::random_ideal(rng, 8, q);
        EXPECT_EQ(lcm_lattice(ideal), lcm_lattice_by_subsets(ideal, 12));
        // closure under pairwise lcm
        const auto lattice = lcm_lattice(ideal);
        for (const auto& a : lattice) {
            for (const auto& b : lattice) EXPECT_TRUE(lattice.contains(lcm(a, b)));
        }
    }
    // non-square-free too
    const auto sq = ideal_power(oracle::random_ideal(rng, 5, 4), 2);
    EXPECT_EQ(lcm_lattice(sq), lcm_lattice_by_subsets(sq, 12));
}

// m_i^r | m_{u_1}...m_{u_r} (or the reverse) forces every u_k = i.
TEST(IdealProperty, PowerProductRigidity) {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 300; ++trial) {
        std::uniform_int_distribution<std::size_t> nd(1, 7);
        const std::size_t n = nd(rng);
        const std::size_t widest = binomial(static_cast<std::int64_t>(n), static_cast<std::int64_t>(n / 2));
        const std::size_t q = std::uniform_int_distribution<std::size_t>(1, std::min<std::size_t>(5, widest))(rng);
        const auto ideal = oracle::random_ideal(rng, n, q);
        EXPECT_TRUE(power_product_rigidity_holds(ideal)) << to_string(ideal);
        EXPECT_TRUE(irredundant_partner_holds(ideal)) << to_string(ideal);
    }
}

TEST(IdealProperty, RigidityFailsWithoutSquarefreeness) {
    // x^2 and xy: (xy)^2 = x^2 y^2 is divisible by x^2 * y^2? not a generator; use x^2, y^2, xy
    const auto ideal = I("x^2,y^2,xy");
    // (xy)^2 = x^2 * y^2, so the rigidity fact genuinely needs square-free generators
    EXPECT_FALSE(power_product_rigidity_holds(ideal));
}

}  // namespace
