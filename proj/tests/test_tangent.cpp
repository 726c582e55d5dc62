#include <random>

#include <gtest/gtest.h>

#include <germlab/germ_file.hpp>
#include <germlab/tangent.hpp>

#include "oracles.hpp"

using namespace germlab;

namespace
{

germ_jet germ(std::initializer_list<const char *> comps, unsigned n, unsigned order)
{
    std::vector<jet_poly> v;
    for (const auto *c : comps) {
        v.push_back(parse_jet(c, n, order));
    }
    return germ_jet(std::move(v));
}

const germ_jet cusp = germ({"x1^2", "x1^3"}, 1, 8);

} // namespace

TEST(Tangent, CuspMatchesEnumerationOracle)
{
    for (unsigned k = 2; k <= 7; ++k) {
        const auto r = tangent(cusp, group_id::gl(2), equivalence::ag, k, true);
        EXPECT_EQ(r.codim, oracle::monomial_curve_codim(2, 3, static_cast<int>(k))) << k;
    }
    for (auto [a, b] : {std::pair{2, 5}, std::pair{3, 4}, std::pair{3, 5}}) {
        const auto f = germ_jet({jet_poly::term(1, 9, monomial(1, {unsigned(a)}), rational(1)),
                                 jet_poly::term(1, 9, monomial(1, {unsigned(b)}), rational(1))});
        EXPECT_EQ(tangent(f, group_id::gl(2), equivalence::ag, 8, true).codim, oracle::monomial_curve_codim(a, b, 8));
    }
}

TEST(Tangent, StabilizationFlag)
{
    const auto r = tangent(cusp, group_id::gl(2), equivalence::ag, 4, true);
    ASSERT_TRUE(r.codim_previous.has_value());
    EXPECT_TRUE(r.stabilized);
    EXPECT_EQ(r.codim, 1u);
}

TEST(Tangent, SubmersionHasCodimZero)
{
    const auto f = germ({"x1", "x2"}, 2, 6);
    for (unsigned k = 1; k <= 5; ++k) {
        EXPECT_EQ(tangent(f, group_id::gl(2), equivalence::ag, k, true).codim, 0u);
    }
}

TEST(Tangent, ContainmentChainAndGrassmann)
{
    const unsigned k = 4;
    for (const auto &fx : load_fixtures()) {
        const auto f = germ_for_order(fx, k);
        const auto gl = tangent(f, group_id::gl(fx.p), equivalence::ag, k, false);
        for (const auto &g : catalog_groups(fx.p)) {
            const auto ag = tangent(f, g, equivalence::ag, k, false);
            const auto rxg = tangent(f, g, equivalence::rxg, k, false);
            EXPECT_TRUE(rxg.tangent.is_subspace_of(ag.tangent)) << fx.name << " " << g.spec();
            EXPECT_TRUE(ag.tangent.is_subspace_of(gl.tangent)) << fx.name << " " << g.spec();
            const auto tf = tf_image(f, k, false);
            const auto om = omega_image(f, g, k, false);
            EXPECT_EQ(ag.tangent_dim, tf.dim() + om.dim() - subspace_intersection(tf, om).dim());
        }
    }
}

TEST(Tangent, RequiresLongEnoughGerm)
{
    const auto short_cusp = germ({"x1^2", "x1^3"}, 1, 4);
    EXPECT_THROW(tangent(short_cusp, group_id::so(2), equivalence::ag, 4, false), user_error);
    EXPECT_NO_THROW(tangent(short_cusp.with_order(5), group_id::so(2), equivalence::ag, 4, false));
    EXPECT_THROW(tangent(cusp, group_id::so(3), equivalence::ag, 4, false), user_error);
}

TEST(Moduli, SpecialOrthogonalVanishes)
{
    const auto m = moduli(cusp, moduli_pair::ag_vs_rxg, group_id::so(2), std::nullopt, 5);
    EXPECT_EQ(m.dim, 0u);
    EXPECT_TRUE(m.subspaces_equal);
    EXPECT_TRUE(m.exact_sequence_ok);
}

TEST(Moduli, BoundedBySubgroupCodimension)
{
    const auto f = germ({"x1", "x1*x2 + x2^3"}, 2, 7);
    const auto m = moduli(f, moduli_pair::rxg_vs_rxh, group_id::gl(2), group_id::sl(2), 5);
    ASSERT_TRUE(m.bound.has_value());
    EXPECT_EQ(*m.bound, 1u);
    EXPECT_LE(m.dim, 1u);
    EXPECT_TRUE(m.exact_sequence_ok);
}

TEST(Moduli, NeedsAValidSubgroup)
{
    EXPECT_THROW(moduli(cusp, moduli_pair::ag_vs_ah, group_id::sl(2), std::nullopt, 4), user_error);
    EXPECT_THROW(moduli(cusp, moduli_pair::ag_vs_ah, group_id::sl(2), group_id::gl(2), 4), user_error);
}

TEST(Moduli, GeneralLinearAgainstSpecialLinear)
{
    // A[GL(2)] vs A[SL(2)] on the cusp: the scaling field is the only candidate.
    const auto m = moduli(cusp, moduli_pair::ag_vs_ah, group_id::gl(2), group_id::sl(2), 5);
    EXPECT_TRUE(m.exact_sequence_ok);
    EXPECT_EQ(m.dim, m.group_part_quotient - m.intersection_quotient);
}

TEST(Rigidity, LinearOnlyGroupsGiveEqualTangentSpaces)
{
    std::vector<std::pair<std::string, germ_jet>> samples{{"cusp", cusp},
                                                          {"fold", germ({"x1", "x2^2"}, 2, 6)}};
    const auto r = rigidity(group_id::so(2), 4, samples);
    EXPECT_TRUE(r.linearity.linear_only);
    EXPECT_EQ(r.rows.size(), 2u);
    EXPECT_TRUE(r.consistent);
    EXPECT_TRUE(rigidity(group_id::sl(2), 4, samples).rows.empty());
}

TEST(Growth, CuspUnderRotationsGrows)
{
    const auto r = growth_probe(cusp, group_id::so(2), equivalence::ag, 6, true);
    EXPECT_TRUE(r.strictly_increasing);
    EXPECT_EQ(r.codims.size(), 5u);
    EXPECT_THROW(growth_probe(cusp, group_id::so(2), equivalence::ag, 1, true), user_error);
}

TEST(Growth, SubmersionDoesNotGrow)
{
    const auto r = growth_probe(germ({"x1", "x2"}, 2, 7), group_id::gl(2), equivalence::ag, 6, true);
    EXPECT_FALSE(r.strictly_increasing);
    for (const auto &[k, c] : r.codims) {
        EXPECT_EQ(c, 0u);
    }
}

TEST(Growth, CurveUnderTrivialGroupGrows)
{
    EXPECT_TRUE(growth_probe(cusp, group_id::trivial(2), equivalence::rxg, 6, true).strictly_increasing);
}

TEST(Action, TransformedGermKeepsInvariants)
{
    group_sampler s(3);
    std::mt19937_64 rng(4);
    const auto f = germ({"x1", "x1*x2 + x2^3"}, 2, 6);
    for (const auto &g : {group_id::so(2), group_id::sl(2), group_id::tstar(1, 1)}) {
        const auto base = tangent(f, g, equivalence::ag, 4, false).codim;
        for (int t = 0; t < 5; ++t) {
            const auto h = transform_germ(f, s.sample(g), random_diffeo(2, 6, rng));
            EXPECT_EQ(tangent(h, g, equivalence::ag, 4, false).codim, base) << g.spec();
        }
    }
}
