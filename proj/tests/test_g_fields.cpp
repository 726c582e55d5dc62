#include <cstdlib>
#include <filesystem>

#include <gtest/gtest.h>

#include <germlab/g_fields.hpp>
#include <germlab/parser.hpp>

#include "oracles.hpp"

using namespace germlab;

TEST(ThetaG, SpecialOrthogonalIsLinear)
{
    for (unsigned p = 2; p <= 4; ++p) {
        const auto fs = theta_g_jet(group_id::so(p), 4, false);
        EXPECT_EQ(fs.total_dim(), p * (p - 1) / 2);
        for (unsigned d = 2; d <= 4; ++d) {
            EXPECT_EQ(fs.per_degree[d].dim(), oracle::killing_dim(static_cast<int>(p), static_cast<int>(d)));
        }
    }
}

TEST(ThetaG, ConstantsAreTranslations)
{
    for (const auto &g : {group_id::so(3), group_id::trivial(2), group_id::sp(4)}) {
        EXPECT_EQ(theta_g_jet(g, 2, true).per_degree[0].dim(), g.p());
    }
}

TEST(ThetaG, SpecialLinearMatchesDivergenceOracle)
{
    for (unsigned d = 1; d <= 6; ++d) {
        EXPECT_EQ(theta_g_degree(group_id::sl(2), d).dim(), oracle::divergence_free_dim(static_cast<int>(d)));
    }
}

TEST(ThetaG, GeneralLinearIsEverything)
{
    const auto fs = theta_g_jet(group_id::gl(3), 3, false);
    EXPECT_EQ(fs.total_dim(), 3 * monomial_count(3, 3, 1));
}

TEST(ThetaG, TrivialHasOnlyConstants)
{
    EXPECT_EQ(theta_g_jet(group_id::trivial(3), 4, false).total_dim(), 0u);
    EXPECT_EQ(theta_g_jet(group_id::trivial(3), 4, true).total_dim(), 3u);
}

TEST(ThetaG, FieldsSatisfyTheDefiningCondition)
{
    // D eta(y) lies in the Lie algebra at every y: every annihilator kills it coefficientwise.
    for (const auto &g : {group_id::sp(4), group_id::lagr(4), group_id::tstar(1, 2), group_id::affplus(2)}) {
        const auto alg = algebra_of(g);
        const unsigned p = g.p();
        for (const auto &eta : theta_g_jet(g, 3, false).fields(3)) {
            for (const auto &A : alg.annihilators) {
                jet_poly s(p, 3);
                for (unsigned i = 0; i < p; ++i) {
                    for (unsigned j = 0; j < p; ++j) {
                        s += A(i, j) * diff(eta[i], j);
                    }
                }
                ASSERT_TRUE(s.is_zero()) << g.spec();
            }
        }
    }
}

TEST(Hamiltonian, FieldsAreDivergenceFree)
{
    const auto H = parse_jet("y1^3 - 2*y1*y2^2 + y2^4", 2, 5);
    EXPECT_TRUE(divergence(hamiltonian_field(H)).is_zero());
}

TEST(Hamiltonian, ClosedFormMatchesGeneric)
{
    const auto c = closed_form_basis(group_id::sl(2), 5, true);
    for (unsigned d = 0; d <= 5; ++d) {
        EXPECT_TRUE(c.per_degree[d] == theta_g_degree(group_id::sl(2), d)) << d;
    }
    EXPECT_THROW(closed_form_basis(group_id::sl(3), 2, false), user_error);
}

TEST(Forms, DivergenceMatchesExteriorDerivative)
{
    const auto eta = field_jet({parse_jet("y1^2 + y2", 2, 3), parse_jet("y1*y2^2", 2, 3)}, true);
    EXPECT_EQ(form_derivative(field_to_form(eta)), divergence(eta));
}

TEST(Ring, KnownDimensions)
{
    EXPECT_EQ(ring_eg_jet(group_id::so(2), 4).dim(), 1u);
    EXPECT_EQ(ring_eg_jet(group_id::sl(2), 4).dim(), 1u);
    EXPECT_EQ(ring_eg_jet(group_id::dstar(1, 1), 4).dim(), 1u);
    EXPECT_EQ(ring_eg_jet(group_id::tstar(1, 2), 4).dim(), monomial_count(2, 4, 0));
}

TEST(Ring, ContainsConstantsAndIsClosedUnderProducts)
{
    const auto r = ring_eg_jet(group_id::tstar(1, 2), 3);
    EXPECT_TRUE(r.contains(jet_poly::constant(3, 3, rational(5))));
    const auto a = parse_jet("y2 + y3^2", 3, 3), b = parse_jet("y2*y3 - y3", 3, 3);
    ASSERT_TRUE(r.contains(a));
    ASSERT_TRUE(r.contains(b));
    EXPECT_TRUE(r.contains((a * b).truncated(3)));
    EXPECT_FALSE(r.contains(parse_jet("y1", 3, 3)));
}

TEST(Linearity, Classification)
{
    EXPECT_TRUE(is_linear_only(group_id::so(3), 3).linear_only);
    EXPECT_TRUE(is_linear_only(group_id::socaptstar(1, 2), 3).linear_only);
    EXPECT_TRUE(is_linear_only(group_id::trivial(2), 3).linear_only);
    const auto r = is_linear_only(group_id::sp(2), 3);
    EXPECT_FALSE(r.linear_only);
    ASSERT_TRUE(r.witness_degree.has_value());
    EXPECT_EQ(*r.witness_degree, 2u);
    EXPECT_THROW(is_linear_only(group_id::gl(2), 1), user_error);
}

TEST(FieldCache, PersistsAndReloads)
{
    const auto dir = std::filesystem::temp_directory_path() / "germlab_cache_test";
    std::filesystem::remove_all(dir);
    setenv("GERMLAB_CACHE_DIR", dir.c_str(), 1);
    field_cache::instance().clear();
    const auto first = theta_g_degree(group_id::lagr(4), 3);
    EXPECT_TRUE(std::filesystem::exists(dir / "theta_lagr_4_d3.txt"));
    field_cache::instance().clear();
    const auto second = theta_g_degree(group_id::lagr(4), 3);
    EXPECT_TRUE(first == second);

    // A corrupt file is ignored.
    std::ofstream(dir / "theta_lagr_4_d2.txt") << "garbage";
    field_cache::instance().clear();
    EXPECT_EQ(theta_g_degree(group_id::lagr(4), 2).dim(), theta_g_jet(group_id::lagr(4), 2, false).per_degree[2].dim());
    unsetenv("GERMLAB_CACHE_DIR");
    field_cache::instance().clear();
    std::filesystem::remove_all(dir);
}
