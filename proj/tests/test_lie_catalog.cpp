#include <gtest/gtest.h>

#include <germlab/lie_catalog.hpp>

using namespace germlab;

namespace
{

std::vector<group_id> all_groups()
{
    std::vector<group_id> out;
    for (unsigned p = 1; p <= 4; ++p) {
        for (const auto &g : catalog_groups(p)) {
            out.push_back(g);
        }
    }
    return out;
}

rational_matrix bracket(const rational_matrix &a, const rational_matrix &b)
{
    return a * b - b * a;
}

} // namespace

TEST(LieCatalog, DimensionsMatchClosedForms)
{
    for (const auto &g : all_groups()) {
        EXPECT_EQ(algebra_of(g).dim(), expected_algebra_dim(g)) << g.spec();
    }
    EXPECT_EQ(algebra_of(group_id::sp(4)).dim(), 10u);
    EXPECT_EQ(algebra_of(group_id::tstar(1, 2)).dim(), 1u + 4u + 2u);
    EXPECT_EQ(algebra_of(group_id::affplus(2)).dim(), 6u);
}

TEST(LieCatalog, ClosedUnderBracket)
{
    for (const auto &g : all_groups()) {
        const auto s = algebra_of(g);
        for (const auto &a : s.basis) {
            for (const auto &b : s.basis) {
                ASSERT_TRUE(contains_matrix(s, bracket(a, b))) << g.spec();
            }
        }
    }
}

TEST(LieCatalog, AnnihilatorsAreOrthogonalComplement)
{
    for (const auto &g : all_groups()) {
        const auto s = algebra_of(g);
        const unsigned p = g.p();
        EXPECT_EQ(s.annihilators.size() + s.dim(), p * p) << g.spec();
        for (const auto &A : s.annihilators) {
            for (const auto &X : s.basis) {
                rational t = 0;
                for (unsigned i = 0; i < p; ++i) {
                    for (unsigned j = 0; j < p; ++j) {
                        t += A(i, j) * X(i, j);
                    }
                }
                ASSERT_EQ(t, 0) << g.spec();
            }
        }
    }
}

TEST(LieCatalog, SubgroupRelations)
{
    EXPECT_TRUE(subalgebra_check(group_id::so(3), group_id::sl(3)));
    EXPECT_TRUE(subalgebra_check(group_id::sp(4), group_id::sl(4)));
    EXPECT_TRUE(subalgebra_check(group_id::lagr(4), group_id::sp(4)));
    EXPECT_TRUE(subalgebra_check(group_id::socaptstar(3, 1), group_id::so(4)));
    EXPECT_TRUE(subalgebra_check(group_id::dstar(1, 2), group_id::tstar(1, 2)));
    EXPECT_TRUE(subalgebra_check(group_id::istar(1, 2), group_id::dstar(1, 2)));
    EXPECT_FALSE(subalgebra_check(group_id::gl(2), group_id::sl(2)));
    EXPECT_THROW(subalgebra_check(group_id::gl(2), group_id::gl(3)), user_error);
}

TEST(LieCatalog, ParseGroupSpecs)
{
    EXPECT_EQ(parse_group("so:3"), group_id::so(3));
    EXPECT_EQ(parse_group("tstar:1,2"), group_id::tstar(1, 2));
    EXPECT_EQ(parse_group("affplus:2").p(), 3u);
    for (const auto &g : all_groups()) {
        EXPECT_EQ(parse_group(g.spec()), g);
    }
    EXPECT_THROW(parse_group("sp:3"), user_error);
    EXPECT_THROW(parse_group("lagr:5"), user_error);
    EXPECT_THROW(parse_group("so:0"), user_error);
    EXPECT_THROW(parse_group("so:9"), user_error);
    EXPECT_THROW(parse_group("foo:2"), user_error);
    EXPECT_THROW(parse_group("dstar:2"), user_error);
}

TEST(GroupSampler, ElementsNormalizeTheAlgebra)
{
    group_sampler s(11);
    for (const auto &g : all_groups()) {
        const auto alg = algebra_of(g);
        for (int t = 0; t < 5; ++t) {
            const auto A = s.sample(g);
            const auto Ai = inverse(A);
            for (const auto &X : alg.basis) {
                ASSERT_TRUE(contains_matrix(alg, A * X * Ai)) << g.spec();
            }
        }
    }
}

TEST(GroupSampler, DefiningEquations)
{
    group_sampler s(12);
    for (int t = 0; t < 10; ++t) {
        const auto R = s.sample(group_id::so(4));
        EXPECT_EQ(R.transpose() * R, rational_matrix::identity(4));
        EXPECT_EQ(determinant(R), 1);
        EXPECT_EQ(determinant(s.sample(group_id::sl(3))), 1);
        const auto S = s.sample(group_id::sp(4));
        rational_matrix J(4, 4);
        J(0, 2) = J(1, 3) = 1;
        J(2, 0) = J(3, 1) = -1;
        EXPECT_EQ(S.transpose() * J * S, J);
        EXPECT_NE(determinant(s.sample(group_id::gl(3))), 0);
    }
}
