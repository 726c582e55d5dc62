#include <random>

#include <gtest/gtest.h>

#include <germlab/matrix.hpp>
#include <germlab/parser.hpp>
#include <germlab/subspace.hpp>

#include "oracles.hpp"

using namespace germlab;

TEST(Matrix, RankAndKernel)
{
    rational_matrix m{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
    EXPECT_EQ(rank(m), 2u);
    const auto ker = kernel_vectors(m);
    ASSERT_EQ(ker.size(), 1u);
    for (std::size_t i = 0; i < 3; ++i) {
        rational s = 0;
        for (std::size_t j = 0; j < 3; ++j) {
            s += m(i, j) * ker[0][j];
        }
        EXPECT_EQ(s, 0);
    }
}

TEST(Matrix, InverseAndDeterminant)
{
    rational_matrix m{{2, 1}, {7, 4}};
    EXPECT_EQ(determinant(m), rational(1));
    EXPECT_EQ(m * inverse(m), rational_matrix::identity(2));
    EXPECT_THROW(inverse(rational_matrix{{1, 2}, {2, 4}}), std::exception);
}

TEST(Matrix, RankMatchesBareissOracle)
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> v(-3, 3), shape(1, 7);
    for (int t = 0; t < 200; ++t) {
        const auto r = static_cast<std::size_t>(shape(rng)), c = static_cast<std::size_t>(shape(rng));
        rational_matrix m(r, c);
        oracle::int_matrix o(r, std::vector<oracle::bigint>(c));
        // Low-rank products make dependent rows common.
        const int inner = shape(rng) % 3 + 1;
        std::vector<std::vector<int>> a(r, std::vector<int>(inner)), b(inner, std::vector<int>(c));
        for (auto &row : a) {
            for (auto &x : row) {
                x = v(rng);
            }
        }
        for (auto &row : b) {
            for (auto &x : row) {
                x = v(rng);
            }
        }
        for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t j = 0; j < c; ++j) {
                int s = 0;
                for (int q = 0; q < inner; ++q) {
                    s += a[i][q] * b[q][j];
                }
                m(i, j) = s;
                o[i][j] = s;
            }
        }
        ASSERT_EQ(rank(m), oracle::bareiss_rank(o)) << "trial " << t;
    }
}

TEST(Subspace, SumIntersectionGrassmann)
{
    const auto u = span({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 1}}, "r4", 4);
    const auto w = span({{0, 1, 0, 0}, {0, 0, 1, -1}, {1, 1, 1, 1}}, "r4", 4);
    const auto s = subspace_sum(u, w), i = subspace_intersection(u, w);
    EXPECT_EQ(s.dim() + i.dim(), u.dim() + w.dim());
    EXPECT_TRUE(i.is_subspace_of(u));
    EXPECT_TRUE(i.is_subspace_of(w));
    EXPECT_TRUE(u.is_subspace_of(s));
}

TEST(Subspace, EqualityIgnoresBasisChoice)
{
    const auto a = span({{1, 1, 0}, {0, 1, 1}}, "r3", 3);
    const auto b = span({{1, 2, 1}, {1, 0, -1}}, "r3", 3);
    EXPECT_TRUE(a == b);
    EXPECT_EQ(relative_dim(span({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, "r3", 3), a), 1u);
}

TEST(Subspace, LabelsMustMatch)
{
    const auto a = span({{1, 0}}, "first", 2);
    const auto b = span({{0, 1}}, "second", 2);
    EXPECT_THROW(subspace_sum(a, b), std::invalid_argument);
}

TEST(Subspace, RelativeDimRequiresContainment)
{
    const auto a = span({{1, 0}}, "r2", 2);
    const auto b = span({{0, 1}}, "r2", 2);
    EXPECT_THROW(relative_dim(a, b), invariant_error);
}

TEST(Subspace, KernelOfMatrix)
{
    rational_matrix m{{1, 1, 1}};
    const auto k = kernel(m, "r3");
    EXPECT_EQ(k.dim(), 2u);
    EXPECT_TRUE(k.contains({1, -1, 0}));
    EXPECT_FALSE(k.contains({1, 0, 0}));
}

TEST(JetCoordinates, RoundTrip)
{
    const jet_coordinates c("t", 2, 2, 1, 3);
    EXPECT_EQ(c.dim(), 2 * monomial_count(2, 3, 1));
    const std::vector<jet_poly> v{parse_jet("x1 - 2*x1*x2^2", 2, 3), parse_jet("1/3*x2^2", 2, 3)};
    const auto back = c.from_vector(c.to_vector(v), 3);
    EXPECT_EQ(back[0], v[0]);
    EXPECT_EQ(back[1], v[1]);
}

TEST(JetCoordinates, DropsAboveAndRejectsBelow)
{
    const jet_coordinates c("t", 1, 1, 1, 2);
    EXPECT_EQ(c.to_vector(std::vector<jet_poly>{parse_jet("x1 + x1^4", 1, 4)}), (rvec{1, 0}));
    EXPECT_THROW(c.to_vector(std::vector<jet_poly>{parse_jet("1 + x1", 1, 4)}), std::exception);
}
