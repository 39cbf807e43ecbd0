#include "flagtop/canonical.hpp"
#include "flagtop/constructions.hpp"
#include "flagtop/validators.hpp"

#include <gtest/gtest.h>

using namespace flagtop;

TEST(Cycle, Examples)
{
    EXPECT_EQ(f_vector(cycle(4)), FVector({1, 4, 4}));
    EXPECT_EQ(f_vector(cycle(5)), FVector({1, 5, 5}));
    EXPECT_EQ(balanced_join(1, 5), cycle(5));
    EXPECT_THROW(cycle(3), Error);
    try {
        cycle(3);
    } catch (const Error& e) {
        EXPECT_NE(std::string(e.what()).find("non-flag cycle"), std::string::npos);
    }
}

TEST(BalancedJoin, Examples)
{
    EXPECT_EQ(balanced_join(2, 8), join(cycle(4), cycle(4)));
    EXPECT_EQ(one_skeleton(balanced_join(2, 8)).edge_count(), 24U);
    EXPECT_EQ(balanced_join(2, 9), join(cycle(5), cycle(4)));
    EXPECT_EQ(one_skeleton(balanced_join(2, 9)).edge_count(), 29U);
    EXPECT_EQ(one_skeleton(balanced_join(3, 12)).edge_count(), 60U);
    EXPECT_TRUE(are_isomorphic(balanced_join(3, 12), cross_polytope_boundary(6)));
    EXPECT_THROW(balanced_join(2, 7), Error);
    EXPECT_EQ(balanced_lengths(3, 14), (std::vector<int>{5, 5, 4}));
    EXPECT_EQ(balanced_lengths(4, 19), (std::vector<int>{5, 5, 5, 4}));
}

TEST(BalancedJoin, FlagManifolds)
{
    for (int n = 4; n <= 20; ++n)
        EXPECT_TRUE(is_flag(balanced_join(1, n)));
    for (int n = 8; n <= 16; ++n) {
        EXPECT_TRUE(is_flag(balanced_join(2, n)));
        EXPECT_TRUE(is_flag_3_manifold(balanced_join(2, n))) << n;
    }
    for (int n = 12; n <= 15; ++n)
        EXPECT_TRUE(is_flag(balanced_join(3, n)));
}

TEST(SuspendedJoin, Examples)
{
    EXPECT_EQ(suspended_join(1, 6), suspension(cycle(4)));
    EXPECT_TRUE(are_isomorphic(suspended_join(1, 6), cross_polytope_boundary(3)));
    EXPECT_TRUE(is_octahedral_sphere(suspended_join(2, 10)));
    EXPECT_TRUE(are_isomorphic(suspended_join(2, 10), cross_polytope_boundary(5)));
    // S0 * C5 * C4 vs C5 * (S0 * S0 * S0).
    EXPECT_TRUE(are_isomorphic(suspended_join(2, 11), join(cycle(5), cross_polytope_boundary(3))));
    EXPECT_THROW(suspended_join(2, 9), Error);
}

TEST(CrossPolytope, Examples)
{
    EXPECT_EQ(f_vector(cross_polytope_boundary(3)), FVector({1, 6, 12, 8}));
    EXPECT_TRUE(are_isomorphic(cross_polytope_boundary(4), balanced_join(2, 8)));
    EXPECT_TRUE(are_isomorphic(cross_polytope_boundary(5), suspended_join(2, 10)));
    EXPECT_TRUE(one_skeleton(cross_polytope_boundary(4)).has_edge(0, 2));
    EXPECT_FALSE(one_skeleton(cross_polytope_boundary(4)).has_edge(2, 3));
    EXPECT_THROW(cross_polytope_boundary(0), Error);
}

TEST(GJ, Examples)
{
    EXPECT_EQ(gj({{5}, {5}}), balanced_join(2, 10));
    const auto A = gj({{4, 4}, {8}});
    EXPECT_TRUE(is_flag(A));
    EXPECT_TRUE(is_eulerian(A));
    EXPECT_EQ(one_skeleton(A).edge_count(), 80U);
    const auto B = gj({{4, 4}, {4, 4}});
    EXPECT_EQ(f_vector(B), f_vector(balanced_join(2, 16)));
    EXPECT_EQ(f_vector(B)[2], 128);
    EXPECT_EQ(f_vector(B)[3], 64);
}

TEST(GJ, InvalidPartitions)
{
    EXPECT_THROW(gj({{3, 5}, {8}}), Error);
    EXPECT_THROW(gj({{9}, {7}}), Error);  // a must sum to floor(n/2)
    EXPECT_THROW(gj({{}, {8}}), Error);
    EXPECT_NO_THROW(gj({{9}, {7}}, {true}));
    EXPECT_THROW(gj({{9}, {3}}, {true}), Error);
}

TEST(GJ, SpecEnumeration)
{
    EXPECT_EQ(gj_enumerate_specs(8), (std::vector<GJSpec>{{{4}, {4}}}));
    EXPECT_EQ(gj_enumerate_specs(10), (std::vector<GJSpec>{{{5}, {5}}}));
    EXPECT_EQ(gj_enumerate_specs(16).size(), 3U);
    EXPECT_EQ(gj_enumerate_specs(17).size(), 4U);  // {(8),(4,4)} x {(9),(5,4)}
    EXPECT_EQ(partitions_with_min_part(12, 4), (std::vector<std::vector<int>>{{12}, {8, 4}, {7, 5}, {6, 6}, {4, 4, 4}}));
    EXPECT_TRUE(partitions_with_min_part(3, 4).empty());
    EXPECT_THROW(gj_enumerate_specs(7), Error);
}

TEST(GJ, SpecsArePairwiseNonIsomorphic)
{
    for (int n : {8, 12, 16}) {
        const auto specs = gj_enumerate_specs(n);
        std::vector<CanonicalGraph> forms;
        for (const auto& s : specs)
            forms.push_back(canonical_form(one_skeleton(gj(s))));
        std::sort(forms.begin(), forms.end());
        EXPECT_EQ(std::unique(forms.begin(), forms.end()), forms.end()) << n;
    }
}

TEST(GJ, FlagEulerianWithMaximalFVector)
{
    for (int n = 8; n <= 20; ++n)
        for (const auto& spec : gj_enumerate_specs(n)) {
            const auto K = gj(spec);
            EXPECT_TRUE(is_flag(K)) << to_string(spec);
            EXPECT_TRUE(is_eulerian(K)) << to_string(spec);
            EXPECT_EQ(f_vector(K), f_vector(balanced_join(2, n))) << to_string(spec);
        }
}

TEST(GJ, ManifoldIffSingleParts)
{
    for (int n = 8; n <= 20; ++n)
        for (const auto& spec : gj_enumerate_specs(n))
            EXPECT_EQ(is_flag_3_manifold(gj(spec)).holds, spec.a.size() == 1 && spec.b.size() == 1)
                << to_string(spec);
}

TEST(GJ, VertexDegrees)
{
    for (int n = 8; n <= 22; ++n)
        for (const auto& spec : gj_enumerate_specs(n)) {
            const Graph g = one_skeleton(gj(spec));
            const int half = n / 2;
            for (Vertex v = 0; v < static_cast<Vertex>(n); ++v) {
                // a-circle vertices come first.
                const int expected = static_cast<int>(v) < half ? (n - n / 2) + 2 : n / 2 + 2;
                ASSERT_EQ(g.degree(v), expected) << to_string(spec) << " v=" << v;
            }
        }
}

TEST(RemarkComplex, Properties)
{
    const auto R = remark_complex(4, 4, 4, 4);
    EXPECT_EQ(R.n(), 16U);
    EXPECT_EQ(R.facets().size(), 48U);
    EXPECT_TRUE(is_flag(R));
    EXPECT_TRUE(is_weak_pseudomanifold(R));
    EXPECT_FALSE(is_normal_pseudomanifold(R));
    EXPECT_EQ(one_skeleton(R).edge_count(), 64U);
    const auto lk = link(R, Face{0, 1});
    EXPECT_EQ(lk.complex.facets().size(), 8U);
    EXPECT_EQ(lk.parent_vertices(), Face::from_mask(0xFF00));
    const auto R2 = remark_complex(5, 4, 6, 4);
    EXPECT_TRUE(is_flag(R2) && is_weak_pseudomanifold(R2) && !is_normal_pseudomanifold(R2));
    EXPECT_THROW(remark_complex(4, 3, 4, 4), Error);
}

TEST(Torus, Properties)
{
    const auto T = grid_torus(4, 4);
    EXPECT_EQ(f_vector(T), FVector({1, 16, 48, 32}));
    EXPECT_TRUE(is_flag(T));
    EXPECT_TRUE(is_closed_surface(T));
    EXPECT_THROW(grid_torus(2, 5), Error);
}

TEST(Barycentric, Properties)
{
    const SimplicialComplex tri(3, {Face{0, 1, 2}});
    const auto B = barycentric_subdivision(tri);
    EXPECT_EQ(f_vector(B), FVector({1, 7, 12, 6}));
    EXPECT_TRUE(is_flag(B));
    EXPECT_EQ(barycentric_subdivision(cycle(4)).n(), 8U);
    EXPECT_TRUE(are_isomorphic(barycentric_subdivision(cycle(4)), cycle(8)));
    const auto O = barycentric_subdivision(cross_polytope_boundary(3));
    EXPECT_EQ(f_vector(O), FVector({1, 26, 72, 48}));
    EXPECT_TRUE(is_two_sphere(O));
}
