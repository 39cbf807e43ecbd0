#include "flagtop/complex.hpp"
#include "flagtop/constructions.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace flagtop;

namespace {

SimplicialComplex four_cycle() { return {4, {Face{0, 1}, Face{1, 2}, Face{2, 3}, Face{0, 3}}}; }

SimplicialComplex octahedron()
{
    // Antipodal pairs {0,1}, {2,3}, {4,5}.
    std::vector<Face> f;
    for (Vertex a : {0U, 1U})
        for (Vertex b : {2U, 3U})
            for (Vertex c : {4U, 5U})
                f.push_back(Face{a, b, c});
    return {6, f};
}

std::vector<Face> to_faces(const std::vector<oracle::VFace>& v)
{
    std::vector<Face> out;
    for (const auto& f : v) {
        std::vector<Vertex> vs(f.begin(), f.end());
        out.push_back(Face::from_vertices(vs));
    }
    return out;
}

} // namespace

TEST(Face, LexicographicOrder)
{
    EXPECT_LT((Face{0, 1}), (Face{0, 3}));
    EXPECT_LT((Face{0, 3}), (Face{1, 2}));
    EXPECT_LT((Face{0}), (Face{0, 1}));
    EXPECT_LT((Face{}), (Face{0}));
    EXPECT_LT((Face{0, 5}), (Face{1}));
    EXPECT_GT((Face{2}), (Face{1, 7, 9}));
    EXPECT_EQ((Face{3, 1}), (Face{1, 3}));
}

TEST(Face, OrderMatchesVectorOrder)
{
    std::mt19937 rng(7);
    std::uniform_int_distribution<std::uint64_t> bits(0, 0xFFF);
    for (int i = 0; i < 2000; ++i) {
        const Face a = Face::from_mask(bits(rng));
        const Face b = Face::from_mask(bits(rng));
        EXPECT_EQ(a < b, a.vertices() < b.vertices()) << a.to_string() << " " << b.to_string();
    }
}

TEST(Face, RejectsDuplicatesAndLargeIds)
{
    EXPECT_THROW((Face{1, 1}), Error);
    EXPECT_THROW((Face{64}), Error);
    EXPECT_EQ((Face{63}).back(), 63U);
}

TEST(Complex, RejectsInvalidFacetLists)
{
    EXPECT_THROW(SimplicialComplex(3, {Face{0, 1}, Face{0, 1, 2}}), Error);  // not an antichain
    EXPECT_THROW(SimplicialComplex(4, {Face{0, 1}, Face{1, 2}}), Error);     // phantom vertex 3
    EXPECT_THROW(SimplicialComplex(2, {Face{0, 2}}), Error);                 // id >= n
    EXPECT_THROW(SimplicialComplex(0, {}), Error);                          // void complex
    EXPECT_THROW(SimplicialComplex(65, {Face{0}}), Error);
}

TEST(Complex, EmptyFaceComplex)
{
    const auto E = SimplicialComplex::empty_face();
    EXPECT_EQ(E.dim(), -1);
    EXPECT_EQ(f_vector(E), FVector({1}));
    EXPECT_EQ(reduced_euler_char(E), -1);
}

TEST(Faces, FourCycle)
{
    const auto C = four_cycle();
    EXPECT_EQ(faces(C, 0), (std::vector<Face>{Face{0}, Face{1}, Face{2}, Face{3}}));
    EXPECT_EQ(faces(C, 1), (std::vector<Face>{Face{0, 1}, Face{0, 3}, Face{1, 2}, Face{2, 3}}));
    EXPECT_TRUE(faces(C, 2).empty());
    EXPECT_TRUE(faces(C, -2).empty());
    EXPECT_EQ(faces(C, -1), (std::vector<Face>{Face{}}));
}

TEST(Faces, OctahedronTriangles)
{
    const auto O = octahedron();
    const auto expected = oracle::faces_of_dim(oracle::all_faces(O), 2);
    ASSERT_EQ(expected.size(), 8U);
    EXPECT_EQ(faces(O, 2), to_faces(expected));
}

TEST(FVector, FrozenValues)
{
    // Values computed with the subset-enumeration oracle and frozen.
    EXPECT_EQ(f_vector(four_cycle()), FVector({1, 4, 4}));
    EXPECT_EQ(f_vector(octahedron()), FVector({1, 6, 12, 8}));
    const auto J28 = balanced_join(2, 8);
    EXPECT_EQ(f_vector(J28), FVector({1, 8, 24, 32, 16}));
    EXPECT_EQ(oracle::f_vector(oracle::all_faces(J28)), (std::vector<long long>{1, 8, 24, 32, 16}));
    // f2 = 2 f1 - 2 f0 and f3 = f1 - f0.
    const auto f = f_vector(J28);
    EXPECT_EQ(f[2], 2 * f[1] - 2 * f[0]);
    EXPECT_EQ(f[3], f[1] - f[0]);
}

TEST(EulerChar, FrozenValues)
{
    EXPECT_EQ(reduced_euler_char(four_cycle()), -1);
    EXPECT_EQ(reduced_euler_char(octahedron()), 1);
    EXPECT_EQ(reduced_euler_char(balanced_join(2, 10)), -1);
    EXPECT_EQ(oracle::reduced_euler(oracle::f_vector(oracle::all_faces(balanced_join(2, 10)))), -1);
}

TEST(Link, VertexLinkOfOctahedronIsFourCycle)
{
    const auto lk = link(octahedron(), Face{0});
    EXPECT_EQ(lk.complex.n(), 4U);
    EXPECT_EQ(f_vector(lk.complex), FVector({1, 4, 4}));
    EXPECT_EQ(lk.to_parent, (std::vector<Vertex>{2, 3, 4, 5}));
    EXPECT_EQ(oracle::lift(lk), oracle::link(oracle::all_faces(octahedron()), {0}));
}

TEST(Link, VertexLinkOfJ28IsOctahedron)
{
    const auto J = balanced_join(2, 8);
    for (Vertex v = 0; v < 8; ++v) {
        const auto lk = link(J, Face{v});
        EXPECT_EQ(f_vector(lk.complex), FVector({1, 6, 12, 8}));
        EXPECT_EQ(oracle::lift(lk), oracle::link(oracle::all_faces(J), {static_cast<int>(v)}));
    }
}

TEST(Link, EmptyFaceAndErrors)
{
    const auto O = octahedron();
    const auto lk = link(O, Face{});
    EXPECT_EQ(lk.complex, O);
    EXPECT_THROW(link(O, Face{0, 1}), Error);  // antipodes: not a face
    EXPECT_EQ(link(O, Face{0, 2, 4}).complex, SimplicialComplex::empty_face());
}

TEST(Restriction, Examples)
{
    const auto O = octahedron();
    EXPECT_EQ(restriction(O, O.vertex_set()).complex, O);
    const auto path = restriction(four_cycle(), Face{0, 1, 2});
    EXPECT_EQ(path.complex, SimplicialComplex(3, {Face{0, 1}, Face{1, 2}}));
    EXPECT_THROW(restriction(four_cycle(), Face{0, 4}), Error);
}

TEST(Restriction, FlagLinksAreInducedSubcomplexes)
{
    const auto J = balanced_join(2, 8);
    for (Vertex v = 0; v < 8; ++v) {
        const auto lk = link(J, Face{v});
        const auto res = restriction(J, lk.parent_vertices());
        EXPECT_EQ(res.complex, lk.complex);
        EXPECT_EQ(res.to_parent, lk.to_parent);
    }
}

TEST(Deletion, MirrorsRestriction)
{
    const auto O = octahedron();
    EXPECT_EQ(deletion(O, Face{}).complex, O);
    const auto C = four_cycle();
    EXPECT_EQ(deletion(C, Face{3}).complex, restriction(C, Face{0, 1, 2}).complex);
    const auto J = balanced_join(2, 9);
    EXPECT_EQ(deletion(J, Face{0, 5}).complex, restriction(J, J.vertex_set() - Face{0, 5}).complex);
}

TEST(Join, Examples)
{
    EXPECT_EQ(f_vector(join(zero_sphere(), zero_sphere())), FVector({1, 4, 4}));
    const auto C4C4 = join(cycle(4), cycle(4));
    EXPECT_EQ(f_vector(C4C4)[1], 24);
    EXPECT_EQ(C4C4, balanced_join(2, 8));
    EXPECT_EQ(join(SimplicialComplex::empty_face(), octahedron()), octahedron());
}

TEST(Suspension, Examples)
{
    EXPECT_EQ(f_vector(suspension(four_cycle())), FVector({1, 6, 12, 8}));
    const auto S = suspension(balanced_join(2, 8));
    EXPECT_EQ(S.n(), 10U);
    EXPECT_EQ(S, suspended_join(2, 10));
}

TEST(CliqueComplex, Examples)
{
    Graph k4(4);
    for (Vertex u = 0; u < 4; ++u)
        for (Vertex v = u + 1; v < 4; ++v)
            k4.add_edge(u, v);
    EXPECT_EQ(clique_complex(k4).facets(), (std::vector<Face>{Face{0, 1, 2, 3}}));

    Graph c5(5);
    for (Vertex i = 0; i < 5; ++i)
        c5.add_edge(i, (i + 1) % 5);
    EXPECT_EQ(clique_complex(c5), cycle(5));

    Graph k222 = Graph(6).complement();
    for (Vertex i = 0; i < 6; i += 2)
        k222.remove_edge(i, i + 1);
    EXPECT_EQ(clique_complex(k222), octahedron());

    EXPECT_EQ(clique_complex(Graph(0)), SimplicialComplex::empty_face());
    EXPECT_EQ(clique_complex(Graph(2)), zero_sphere());
}

TEST(OneSkeleton, RoundTrip)
{
    const auto O = octahedron();
    const Graph g = one_skeleton(O);
    EXPECT_EQ(g.edge_count(), 12U);
    for (Vertex i = 0; i < 6; ++i)
        EXPECT_EQ(g.degree(i), 4);
    EXPECT_FALSE(g.has_edge(0, 1));
    EXPECT_EQ(clique_complex(g), O);
    EXPECT_EQ(clique_complex(one_skeleton(balanced_join(2, 11))), balanced_join(2, 11));

    const SimplicialComplex hollow(3, {Face{0, 1}, Face{1, 2}, Face{0, 2}});
    EXPECT_NE(clique_complex(one_skeleton(hollow)), hollow);
}

// ---------------------------------------------------------------------------------------------
// Properties over randomized small complexes.

TEST(Properties, FaceEnumerationMatchesOracle)
{
    std::mt19937 rng(20240601);
    for (int trial = 0; trial < 300; ++trial) {
        const auto K = gen::random_complex(rng, 12, 5);
        const auto all = oracle::all_faces(K);
        for (int i = -1; i <= K.dim(); ++i)
            ASSERT_EQ(faces(K, i), to_faces(oracle::faces_of_dim(all, i))) << "trial " << trial << " dim " << i;
        const auto f = oracle::f_vector(all);
        ASSERT_EQ(f_vector(K).counts(), std::vector<std::int64_t>(f.begin(), f.end()));
    }
}

TEST(Properties, JoinConvolutionAndEulerMultiplicativity)
{
    std::mt19937 rng(99);
    for (int trial = 0; trial < 250; ++trial) {
        const auto K = gen::random_complex(rng, 8);
        const auto L = gen::random_complex(rng, 8);
        const auto J = join(K, L);
        const auto fk = f_vector(K);
        const auto fl = f_vector(L);
        const auto fj = f_vector(J);
        for (int k = -1; k <= J.dim(); ++k) {
            std::int64_t conv = 0;
            for (int i = -1; i <= K.dim(); ++i)
                conv += fk[i] * fl[k - 1 - i];
            ASSERT_EQ(fj[k], conv) << "trial " << trial << " k " << k;
        }
        ASSERT_EQ(fj.reduced_euler_char(), -fk.reduced_euler_char() * fl.reduced_euler_char());
    }
}

TEST(Properties, SuspensionNegatesEulerCharacteristic)
{
    std::mt19937 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const auto K = gen::random_complex(rng, 8);
        EXPECT_EQ(reduced_euler_char(suspension(K)), -reduced_euler_char(K));
    }
}

TEST(Properties, DoubleCounting)
{
    std::mt19937 rng(17);
    for (int trial = 0; trial < 250; ++trial) {
        const auto K = gen::random_complex(rng, 10);
        std::int64_t sum = 0;
        for (Vertex v = 0; v < K.n(); ++v)
            sum += link(K, Face{v}).complex.dim() >= 0 ? static_cast<std::int64_t>(link(K, Face{v}).complex.n()) : 0;
        ASSERT_EQ(sum, 2 * f_vector(K)[1]);
    }
}

TEST(Properties, LinksMatchOracle)
{
    std::mt19937 rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        const auto K = gen::random_complex(rng, 9);
        const auto all = oracle::all_faces(K);
        for (Face s : K.all_faces()) {
            std::vector<int> sv;
            for (auto v : s.vertices())
                sv.push_back(static_cast<int>(v));
            ASSERT_EQ(oracle::lift(link(K, s)), oracle::link(all, sv));
        }
    }
}

TEST(Properties, FlagLinkEqualsRestriction)
{
    std::mt19937 rng(2026);
    for (int trial = 0; trial < 250; ++trial) {
        std::uniform_int_distribution<int> nd(1, 10);
        const auto K = clique_complex(gen::random_graph(rng, static_cast<std::size_t>(nd(rng)), 0.5));
        for (Face s : K.all_faces()) {
            const auto lk = link(K, s);
            if (lk.complex.dim() < 0)
                continue;
            const auto res = restriction(K, lk.parent_vertices());
            ASSERT_EQ(res.complex, lk.complex);
            ASSERT_EQ(res.to_parent, lk.to_parent);
        }
    }
}

TEST(Properties, RestrictionMatchesOracle)
{
    std::mt19937 rng(8);
    for (int trial = 0; trial < 200; ++trial) {
        const auto K = gen::random_complex(rng, 9);
        std::uniform_int_distribution<std::uint64_t> pick(0, K.vertex_set().mask());
        const Face W = Face::from_mask(pick(rng)) & K.vertex_set();
        std::set<int> w;
        for (auto v : W.vertices())
            w.insert(static_cast<int>(v));
        ASSERT_EQ(oracle::lift(restriction(K, W)), oracle::restriction(oracle::all_faces(K), w));
        ASSERT_EQ(deletion(K, W).complex, restriction(K, K.vertex_set() - W).complex);
    }
}

TEST(Properties, CliqueComplexIsAntichainOfMaximalCliques)
{
    std::mt19937 rng(4);
    for (int trial = 0; trial < 100; ++trial) {
        const Graph g = gen::random_graph(rng, 12, 0.6);
        const auto K = clique_complex(g);
        for (Face f : K.facets()) {
            // Every facet is a clique and cannot be extended.
            f.for_each_vertex([&](Vertex u) {
                f.without(u).for_each_vertex([&](Vertex v) { ASSERT_TRUE(g.has_edge(u, v)); });
            });
            for (Vertex x = 0; x < g.n(); ++x)
                if (!f.contains(x))
                    ASSERT_FALSE((f.mask() & ~g.row(x)) == 0);
        }
        EXPECT_EQ(one_skeleton(K), g);
    }
}
