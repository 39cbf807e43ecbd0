#include "flagtop/constructions.hpp"
#include "flagtop/io.hpp"

#include <gtest/gtest.h>

using namespace flagtop;

namespace {

std::size_t error_line(const std::string& text)
{
    try {
        parse_facets(text);
    } catch (const ParseError& e) {
        return e.line();
    }
    ADD_FAILURE() << "no ParseError for:\n" << text;
    return 0;
}

} // namespace

TEST(FacetText, ParsesWithCommentsAndBlankLines)
{
    const auto K = parse_facets("# four-cycle\n\n4 1\n0 1\n1 2\n  # inline comment line\n2 3\n0 3\n");
    EXPECT_EQ(K, SimplicialComplex(4, {Face{0, 1}, Face{1, 2}, Face{2, 3}, Face{0, 3}}));
}

TEST(FacetText, RoundTrip)
{
    for (const auto& K : {cycle(5), balanced_join(2, 9), remark_complex(4, 4, 4, 4), grid_torus(4, 4),
                          SimplicialComplex(3, {Face{0, 1}, Face{2}})}) {
        const std::string text = format_facets(K);
        EXPECT_EQ(parse_facets(text), K);
        EXPECT_EQ(format_facets(parse_facets(text)), text);
    }
}

TEST(FacetText, Format)
{
    EXPECT_EQ(format_facets(cycle(4)), "4 1\n0 1\n0 3\n1 2\n2 3\n");
    EXPECT_EQ(format_facets(SimplicialComplex::empty_face()), "0 -1\n");
    EXPECT_EQ(parse_facets("0 -1\n"), SimplicialComplex::empty_face());
}

TEST(FacetText, ErrorsCarryLineNumbers)
{
    EXPECT_EQ(error_line(""), 1U);
    EXPECT_EQ(error_line("# c\nfour one\n"), 2U);
    EXPECT_EQ(error_line("3 1\n0 1\n1 x\n"), 3U);
    EXPECT_EQ(error_line("3 1\n0 1\n1 3\n"), 3U);
    EXPECT_EQ(error_line("3 1\n0 1\n2 1\n"), 3U);
    EXPECT_EQ(error_line("3 1\n0 1\n1 1\n"), 3U);
    EXPECT_EQ(error_line("3 1 7\n0 1\n"), 1U);
    EXPECT_EQ(error_line("\n3 2\n0 1\n1 2\n"), 2U);         // declared dimension disagrees
    EXPECT_EQ(error_line("3 1\n0 1\n1 2\n0 1\n"), 2U);       // duplicate facet
    EXPECT_EQ(error_line("3 2\n0 1 2\n\n1 2\n"), 4U);        // contained in another facet
    EXPECT_EQ(error_line("4 1\n0 1\n1 2\n"), 1U);            // vertex 3 unused
    EXPECT_EQ(error_line("3 1\n"), 2U);                       // no facets
    EXPECT_EQ(error_line("65 0\n0\n"), 1U);
}

TEST(FacetText, ErrorMessageMentionsLine)
{
    try {
        parse_facets("3 1\n0 1\n1 9\n");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(std::string(e.what()).rfind("line 3: ", 0), 0U) << e.what();
    }
}

TEST(Json, Complex)
{
    const auto K = cycle(4);
    EXPECT_EQ(to_json(K).dump(), R"({"n":4,"facets":[[0,1],[0,3],[1,2],[2,3]]})");
    EXPECT_EQ(complex_from_json(nlohmann::json::parse(to_json(K).dump())), K);
    EXPECT_EQ(parse_complex(to_json(balanced_join(2, 8)).dump()), balanced_join(2, 8));
    EXPECT_EQ(parse_complex(format_facets(balanced_join(2, 8))), balanced_join(2, 8));
    EXPECT_EQ(to_json(f_vector(K)).dump(), "[1,4,4]");
}

TEST(Json, Errors)
{
    EXPECT_THROW(parse_complex("{"), ParseError);
    EXPECT_THROW(parse_complex(R"({"n":3})"), ParseError);
    EXPECT_THROW(parse_complex(R"({"n":3,"facets":[[0,3]]})"), ParseError);
    EXPECT_THROW(parse_complex(R"({"n":3,"facets":[[1,0],[2]]})"), ParseError);
    EXPECT_THROW(parse_complex(R"({"n":3,"facets":[[0,1,2],[0,1]]})"), ParseError);
    EXPECT_THROW(parse_complex(R"({"n":4,"facets":[[0,1,2]]})"), ParseError);
    EXPECT_EQ(parse_complex(R"({"n":0,"facets":[[]]})"), SimplicialComplex::empty_face());
}
