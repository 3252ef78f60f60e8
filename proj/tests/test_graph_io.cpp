#include <doctest.h>

#include <random>

#include "homhom/families.hpp"
#include "homhom/graph_io.hpp"
#include "support/brute.hpp"
#include "support/named.hpp"

using namespace homhom;
using namespace named;

TEST_CASE("graph6 known strings")
{
    CHECK(to_graph6(K(4)) == "C~");
    CHECK(to_graph6(P(4)) == "Ch");
    CHECK(to_graph6(Graph(1)) == "@");
    CHECK(to_graph6(Graph(6)) == "E???");
    CHECK(parse_graph6("C~") == K(4));
    CHECK(parse_graph6(">>graph6<<Ch\n") == P(4));
    // The usual published Petersen string, in its own labelling.
    CHECK(is_isomorphic(parse_graph6("IheA@GUAo"), petersen()));
}

TEST_CASE("graph6 malformed input")
{
    CHECK_THROWS_AS(parse_graph6(""), ParseError);
    CHECK_THROWS_AS(parse_graph6("!!"), ParseError);
    CHECK_THROWS_AS(parse_graph6("C"), ParseError);   // missing data
    CHECK_THROWS_AS(parse_graph6("C~~"), ParseError); // extra data
    CHECK_THROWS_AS(parse_graph6("?"), ParseError);   // order 0
    CHECK_THROWS_AS(parse_graph6("B@"), ParseError);  // padding bit set
}

TEST_CASE("graph6 large orders use the long size field")
{
    std::mt19937_64 rng(3);
    for (int n : {62, 63, 64}) {
        Graph g = brute::random_graph(n, 0.3, rng);
        std::string s = to_graph6(g);
        if (n >= 63)
            CHECK(s[0] == '~');
        else
            CHECK(s[0] == static_cast<char>(63 + n));
        CHECK(parse_graph6(s) == g);
    }
}

TEST_CASE("edge list parsing")
{
    Graph g = parse_edge_list("# a triangle plus a pendant\n4 4\n\n0 1\n0 2 # chord\n1 2\n2 3\n");
    CHECK(g.order() == 4);
    CHECK(g.edge_count() == 4);
    CHECK(g.adjacent(2, 3));
    CHECK(to_edge_list(g) == "4 4\n0 1\n0 2\n1 2\n2 3\n");

    CHECK_THROWS_AS(parse_edge_list(""), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3 1\n0 x\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n"), ParseError); // fewer edges than declared
    CHECK_THROWS_AS(parse_edge_list("3 1\n1 0\n"), ParseError); // u < v required
    CHECK_THROWS_AS(parse_edge_list("3 1\n0 3\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3 1\n1 1\n"), ParseError);
}

TEST_CASE("auto-detection")
{
    CHECK(parse_graph_auto("Ch\n") == P(4));
    CHECK(parse_graph_auto("# c4\n4 4\n0 1\n1 2\n2 3\n0 3\n") == C(4));
}

TEST_CASE("round trip over every graph on up to 7 vertices, both formats")
{
    for (const Graph& g : enumerate_graphs(7, false)) {
        CHECK(parse_graph6(to_graph6(g)) == g);
        CHECK(parse_edge_list(to_edge_list(g)) == g);
    }
}
