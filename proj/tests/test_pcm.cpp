#include <doctest.h>

#include <random>

#include "homhom/recognizers.hpp"
#include "support/brute.hpp"
#include "support/named.hpp"

using namespace homhom;
using namespace named;

namespace {

Graph certificate_graph(const Graph& g, const PcmCertificate& c) { return induced_subgraph(g, c.z_set | c.w_set).graph; }

const Graph& two_k2()
{
    static const Graph g = unite({K(2), K(2)});
    return g;
}

// Random connected bipartite graph on parts Z = 0..z-1 and W = z..z+w-1 in
// which every z misses some w.
Graph random_precondition_input(std::mt19937_64& rng, int z, int w)
{
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double p = 0.4 + 0.5 * unit(rng);
    while (true) {
        std::vector<Edge> edges;
        for (int a = 0; a < z; ++a) {
            std::vector<int> row;
            for (int b = 0; b < w; ++b)
                if (unit(rng) < p)
                    row.push_back(b);
            if (static_cast<int>(row.size()) == w)
                row.erase(row.begin() + static_cast<long>(rng() % row.size()));
            for (int b : row)
                edges.push_back({a, z + b});
        }
        Graph g(z + w, edges);
        if (is_connected(g))
            return g;
    }
}

} // namespace

TEST_CASE("embeds_pcm examples")
{
    auto b4 = embeds_pcm(bcpm(4), 4);
    REQUIRE(b4);
    CHECK(pcm_certificate_problem(bcpm(4), *b4, 4).empty());
    CHECK(b4->w_set.size() == 4);
    // The whole graph is a certificate too, with x_i matched to y_i.
    PcmCertificate whole{VertexSet{0, 1, 2, 3}, VertexSet{4, 5, 6, 7}, {{0, 4}, {1, 5}, {2, 6}, {3, 7}}};
    CHECK(pcm_certificate_problem(bcpm(4), whole, 4).empty());

    CHECK_FALSE(embeds_pcm(fig8(4), 4).has_value());
    CHECK_FALSE(embeds_pcm(fig8(5), 5).has_value());
    CHECK_FALSE(embeds_pcm(Kmn(3, 4), 3).has_value());
    CHECK_FALSE(embeds_pcm(Kmn(4, 4), 4).has_value());
    CHECK(embeds_pcm(C(6), 3).has_value());
    CHECK_FALSE(embeds_pcm(C(6), 4).has_value());
    CHECK_THROWS_AS(embeds_pcm(bcpm(3), 2), std::invalid_argument);
}

TEST_CASE("certificate validation catches each defect")
{
    const Graph g = bcpm(3); // x_i = i, y_j = 3 + j, x_i ~ y_j iff i != j
    PcmCertificate good{VertexSet{0, 1, 2}, VertexSet{3, 4, 5}, {{0, 3}, {1, 4}, {2, 5}}};
    CHECK(pcm_certificate_problem(g, good, 3).empty());

    auto adjacent = good;
    adjacent.matching = {{0, 4}, {1, 3}, {2, 5}};
    CHECK_FALSE(pcm_certificate_problem(g, adjacent, 3).empty());

    auto repeated = good;
    repeated.matching = {{0, 3}, {1, 3}, {2, 5}};
    CHECK_FALSE(pcm_certificate_problem(g, repeated, 3).empty());

    auto short_match = good;
    short_match.matching.pop_back();
    CHECK_FALSE(pcm_certificate_problem(g, short_match, 3).empty());

    auto wrong_n = good;
    CHECK_FALSE(pcm_certificate_problem(g, wrong_n, 4).empty());

    // A smaller first part is allowed.
    PcmCertificate partial{VertexSet{0, 1}, VertexSet{3, 4, 5}, {{0, 3}, {1, 4}}};
    CHECK(pcm_certificate_problem(g, partial, 3).empty());
    const Graph loose(6, {{0, 4}, {1, 3}});
    PcmCertificate apart{VertexSet{0, 1}, VertexSet{3, 4, 5}, {{0, 3}, {1, 5}}};
    CHECK(pcm_certificate_problem(loose, apart, 3) == "induced subgraph is disconnected");
    PcmCertificate not_bipartite{VertexSet{0, 3}, VertexSet{1, 4, 5}, {{0, 1}, {3, 4}}};
    CHECK_FALSE(pcm_certificate_problem(g, not_bipartite, 3).empty());
}

TEST_CASE("pcm_extract examples")
{
    const Graph b4 = bcpm(4);
    auto c = pcm_extract(b4, VertexSet{0, 1, 2, 3}, 4);
    CHECK(pcm_certificate_problem(b4, c, 4).empty());

    // In the figure-8 graph a_3 sees the whole other part.
    try {
        pcm_extract(fig8(4), VertexSet{0, 1, 2}, 4);
        FAIL("expected a precondition failure");
    } catch (const PcmPreconditionError& e) {
        CHECK(std::string(e.what()).find("vertex 2 of Z") != std::string::npos);
    }
    CHECK_THROWS_AS(pcm_extract(bcpm(3), VertexSet{0, 1, 2}, 4), PcmPreconditionError);
    CHECK_THROWS_AS(pcm_extract(bcpm(3), VertexSet{0, 1, 3}, 3), PcmPreconditionError);
    CHECK_THROWS_AS(pcm_extract(bcpm(2), VertexSet{0, 1}, 3), PcmPreconditionError);
}

TEST_CASE("pcm_extract on random inputs is deterministic and valid")
{
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 3);
        const int z = 2 + static_cast<int>(rng() % 4);
        const int w = n + static_cast<int>(rng() % 3);
        Graph a = random_precondition_input(rng, z, w);
        const VertexSet zs = VertexSet::prefix(z);
        auto c1 = pcm_extract(a, zs, n);
        CHECK(pcm_certificate_problem(a, c1, n).empty());
        auto c2 = pcm_extract(a, zs, n);
        CHECK(c1.z_set == c2.z_set);
        CHECK(c1.w_set == c2.w_set);
        CHECK(c1.matching == c2.matching);
        CHECK(embeds(two_k2(), certificate_graph(a, c1)));
    }
}

TEST_CASE("extraction and brute-force search agree on connected bipartite graphs up to 7 vertices")
{
    for (const Graph& g : enumerate_graphs(7, true)) {
        auto bip = bipartition(g);
        if (!bip || g.order() < 4)
            continue;
        for (int n = 3; n <= g.order() - 1; ++n) {
            auto found = embeds_pcm(g, n);
            if (found) {
                CHECK(pcm_certificate_problem(g, *found, n).empty());
                CHECK(embeds(two_k2(), certificate_graph(g, *found)));
            }
            for (VertexSet z : {bip->part_x, bip->part_y}) {
                try {
                    auto c = pcm_extract(g, z, n);
                    CHECK(pcm_certificate_problem(g, c, n).empty());
                    CHECK(found.has_value());
                } catch (const PcmPreconditionError&) {
                }
            }
        }
    }
}
