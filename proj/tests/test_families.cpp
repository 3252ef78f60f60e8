#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "homhom/families.hpp"
#include "homhom/graph_io.hpp"
#include "support/brute.hpp"
#include "support/named.hpp"

using namespace homhom;
using namespace named;

namespace {

bool regular(const Graph& g, int d)
{
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) != d)
            return false;
    return true;
}

} // namespace

TEST_CASE("family names round-trip and aliases resolve")
{
    for (int t = 0; t <= static_cast<int>(FamilyTag::Multiclaw); ++t) {
        auto tag = static_cast<FamilyTag>(t);
        CHECK(family_tag_from_name(family_name(tag)) == tag);
    }
    CHECK(family_tag_from_name("fig8") == FamilyTag::PcmExample);
    CHECK(family_tag_from_name("multipartite") == FamilyTag::RegularMultipartite);
    CHECK(family_tag_from_name("kss-line") == FamilyTag::LineKss);
    CHECK_THROWS_AS(family_tag_from_name("dodecahedron"), std::invalid_argument);
    CHECK(to_string({FamilyTag::Bcpm, {4}}) == "bcpm(4)");
}

TEST_CASE("make: named members")
{
    CHECK(is_isomorphic(bcpm(3), C(6)));
    CHECK(is_isomorphic(bcpm(2), unite({K(2), K(2)})));

    const Graph cl = clebsch();
    CHECK(cl.order() == 16);
    CHECK(regular(cl, 5));
    for (Vertex v = 0; v < cl.order(); ++v)
        CHECK(induced_subgraph(cl, neighbors(cl, v)).graph.edge_count() == 0);

    const Graph pet = petersen();
    CHECK(pet.order() == 10);
    CHECK(regular(pet, 3));
    CHECK(girth(pet) == 5);
    // Kneser labelling: 12 ~ 34, 12 ~ 35, 12 ~ 45.
    CHECK(pet.adjacent(0, 7));
    CHECK_FALSE(pet.adjacent(0, 1));

    const Graph l3 = line_kss(3);
    CHECK(l3.order() == 9);
    CHECK(regular(l3, 4));
    CHECK(is_isomorphic(line_kss(2), C(4)));

    const Graph ts = two_squares();
    CHECK(ts.order() == 6);
    CHECK(ts.edge_count() == 7);

    CHECK(is_isomorphic(multipartite(3, 2), complement(unite({K(2), K(2), K(2)}))));
    CHECK(is_isomorphic(multipartite(4, 1), K(4)));
    CHECK(is_isomorphic(fam(FamilyTag::Path, {3}), P(4)));
    CHECK(fam(FamilyTag::Path, {0}).order() == 1);
}

TEST_CASE("make: invalid parameters throw")
{
    CHECK_THROWS_AS(fam(FamilyTag::Bcpm, {1}), std::invalid_argument);
    CHECK_THROWS_AS(fam(FamilyTag::LineKss, {1}), std::invalid_argument);
    CHECK_THROWS_AS(fam(FamilyTag::KnTreelike, {1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(fam(FamilyTag::Cycle, {2}), std::invalid_argument);
    CHECK_THROWS_AS(fam(FamilyTag::Complete, {}), std::invalid_argument);
    CHECK_THROWS_AS(fam(FamilyTag::Petersen, {1}), std::invalid_argument);
    CHECK_THROWS_AS(fam(FamilyTag::Multiclaw, {1, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(fam(FamilyTag::Complete, {65}), std::invalid_argument);
    CHECK_THROWS_AS(fig8(3), std::invalid_argument);
}

TEST_CASE("bcpm invariants")
{
    for (int n = 2; n <= 8; ++n) {
        Graph g = bcpm(n);
        auto b = bipartition(g);
        REQUIRE(b);
        if (n > 2) {
            CHECK(b->part_x.size() == n);
            CHECK(b->part_y.size() == n);
        }
        CHECK(regular(g, n - 1));
        CHECK(g.order() == 2 * n);
    }
}

TEST_CASE("multiclaw: K_m joined with j copies of K_k")
{
    // m = 1, k = 1, j = (3): a claw.
    CHECK(is_isomorphic(fam(FamilyTag::Multiclaw, {1, 1, 3}), star(3)));
    // K_2 joined to 2*K_2.
    Graph g = fam(FamilyTag::Multiclaw, {2, 2, 2});
    CHECK(g.order() == 6);
    CHECK(g.edge_count() == 1 + 2 + 2 * 4);
    // Two groups are joined to each other: 2*K_1 joined to 3*K_1 is K_{2,3}.
    CHECK(is_isomorphic(fam(FamilyTag::Multiclaw, {0, 1, 2, 3}), Kmn(2, 3)));
}

TEST_CASE("treelike construction")
{
    Graph bow = make_treelike({{{3}, {3}}, {{0, 2, 1, 0}}});
    CHECK(bow.order() == 5);
    CHECK(bow.edge_count() == 6);
    CHECK(is_isomorphic(bow, bowtie()));
    CHECK(make_treelike({{{6}}, {}}) == K(6));

    // A star of three triangles around one shared vertex.
    Graph star3 = make_treelike({{{3}, {3}, {3}}, {{0, 0, 1, 0}, {0, 0, 2, 0}}});
    CHECK(star3.order() == 7);
    CHECK(star3.degree(0) == 6);

    // Trees as K_2-treelike graphs.
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const int blocks = 1 + static_cast<int>(rng() % 8);
        TreeOfCliques t;
        t.blocks.assign(blocks, Block{2});
        for (int b = 1; b < blocks; ++b)
            t.glues.push_back({static_cast<int>(rng() % b), static_cast<Vertex>(rng() % 2), b, 0});
        Graph tree = make_treelike(t);
        CHECK(tree.order() == blocks + 1);
        CHECK(is_connected(tree));
        CHECK_FALSE(girth(tree).has_value());
    }

    CHECK_THROWS_AS(make_treelike({{{3}, {3}}, {}}), std::invalid_argument);
    CHECK_THROWS_AS(make_treelike({{{3}, {4}}, {{0, 0, 1, 0}}}), std::invalid_argument);
    CHECK_THROWS_AS(make_treelike({{{3}, {2, 2}}, {{0, 0, 1, 0}}}), std::invalid_argument);
    CHECK_THROWS_AS(make_treelike({{{3}, {3}, {3}}, {{0, 0, 1, 0}, {0, 1, 1, 1}}}), std::invalid_argument);
    CHECK_THROWS_AS(make_treelike({{{3}, {3}}, {{0, 3, 1, 0}}}), std::invalid_argument);
    // Gluing 0.0 to 1.0 and 1.1 to 2.0 and 2.1 to 0.1 closes a cycle.
    CHECK_THROWS_AS(make_treelike({{{3}, {3}, {3}}, {{0, 0, 1, 0}, {1, 1, 2, 0}, {2, 1, 0, 1}}}),
                    std::invalid_argument);
}

TEST_CASE("treelike outputs have only triangles (or only squares) as induced cycles")
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        const bool bicliques = trial % 2 == 1;
        const int blocks = 1 + static_cast<int>(rng() % 4);
        TreeOfCliques t;
        Block shape = bicliques ? Block{2, 2 + static_cast<int>(rng() % 2)} : Block{3 + static_cast<int>(rng() % 2)};
        const int block_size = shape.a + shape.b;
        t.blocks.assign(blocks, shape);
        for (int b = 1; b < blocks; ++b)
            t.glues.push_back({static_cast<int>(rng() % b), static_cast<Vertex>(rng() % block_size), b,
                               static_cast<Vertex>(rng() % block_size)});
        Graph g = make_treelike(t);
        CHECK(is_connected(g));
        const auto cycles = induced_cycle_lengths(g);
        CHECK(cycles == std::set<int>{bicliques ? 4 : 3});
    }
}

TEST_CASE("figure-8 example")
{
    Graph g = fig8(4);
    CHECK(g.order() == 7);
    CHECK(g.edge_count() == 8);
    CHECK(embeds(two_squares(), g));
    // a_3 adjacent to all of B.
    CHECK(neighbors(g, 2) == VertexSet{3, 4, 5, 6});
    auto b = bipartition(g);
    REQUIRE(b);
    CHECK(b->part_x.size() == 3);
    for (int n = 4; n <= 8; ++n)
        CHECK(fig8(n).edge_count() == 3 * n - 4);
}

TEST_CASE("enumerate_graphs counts and uniqueness")
{
    const std::vector<int> all{1, 2, 4, 11, 34, 156, 1044};
    const std::vector<int> connected{1, 1, 2, 6, 21, 112, 853};
    auto graphs = enumerate_graphs(7, false);
    auto conn = enumerate_graphs(7, true);
    std::map<int, int> by_order, conn_by_order;
    std::set<std::string> forms;
    for (const auto& g : graphs) {
        ++by_order[g.order()];
        CHECK(forms.insert(std::to_string(g.order()) + canonical_form(g)).second);
    }
    for (const auto& g : conn) {
        CHECK(is_connected(g));
        ++conn_by_order[g.order()];
    }
    for (int n = 1; n <= 7; ++n) {
        CHECK(by_order[n] == all[n - 1]);
        CHECK(conn_by_order[n] == connected[n - 1]);
    }
    CHECK(enumerate_graphs(4, true).size() == 1 + 1 + 2 + 6);
    CHECK_THROWS(enumerate_graphs(8, false));
    CHECK_THROWS(enumerate_graphs(9, false, true));
    CHECK_THROWS(enumerate_graphs(0, false));
}

TEST_CASE("enumerate_graphs order is (order, canonical form) and deterministic")
{
    auto a = enumerate_graphs(6, false);
    auto b = enumerate_graphs(6, false);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        CHECK(a[i] == b[i]);
    for (std::size_t i = 1; i < a.size(); ++i) {
        auto ka = std::make_pair(a[i - 1].order(), canonical_form(a[i - 1]));
        auto kb = std::make_pair(a[i].order(), canonical_form(a[i]));
        CHECK(ka < kb);
    }
}

TEST_CASE("enumeration agrees with brute labeled enumeration up to 5 vertices")
{
    std::set<std::string> ref;
    for (int n = 1; n <= 5; ++n)
        for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n * (n - 1) / 2)); ++code)
            ref.insert(std::to_string(n) + ":" + brute::canonical(brute::from_code(n, code)));
    std::set<std::string> got;
    for (const auto& g : enumerate_graphs(5, false))
        got.insert(std::to_string(g.order()) + ":" + brute::canonical(g));
    CHECK(got == ref);
}
