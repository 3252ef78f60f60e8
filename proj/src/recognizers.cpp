#include "homhom/recognizers.hpp"

#include <algorithm>
#include <stdexcept>

namespace homhom {

namespace {

    std::vector<Graph> components(const Graph& g)
    {
        std::vector<Graph> out;
        for (VertexSet c : connected_components(g))
            out.push_back(induced_subgraph(g, c).graph);
        return out;
    }

    bool all_isomorphic(const std::vector<Graph>& parts)
    {
        return std::all_of(parts.begin() + 1, parts.end(), [&](const Graph& h) { return is_isomorphic(parts.front(), h); });
    }

    bool is_regular(const Graph& g, int d)
    {
        for (Vertex v : g.vertices())
            if (g.degree(v) != d)
                return false;
        return true;
    }

    // Part sizes when g is complete multipartite (complement is a disjoint
    // union of cliques), otherwise nullopt.
    std::optional<std::vector<int>> multipartite_parts(const Graph& g)
    {
        const Graph co = complement(g);
        std::vector<int> sizes;
        for (VertexSet c : connected_components(co)) {
            if (!is_complete(induced_subgraph(co, c).graph))
                return std::nullopt;
            sizes.push_back(c.size());
        }
        std::sort(sizes.begin(), sizes.end());
        return sizes;
    }

    std::optional<FamilyDescriptor> identify_cii_component(const Graph& h)
    {
        const int n = h.order();
        if (is_complete(h))
            return FamilyDescriptor{FamilyTag::Complete, {n}};
        if (auto parts = multipartite_parts(h)) {
            const int t = static_cast<int>(parts->size());
            const int s = parts->front();
            if (t >= 2 && s >= 2 && parts->back() == s)
                return FamilyDescriptor{FamilyTag::RegularMultipartite, {t, s}};
            return std::nullopt;
        }
        if (n >= 5 && is_regular(h, 2))
            return FamilyDescriptor{FamilyTag::Cycle, {n}};
        for (int s = 3; s * s <= n; ++s)
            if (s * s == n && is_regular(h, 2 * (s - 1)) && is_isomorphic(h, make({FamilyTag::LineKss, {s}})))
                return FamilyDescriptor{FamilyTag::LineKss, {s}};
        if (auto b = is_bcpm(h))
            return FamilyDescriptor{FamilyTag::Bcpm, {*b}};
        if (n == 10 && is_regular(h, 3) &&
            canonical_form(h, 16) == canonical_form(make({FamilyTag::Petersen, {}}), 16))
            return FamilyDescriptor{FamilyTag::Petersen, {}};
        if (n == 16 && is_regular(h, 5) && canonical_form(h, 16) == canonical_form(make({FamilyTag::Clebsch, {}}), 16))
            return FamilyDescriptor{FamilyTag::Clebsch, {}};
        return std::nullopt;
    }

    void require_connected(const Graph& g, const char* what)
    {
        if (!is_connected(g))
            throw std::invalid_argument(std::string(what) + ": graph must be connected");
    }

    // PCM(n)-freeness of a graph whose parts each have a common neighbour.
    // Such a common neighbour sees the whole n-part of any embedded PCM(n)
    // graph, so max degree below n settles it.
    bool b2_star_pcm_free(const Graph& g, int n)
    {
        return g.max_degree() <= n - 1 || !embeds_pcm(g, n).has_value();
    }

} // namespace

std::optional<UnionOfCopies> classify_cii(const Graph& g)
{
    auto parts = components(g);
    if (!all_isomorphic(parts))
        return std::nullopt;
    auto family = identify_cii_component(parts.front());
    if (!family)
        return std::nullopt;
    return UnionOfCopies{*family, static_cast<int>(parts.size())};
}

bool is_chi(const Graph& g)
{
    auto parts = components(g);
    return std::all_of(parts.begin(), parts.end(), [&](const Graph& h) {
        return is_complete(h) && h.order() == parts.front().order();
    });
}

bool is_cmi(const Graph& g)
{
    auto parts = components(g);
    if (!all_isomorphic(parts))
        return false;
    const Graph& h = parts.front();
    const int n = h.order();
    if (is_complete(h))
        return true;
    if (n >= 3 && is_regular(h, 2))
        return true;
    auto sides = bipartition(h);
    return sides && sides->part_x.size() == sides->part_y.size() && sides->part_x.size() >= 2 &&
           h.edge_count() == sides->part_x.size() * sides->part_y.size();
}

std::optional<int> is_kn_treelike(const Graph& g)
{
    require_connected(g, "is_kn_treelike");
    if (g.order() < 2)
        return std::nullopt;
    int clique = -1;
    for (Vertex v : g.vertices()) {
        Graph nb = induced_subgraph(g, g.row(v)).graph;
        for (VertexSet c : connected_components(nb)) {
            if (!is_complete(induced_subgraph(nb, c).graph))
                return std::nullopt;
            if (clique < 0)
                clique = c.size();
            else if (clique != c.size())
                return std::nullopt;
        }
    }
    for (int len : induced_cycle_lengths(g))
        if (len != 3)
            return std::nullopt;
    return clique + 1;
}

bool b1_holds(const Graph& g)
{
    for (int len : induced_cycle_lengths(g))
        if (len != 4)
            return false;
    return !embeds(make({FamilyTag::TwoSquares, {}}), g);
}

bool b2_holds(const Graph& g)
{
    if (g.order() < 2 || !is_connected(g))
        return false;
    auto sides = bipartition(g);
    if (!sides)
        return false;
    const int delta = g.max_degree();
    for (VertexSet part : {sides->part_x, sides->part_y}) {
        // A common neighbour of a set is one of each of its subsets, so the
        // largest relevant size suffices.
        const int k = std::min(delta, part.size());
        const bool ok = for_each_subset_of_size(part, k, [&](VertexSet s) { return !common_neighbors(g, s).empty(); });
        if (!ok)
            return false;
    }
    return true;
}

bool b2_star_holds(const Graph& g)
{
    if (g.order() < 2 || !is_connected(g))
        return false;
    auto sides = bipartition(g);
    return sides && !common_neighbors(g, sides->part_x).empty() && !common_neighbors(g, sides->part_y).empty();
}

std::optional<int> is_bcpm(const Graph& g)
{
    if (!is_connected(g))
        return std::nullopt;
    auto sides = bipartition(g);
    if (!sides)
        return std::nullopt;
    const int n = sides->part_x.size();
    if (n < 3 || sides->part_y.size() != n || !is_regular(g, n - 1))
        return std::nullopt;
    return n;
}

std::string chh_family_name(ChhFamily f)
{
    switch (f) {
    case ChhFamily::K1:
        return "k1";
    case ChhFamily::KnTreelike:
        return "kn-treelike";
    case ChhFamily::B1:
        return "b1";
    case ChhFamily::B2Star:
        return "b2-star";
    case ChhFamily::Bcpm:
        return "bcpm";
    }
    return "unknown";
}

std::optional<ChhMatch> is_chh_connected(const Graph& g)
{
    require_connected(g, "is_chh_connected");
    std::vector<std::pair<ChhFamily, int>> all;
    if (g.order() == 1)
        all.emplace_back(ChhFamily::K1, 0);
    if (auto n = is_kn_treelike(g))
        all.emplace_back(ChhFamily::KnTreelike, *n);
    const bool bipartite = bipartition(g).has_value();
    if (bipartite && g.order() > 1 && b1_holds(g))
        all.emplace_back(ChhFamily::B1, 0);
    if (b2_star_holds(g))
        all.emplace_back(ChhFamily::B2Star, 0);
    if (auto n = is_bcpm(g))
        all.emplace_back(ChhFamily::Bcpm, *n);
    if (all.empty())
        return std::nullopt;
    return ChhMatch{all.front().first, all.front().second, all};
}

bool chh_symmetric(const Graph& g1, const Graph& g2)
{
    if (!is_connected(g1) || !is_connected(g2) || !is_chh_connected(g1) || !is_chh_connected(g2))
        throw std::invalid_argument("chh_symmetric: both graphs must be connected and C-HH");

    const bool trivial1 = g1.order() == 1;
    const bool trivial2 = g2.order() == 1;
    if (trivial1 || trivial2)
        return trivial1 && trivial2;

    // Non-bipartite connected C-HH graphs are K_n-treelike with n >= 3 and
    // have core K_n; bipartite ones have core K_2.
    const bool bip1 = bipartition(g1).has_value();
    const bool bip2 = bipartition(g2).has_value();
    if (!bip1 || !bip2)
        return !bip1 && !bip2 && is_kn_treelike(g1) == is_kn_treelike(g2);

    if (b1_holds(g1) && b1_holds(g2))
        return true;
    if (!b2_holds(g1) || !b2_holds(g2))
        return false;

    const auto c1 = is_bcpm(g1);
    const auto c2 = is_bcpm(g2);
    if (c1 && c2)
        return *c1 == *c2;
    const int d1 = g1.max_degree();
    const int d2 = g2.max_degree();
    if (d1 == d2)
        return true;
    const Graph& small = d1 < d2 ? g1 : g2;
    const Graph& large = d1 < d2 ? g2 : g1;
    if (b2_star_holds(small))
        return true;
    // The smaller one satisfies B2 without B2*, so it is some bcpm(n); the
    // larger one is then B2*.
    const int n = *is_bcpm(small);
    return b2_star_pcm_free(large, n);
}

std::string chh_case_label(ChhCase c)
{
    switch (c) {
    case ChhCase::Connected:
        return "connected";
    case ChhCase::IndependentSet:
        return "a";
    case ChhCase::Treelike:
        return "b";
    case ChhCase::AllB1:
        return "c";
    case ChhCase::AllB2Star:
        return "d";
    case ChhCase::BcpmMix:
        return "e";
    }
    return "?";
}

std::optional<ChhClassification> is_chh(const Graph& g)
{
    if (is_connected(g)) {
        auto m = is_chh_connected(g);
        if (!m)
            return std::nullopt;
        return ChhClassification{ChhCase::Connected, m->param, m};
    }

    auto parts = components(g);
    for (const auto& h : parts)
        if (!is_chh_connected(h))
            return std::nullopt;

    auto count = [&](auto pred) { return std::count_if(parts.begin(), parts.end(), pred); };
    const auto total = static_cast<std::ptrdiff_t>(parts.size());

    // K_1 is symmetric only with K_1.
    if (count([](const Graph& h) { return h.order() == 1; }) > 0) {
        if (count([](const Graph& h) { return h.order() == 1; }) == total)
            return ChhClassification{ChhCase::IndependentSet};
        return std::nullopt;
    }

    if (count([](const Graph& h) { return !bipartition(h); }) > 0) {
        auto n = is_kn_treelike(parts.front());
        if (!n || *n < 3)
            return std::nullopt;
        if (count([&](const Graph& h) { return is_kn_treelike(h) == n; }) != total)
            return std::nullopt;
        return ChhClassification{ChhCase::Treelike, *n};
    }

    std::optional<int> bcpm_n;
    for (const auto& h : parts)
        if (auto b = is_bcpm(h)) {
            if (bcpm_n && *bcpm_n != *b)
                return std::nullopt;
            bcpm_n = b;
        }
    if (bcpm_n) {
        for (const auto& h : parts)
            if (!is_bcpm(h) && !(b2_star_holds(h) && b2_star_pcm_free(h, *bcpm_n)))
                return std::nullopt;
        return ChhClassification{ChhCase::BcpmMix, *bcpm_n};
    }

    if (count([](const Graph& h) { return b1_holds(h); }) == total)
        return ChhClassification{ChhCase::AllB1};
    if (count([](const Graph& h) { return b2_star_holds(h); }) == total)
        return ChhClassification{ChhCase::AllB2Star};
    return std::nullopt;
}

std::optional<std::vector<int>> is_multiclaw(const Graph& g)
{
    // The complement of K_m + (j_1 K_k) + ... (edge-complete unions) is
    // m K_1 plus one complete j_alpha-partite graph with parts of size k
    // per alpha.
    const Graph co = complement(g);
    int m = 0;
    int k = 0;
    std::vector<int> js;
    for (VertexSet c : connected_components(co)) {
        if (c.size() == 1) {
            ++m;
            continue;
        }
        auto parts = multipartite_parts(induced_subgraph(co, c).graph);
        if (!parts || parts->front() != parts->back())
            return std::nullopt;
        const int size = parts->front();
        if (k != 0 && size != k)
            return std::nullopt;
        k = size;
        js.push_back(static_cast<int>(parts->size()));
    }
    std::sort(js.begin(), js.end());
    std::vector<int> out{m, k == 0 ? 1 : k};
    out.insert(out.end(), js.begin(), js.end());
    return out;
}

} // namespace homhom
