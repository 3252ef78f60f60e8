#include "homhom/families.hpp"

#include <algorithm>
#include <array>
#include <iostream>
#include <map>
#include <numeric>
#include <stdexcept>

namespace homhom {

namespace {

    constexpr std::array<std::pair<FamilyTag, std::string_view>, 13> kNames{{
        {FamilyTag::Complete, "complete"},
        {FamilyTag::RegularMultipartite, "regular-multipartite"},
        {FamilyTag::Cycle, "cycle"},
        {FamilyTag::Path, "path"},
        {FamilyTag::LineKss, "line-kss"},
        {FamilyTag::Bcpm, "bcpm"},
        {FamilyTag::Petersen, "petersen"},
        {FamilyTag::Clebsch, "clebsch"},
        {FamilyTag::TwoSquares, "two-squares"},
        {FamilyTag::KnTreelike, "kn-treelike"},
        {FamilyTag::KmnTreelike, "kmn-treelike"},
        {FamilyTag::PcmExample, "pcm-example"},
        {FamilyTag::Multiclaw, "multiclaw"},
    }};

    void require(bool ok, const FamilyDescriptor& desc, const char* what)
    {
        if (!ok)
            throw std::invalid_argument(to_string(desc) + ": " + what);
    }

    void require_arity(const FamilyDescriptor& desc, std::size_t arity)
    {
        require(desc.params.size() == arity, desc, "wrong number of parameters");
    }

    Graph complete(int n)
    {
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                edges.push_back({u, v});
        return Graph(n, edges);
    }

    Graph cycle(int n)
    {
        std::vector<Edge> edges;
        for (int v = 0; v < n; ++v)
            edges.push_back({v, (v + 1) % n});
        return Graph(n, edges);
    }

    Graph path(int k)
    {
        std::vector<Edge> edges;
        for (int v = 0; v < k; ++v)
            edges.push_back({v, v + 1});
        return Graph(k + 1, edges);
    }

    Graph regular_multipartite(int t, int s)
    {
        std::vector<Edge> edges;
        const int n = t * s;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (u / s != v / s)
                    edges.push_back({u, v});
        return Graph(n, edges);
    }

    Graph line_kss(int s)
    {
        std::vector<Edge> edges;
        const int n = s * s;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q)
                if (p / s == q / s || p % s == q % s)
                    edges.push_back({p, q});
        return Graph(n, edges);
    }

    Graph bcpm(int n)
    {
        std::vector<Edge> edges;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j)
                    edges.push_back({i, n + j});
        return Graph(2 * n, edges);
    }

    Graph petersen()
    {
        std::vector<std::pair<int, int>> pairs;
        for (int a = 1; a <= 5; ++a)
            for (int b = a + 1; b <= 5; ++b)
                pairs.emplace_back(a, b);
        std::vector<Edge> edges;
        for (int p = 0; p < 10; ++p)
            for (int q = p + 1; q < 10; ++q) {
                auto [a, b] = pairs[p];
                auto [c, d] = pairs[q];
                if (a != c && a != d && b != c && b != d)
                    edges.push_back({p, q});
            }
        return Graph(10, edges);
    }

    Graph clebsch()
    {
        // Fold of the 5-cube: class {b, ~b} is represented by the member with
        // bit 4 clear.
        std::vector<Edge> edges;
        for (int b = 0; b < 16; ++b)
            for (int c = b + 1; c < 16; ++c) {
                const int d = std::popcount(static_cast<unsigned>(b ^ c));
                const int d_antipode = std::popcount(static_cast<unsigned>(b ^ (c ^ 31)));
                if (d == 1 || d_antipode == 1)
                    edges.push_back({b, c});
            }
        return Graph(16, edges);
    }

    Graph two_squares() { return Graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {2, 5}}); }

    Graph multiclaw(int m, int k, std::span<const int> js)
    {
        std::vector<Graph> blocks;
        if (m > 0)
            blocks.push_back(complete(m));
        for (int j : js) {
            std::vector<Graph> copies(static_cast<std::size_t>(j), complete(k));
            blocks.push_back(disjoint_union(copies));
        }
        Graph out = blocks.front();
        for (std::size_t i = 1; i < blocks.size(); ++i)
            out = edge_complete_union(out, blocks[i]);
        return out;
    }

    Graph block_graph(const Block& b)
    {
        if (b.b == 0)
            return complete(b.a);
        std::vector<Edge> edges;
        for (int u = 0; u < b.a; ++u)
            for (int v = 0; v < b.b; ++v)
                edges.push_back({u, b.a + v});
        return Graph(b.a + b.b, edges);
    }

    struct DisjointSets {
        explicit DisjointSets(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
        int find(int x)
        {
            while (parent[x] != x)
                x = parent[x] = parent[parent[x]];
            return x;
        }
        bool unite(int a, int b)
        {
            a = find(a);
            b = find(b);
            if (a == b)
                return false;
            parent[std::max(a, b)] = std::min(a, b);
            return true;
        }
        std::vector<int> parent;
    };

} // namespace

std::string_view family_name(FamilyTag tag)
{
    for (const auto& [t, name] : kNames)
        if (t == tag)
            return name;
    return "unknown";
}

FamilyTag family_tag_from_name(std::string_view name)
{
    for (const auto& [t, n] : kNames)
        if (n == name)
            return t;
    if (name == "fig8")
        return FamilyTag::PcmExample;
    if (name == "multipartite")
        return FamilyTag::RegularMultipartite;
    if (name == "kss-line")
        return FamilyTag::LineKss;
    throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

std::string to_string(const FamilyDescriptor& desc)
{
    std::string out(family_name(desc.tag));
    out += '(';
    for (std::size_t i = 0; i < desc.params.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(desc.params[i]);
    }
    out += ')';
    return out;
}

Graph make(const FamilyDescriptor& desc)
{
    const auto& p = desc.params;
    switch (desc.tag) {
    case FamilyTag::Complete:
        require_arity(desc, 1);
        require(p[0] >= 1 && p[0] <= kMaxVertices, desc, "n must be in 1..64");
        return complete(p[0]);
    case FamilyTag::RegularMultipartite:
        require_arity(desc, 2);
        require(p[0] >= 1 && p[1] >= 1 && p[0] * p[1] <= kMaxVertices, desc, "need t, s >= 1 and t*s <= 64");
        return regular_multipartite(p[0], p[1]);
    case FamilyTag::Cycle:
        require_arity(desc, 1);
        require(p[0] >= 3 && p[0] <= kMaxVertices, desc, "n must be in 3..64");
        return cycle(p[0]);
    case FamilyTag::Path:
        require_arity(desc, 1);
        require(p[0] >= 0 && p[0] < kMaxVertices, desc, "k must be in 0..63");
        return path(p[0]);
    case FamilyTag::LineKss:
        require_arity(desc, 1);
        require(p[0] >= 2 && p[0] <= 8, desc, "s must be in 2..8");
        return line_kss(p[0]);
    case FamilyTag::Bcpm:
        require_arity(desc, 1);
        require(p[0] >= 2 && p[0] <= 32, desc, "n must be in 2..32");
        return bcpm(p[0]);
    case FamilyTag::Petersen:
        require_arity(desc, 0);
        return petersen();
    case FamilyTag::Clebsch:
        require_arity(desc, 0);
        return clebsch();
    case FamilyTag::TwoSquares:
        require_arity(desc, 0);
        return two_squares();
    case FamilyTag::KnTreelike:
        require_arity(desc, 2);
        require(p[0] >= 2 && p[1] >= 1, desc, "need n >= 2 and at least one component");
        require(p[0] + (p[1] - 1) * (p[0] - 1) <= kMaxVertices, desc, "more than 64 vertices");
        return make_treelike(treelike_chain(p[0], p[1]));
    case FamilyTag::KmnTreelike: {
        require_arity(desc, 3);
        require(p[0] >= 1 && p[1] >= 1 && p[2] >= 1, desc, "need m, n >= 1 and at least one component");
        require(p[0] + p[1] + (p[2] - 1) * (p[0] + p[1] - 1) <= kMaxVertices, desc, "more than 64 vertices");
        TreeOfCliques spec;
        for (int i = 0; i < p[2]; ++i) {
            spec.blocks.push_back({p[0], p[1]});
            if (i > 0)
                spec.glues.push_back({i - 1, p[0] + p[1] - 1, i, 0});
        }
        return make_treelike(spec);
    }
    case FamilyTag::PcmExample:
        require_arity(desc, 1);
        return make_pcm_figure8(p[0]);
    case FamilyTag::Multiclaw: {
        require(p.size() >= 2, desc, "need at least m and k");
        const int m = p[0];
        const int k = p[1];
        std::span<const int> js(p.begin() + 2, p.end());
        require(m >= 0 && k >= 1, desc, "need m >= 0 and k >= 1");
        require(std::all_of(js.begin(), js.end(), [](int j) { return j >= 2; }), desc, "every j_alpha must be >= 2");
        require(m > 0 || !js.empty(), desc, "empty graph");
        int n = m;
        for (int j : js)
            n += j * k;
        require(n <= kMaxVertices, desc, "more than 64 vertices");
        return multiclaw(m, k, js);
    }
    }
    throw std::invalid_argument("unknown family tag");
}

TreeOfCliques treelike_chain(int n, int components)
{
    if (n < 2 || components < 1)
        throw std::invalid_argument("treelike_chain: need n >= 2 and components >= 1");
    TreeOfCliques spec;
    for (int i = 0; i < components; ++i) {
        spec.blocks.push_back({n, 0});
        if (i > 0)
            spec.glues.push_back({i - 1, n - 1, i, 0});
    }
    return spec;
}

Graph make_treelike(const TreeOfCliques& spec)
{
    const auto& blocks = spec.blocks;
    if (blocks.empty())
        throw std::invalid_argument("treelike: no blocks");
    const bool cliques = blocks.front().b == 0;
    for (const auto& b : blocks) {
        if ((b.b == 0) != cliques)
            throw std::invalid_argument("treelike: cannot mix clique and biclique blocks");
        if (cliques && (b.a < 2 || b.a != blocks.front().a))
            throw std::invalid_argument("treelike: clique blocks must all be K_n with the same n >= 2");
        if (!cliques && (b.a < 1 || b.b < 1))
            throw std::invalid_argument("treelike: biclique parts must be nonempty");
    }

    std::vector<int> offset;
    int total = 0;
    for (const auto& b : blocks) {
        offset.push_back(total);
        total += b.a + b.b;
    }

    // Blocks-and-glues graph must be a tree.
    const int k = static_cast<int>(blocks.size());
    if (static_cast<int>(spec.glues.size()) != k - 1)
        throw std::invalid_argument("treelike: gluing structure is not a tree (need blocks - 1 glues)");
    DisjointSets block_sets(k);
    DisjointSets vertex_sets(total);
    for (const auto& g : spec.glues) {
        if (g.block_a < 0 || g.block_a >= k || g.block_b < 0 || g.block_b >= k || g.block_a == g.block_b)
            throw std::invalid_argument("treelike: glue references an invalid block pair");
        auto block_size = [&](int i) { return blocks[i].a + blocks[i].b; };
        if (g.vertex_a < 0 || g.vertex_a >= block_size(g.block_a) || g.vertex_b < 0 || g.vertex_b >= block_size(g.block_b))
            throw std::invalid_argument("treelike: glue vertex out of range");
        if (!block_sets.unite(g.block_a, g.block_b))
            throw std::invalid_argument("treelike: gluing structure is not a tree (cycle)");
        vertex_sets.unite(offset[g.block_a] + g.vertex_a, offset[g.block_b] + g.vertex_b);
    }

    // No block may have two of its own vertices identified.
    for (int i = 0; i < k; ++i) {
        const int size = blocks[i].a + blocks[i].b;
        for (int u = 0; u < size; ++u)
            for (int v = u + 1; v < size; ++v)
                if (vertex_sets.find(offset[i] + u) == vertex_sets.find(offset[i] + v))
                    throw std::invalid_argument("treelike: glues identify two vertices of one block");
    }

    std::map<int, int> label;
    for (int x = 0; x < total; ++x)
        label.emplace(vertex_sets.find(x), static_cast<int>(label.size()));
    if (label.size() > static_cast<std::size_t>(kMaxVertices))
        throw std::invalid_argument("treelike: more than 64 vertices");

    std::vector<std::uint64_t> rows(label.size(), 0);
    for (int i = 0; i < k; ++i) {
        Graph local = block_graph(blocks[i]);
        for (const auto& [u, v] : local.edges()) {
            int a = label.at(vertex_sets.find(offset[i] + u));
            int b = label.at(vertex_sets.find(offset[i] + v));
            rows[a] |= std::uint64_t{1} << b;
            rows[b] |= std::uint64_t{1} << a;
        }
    }
    return Graph::from_rows(rows);
}

Graph make_pcm_figure8(int n)
{
    if (n < 4 || n + 3 > kMaxVertices)
        throw std::invalid_argument("pcm example: need 4 <= n <= 61");
    auto a = [](int i) { return i - 1; };
    auto b = [](int j) { return 2 + j; };
    std::vector<Edge> edges;
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= n; ++j) {
            bool missing = (i == 1 && (j == 1 || j == 3)) || (i == 2 && (j == 2 || j == 3));
            if (!missing)
                edges.push_back({a(i), b(j)});
        }
    return Graph(n + 3, edges);
}

std::vector<Graph> enumerate_graphs(int max_n, bool connected_only, bool allow_large)
{
    if (max_n < 1)
        throw std::invalid_argument("enumerate_graphs: max_n must be >= 1");
    if (max_n > kHardEnumerationBound || (max_n > kDefaultEnumerationBound && !allow_large))
        throw std::invalid_argument("enumerate_graphs: max_n " + std::to_string(max_n) + " above bound");
    if (max_n > kDefaultEnumerationBound)
        std::cerr << "warning: enumerating graphs on " << max_n << " vertices is slow\n";

    // Every graph on n vertices is a graph on n-1 vertices plus one vertex
    // with some neighbourhood, so extending each class representative in
    // all 2^(n-1) ways reaches every class.
    std::vector<Graph> out;
    std::vector<Graph> level{Graph(1)};
    for (int n = 1;; ++n) {
        for (const auto& g : level)
            if (!connected_only || is_connected(g))
                out.push_back(g);
        if (n == max_n)
            break;
        std::map<std::string, Graph> next;
        for (const auto& g : level) {
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
                std::vector<std::uint64_t> rows(static_cast<std::size_t>(n + 1), 0);
                for (Vertex v = 0; v < n; ++v)
                    rows[v] = g.row(v).bits() | (((mask >> v) & 1U) << n);
                rows[n] = mask;
                Graph h = Graph::from_rows(rows);
                next.try_emplace(canonical_form(h), std::move(h));
            }
        }
        level.clear();
        for (auto& [key, g] : next)
            level.push_back(std::move(g));
    }
    return out;
}

} // namespace homhom
