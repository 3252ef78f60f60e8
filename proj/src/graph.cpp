#include "homhom/graph.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace homhom {

VertexSet::VertexSet(std::initializer_list<Vertex> members)
{
    for (Vertex v : members) {
        if (v < 0 || v >= kMaxVertices)
            throw std::out_of_range("vertex " + std::to_string(v) + " outside 0..63");
        bits_ |= std::uint64_t{1} << v;
    }
}

std::vector<Vertex> VertexSet::to_vector() const
{
    std::vector<Vertex> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (Vertex v : *this)
        out.push_back(v);
    return out;
}

Graph::Graph(int n) : n_(n)
{
    if (n < 1 || n > kMaxVertices)
        throw std::invalid_argument("graph order must be in 1..64, got " + std::to_string(n));
    rows_.assign(static_cast<std::size_t>(n), 0);
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n)
{
    for (const auto& [u, v] : edges) {
        check_vertex(u);
        check_vertex(v);
        if (u == v)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        rows_[u] |= std::uint64_t{1} << v;
        rows_[v] |= std::uint64_t{1} << u;
    }
}

Graph::Graph(int n, std::initializer_list<Edge> edges)
    : Graph(n, std::span<const Edge>(edges.begin(), edges.size()))
{
}

Graph Graph::from_rows(std::span<const std::uint64_t> rows)
{
    Graph g(static_cast<int>(rows.size()));
    const auto all = VertexSet::prefix(g.n_).bits();
    for (int v = 0; v < g.n_; ++v) {
        if (rows[v] & ~all)
            throw std::invalid_argument("adjacency row references a vertex out of range");
        if ((rows[v] >> v) & 1U)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(v));
        g.rows_[v] = rows[v];
    }
    for (int u = 0; u < g.n_; ++u)
        for (Vertex v : VertexSet(rows[u]))
            if (!((rows[v] >> u) & 1U))
                throw std::invalid_argument("adjacency rows are not symmetric");
    return g;
}

void Graph::check_vertex(Vertex v) const
{
    if (v < 0 || v >= n_)
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range for order " + std::to_string(n_));
}

int Graph::max_degree() const
{
    int best = 0;
    for (auto r : rows_)
        best = std::max(best, std::popcount(r));
    return best;
}

int Graph::edge_count() const
{
    int twice = 0;
    for (auto r : rows_)
        twice += std::popcount(r);
    return twice / 2;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v : VertexSet(rows_[u]))
            if (u < v)
                out.push_back({u, v});
    return out;
}

Graph Graph::with_edge(Vertex u, Vertex v) const
{
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    Graph copy = *this;
    copy.rows_[u] |= std::uint64_t{1} << v;
    copy.rows_[v] |= std::uint64_t{1} << u;
    return copy;
}

VertexSet neighbors(const Graph& g, Vertex v)
{
    if (v < 0 || v >= g.order())
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
    return g.row(v);
}

VertexSet common_neighbors(const Graph& g, VertexSet s)
{
    if (s.empty())
        throw std::invalid_argument("common_neighbors of the empty set is undefined");
    if (!s.subset_of(g.vertices()))
        throw std::out_of_range("vertex set exceeds graph order");
    VertexSet out = g.vertices();
    for (Vertex v : s)
        out &= g.row(v);
    return out;
}

InducedSubgraph induced_subgraph(const Graph& g, VertexSet s)
{
    if (s.empty())
        throw std::invalid_argument("induced subgraph of the empty set");
    if (!s.subset_of(g.vertices()))
        throw std::out_of_range("vertex set exceeds graph order");
    auto ids = s.to_vector();
    std::array<int, kMaxVertices> index{};
    for (std::size_t i = 0; i < ids.size(); ++i)
        index[ids[i]] = static_cast<int>(i);
    std::vector<std::uint64_t> rows(ids.size(), 0);
    for (std::size_t i = 0; i < ids.size(); ++i)
        for (Vertex w : g.row(ids[i]) & s)
            rows[i] |= std::uint64_t{1} << index[w];
    return {Graph::from_rows(rows), std::move(ids)};
}

VertexSet component_of(const Graph& g, Vertex v)
{
    VertexSet seen = VertexSet::single(v);
    VertexSet frontier = seen;
    while (!frontier.empty()) {
        VertexSet next;
        for (Vertex u : frontier)
            next |= g.row(u);
        frontier = next - seen;
        seen |= frontier;
    }
    return seen;
}

bool is_connected_subset(const Graph& g, VertexSet s)
{
    if (s.empty())
        return false;
    VertexSet seen = VertexSet::single(s.first());
    VertexSet frontier = seen;
    while (!frontier.empty()) {
        VertexSet next;
        for (Vertex u : frontier)
            next |= g.row(u);
        frontier = (next & s) - seen;
        seen |= frontier;
    }
    return seen == s;
}

bool is_connected(const Graph& g) { return component_of(g, 0) == g.vertices(); }

std::vector<VertexSet> connected_components(const Graph& g)
{
    std::vector<VertexSet> out;
    VertexSet rest = g.vertices();
    while (!rest.empty()) {
        auto comp = component_of(g, rest.first());
        out.push_back(comp);
        rest -= comp;
    }
    return out;
}

namespace {

    std::array<int, kMaxVertices> bfs_distances(const Graph& g, Vertex src)
    {
        std::array<int, kMaxVertices> dist;
        dist.fill(-1);
        dist[src] = 0;
        VertexSet seen = VertexSet::single(src);
        VertexSet frontier = seen;
        for (int d = 1; !frontier.empty(); ++d) {
            VertexSet next;
            for (Vertex u : frontier)
                next |= g.row(u);
            frontier = next - seen;
            for (Vertex w : frontier)
                dist[w] = d;
            seen |= frontier;
        }
        return dist;
    }

} // namespace

std::optional<int> distance(const Graph& g, Vertex u, Vertex v)
{
    neighbors(g, u);
    neighbors(g, v);
    int d = bfs_distances(g, u)[v];
    if (d < 0)
        return std::nullopt;
    return d;
}

int diameter(const Graph& g)
{
    if (!is_connected(g))
        throw std::invalid_argument("diameter of a disconnected graph");
    int best = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
        auto dist = bfs_distances(g, v);
        for (int w = 0; w < g.order(); ++w)
            best = std::max(best, dist[w]);
    }
    return best;
}

std::optional<Bipartition> bipartition(const Graph& g)
{
    Bipartition parts;
    for (VertexSet comp : connected_components(g)) {
        // Even layers from the lowest vertex form part_x.
        auto dist = bfs_distances(g, comp.first());
        for (Vertex v : comp) {
            if (dist[v] % 2 == 0)
                parts.part_x = parts.part_x.with(v);
            else
                parts.part_y = parts.part_y.with(v);
        }
    }
    for (Vertex v : parts.part_x)
        if (!(g.row(v) & parts.part_x).empty())
            return std::nullopt;
    for (Vertex v : parts.part_y)
        if (!(g.row(v) & parts.part_y).empty())
            return std::nullopt;
    return parts;
}

std::optional<int> girth(const Graph& g)
{
    const int n = g.order();
    int best = n + 1;
    for (Vertex root = 0; root < n; ++root) {
        std::array<int, kMaxVertices> dist;
        std::array<int, kMaxVertices> parent;
        dist.fill(-1);
        parent.fill(-1);
        dist[root] = 0;
        std::deque<Vertex> queue{root};
        while (!queue.empty()) {
            Vertex u = queue.front();
            queue.pop_front();
            for (Vertex w : g.row(u)) {
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if (parent[u] != w) {
                    best = std::min(best, dist[u] + dist[w] + 1);
                }
            }
        }
    }
    if (best > n)
        return std::nullopt;
    return best;
}

std::set<int> induced_cycle_lengths(const Graph& g, int max_len)
{
    if (max_len > g.order())
        throw std::invalid_argument("max_len exceeds graph order");
    std::set<int> found;
    if (max_len < 3)
        return found;
    const int wanted = max_len - 2;

    // Chordless paths start at their minimum vertex; a state is the
    // (endpoint, vertex set) pair, which fully determines what can follow.
    struct StateHash {
        std::size_t operator()(const std::pair<int, std::uint64_t>& s) const
        {
            return std::hash<std::uint64_t>{}(s.second * 0x9E3779B97F4A7C15ULL ^ static_cast<std::uint64_t>(s.first));
        }
    };

    for (Vertex start = 0; start < g.order(); ++start) {
        const VertexSet higher = g.vertices() - VertexSet::prefix(start + 1);
        std::unordered_set<std::pair<int, std::uint64_t>, StateHash> visited;

        // interior_nbrs: union of neighbourhoods of path vertices other
        // than the start and the current endpoint.
        auto extend = [&](auto&& self, Vertex end, VertexSet path, VertexSet interior_nbrs) -> void {
            if (static_cast<int>(found.size()) == wanted)
                return;
            if (!visited.insert({end, path.bits()}).second)
                return;
            const int len = path.size();
            VertexSet options = (g.row(end) & higher) - path - interior_nbrs;
            for (Vertex x : options) {
                bool closes = end != start && g.adjacent(x, start);
                if (closes) {
                    // A 2-vertex path closed by x is a triangle.
                    if (len + 1 >= 3 && len + 1 <= max_len)
                        found.insert(len + 1);
                    continue;
                }
                if (len + 1 < max_len) {
                    VertexSet next_interior = interior_nbrs;
                    if (end != start)
                        next_interior |= g.row(end);
                    self(self, x, path.with(x), next_interior);
                }
            }
        };
        extend(extend, start, VertexSet::single(start), VertexSet{});
    }
    return found;
}

namespace {

    // Induced-subgraph isomorphism by backtracking, pattern vertices taken in
    // BFS order so each new vertex usually has a placed neighbour.
    class EmbeddingSearch {
    public:
        EmbeddingSearch(const Graph& pattern, const Graph& host) : pattern_(pattern), host_(host)
        {
            VertexSet placed;
            for (Vertex v = 0; v < pattern.order(); ++v) {
                if (placed.contains(v))
                    continue;
                std::deque<Vertex> queue{v};
                placed = placed.with(v);
                while (!queue.empty()) {
                    Vertex u = queue.front();
                    queue.pop_front();
                    order_.push_back(u);
                    for (Vertex w : pattern.row(u) - placed) {
                        placed = placed.with(w);
                        queue.push_back(w);
                    }
                }
            }
            image_.fill(-1);
        }

        bool run() { return place(0, VertexSet{}); }

    private:
        bool place(std::size_t depth, VertexSet used)
        {
            if (depth == order_.size())
                return true;
            const Vertex v = order_[depth];
            VertexSet candidates = host_.vertices() - used;
            for (std::size_t i = 0; i < depth; ++i) {
                Vertex u = order_[i];
                if (pattern_.adjacent(u, v))
                    candidates &= host_.row(image_[u]);
                else
                    candidates -= host_.row(image_[u]);
            }
            const int need = pattern_.degree(v);
            for (Vertex c : candidates) {
                if (host_.degree(c) < need)
                    continue;
                image_[v] = c;
                if (place(depth + 1, used.with(c)))
                    return true;
            }
            image_[v] = -1;
            return false;
        }

        const Graph& pattern_;
        const Graph& host_;
        std::vector<Vertex> order_;
        std::array<Vertex, kMaxVertices> image_;
    };

} // namespace

bool embeds(const Graph& pattern, const Graph& host)
{
    if (pattern.order() > host.order())
        return false;
    return EmbeddingSearch(pattern, host).run();
}

bool is_isomorphic(const Graph& a, const Graph& b)
{
    if (a.order() != b.order() || a.edge_count() != b.edge_count())
        return false;
    std::vector<int> da, db;
    for (Vertex v = 0; v < a.order(); ++v) {
        da.push_back(a.degree(v));
        db.push_back(b.degree(v));
    }
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db)
        return false;
    return embeds(a, b);
}

Graph disjoint_union(std::span<const Graph> parts)
{
    if (parts.empty())
        throw std::invalid_argument("disjoint union of no graphs");
    int total = 0;
    for (const auto& p : parts)
        total += p.order();
    if (total > kMaxVertices)
        throw std::invalid_argument("disjoint union exceeds 64 vertices");
    std::vector<std::uint64_t> rows;
    int offset = 0;
    for (const auto& p : parts) {
        for (Vertex v = 0; v < p.order(); ++v)
            rows.push_back(p.row(v).bits() << offset);
        offset += p.order();
    }
    return Graph::from_rows(rows);
}

Graph edge_complete_union(const Graph& g, const Graph& h)
{
    const Graph both[] = {g, h};
    Graph u = disjoint_union(both);
    std::vector<std::uint64_t> rows;
    const auto g_side = VertexSet::prefix(g.order());
    const auto h_side = u.vertices() - g_side;
    for (Vertex v = 0; v < u.order(); ++v)
        rows.push_back((u.row(v) | (v < g.order() ? h_side : g_side)).bits());
    return Graph::from_rows(rows);
}

Graph complement(const Graph& g)
{
    std::vector<std::uint64_t> rows;
    for (Vertex v = 0; v < g.order(); ++v)
        rows.push_back((g.vertices() - g.row(v)).without(v).bits());
    return Graph::from_rows(rows);
}

bool is_complete(const Graph& g)
{
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) != g.order() - 1)
            return false;
    return true;
}

Graph relabel(const Graph& g, std::span<const Vertex> perm)
{
    if (static_cast<int>(perm.size()) != g.order())
        throw std::invalid_argument("permutation size differs from graph order");
    VertexSet seen;
    for (Vertex p : perm) {
        if (p < 0 || p >= g.order() || seen.contains(p))
            throw std::invalid_argument("not a permutation");
        seen = seen.with(p);
    }
    std::vector<std::uint64_t> rows(perm.size(), 0);
    for (Vertex v = 0; v < g.order(); ++v)
        for (Vertex w : g.row(v))
            rows[perm[v]] |= std::uint64_t{1} << perm[w];
    return Graph::from_rows(rows);
}

bool for_each_subset_of_size(VertexSet universe, int k, const std::function<bool(VertexSet)>& visit)
{
    const auto members = universe.to_vector();
    const int m = static_cast<int>(members.size());
    if (k < 0 || k > m)
        return true;
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        idx[i] = i;
    while (true) {
        VertexSet s;
        for (int i : idx)
            s = s.with(members[i]);
        if (!visit(s))
            return false;
        int i = k - 1;
        while (i >= 0 && idx[i] == m - k + i)
            --i;
        if (i < 0)
            return true;
        ++idx[i];
        for (int j = i + 1; j < k; ++j)
            idx[j] = idx[j - 1] + 1;
    }
}

} // namespace homhom
