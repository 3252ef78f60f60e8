#pragma once

#include <bit>
#include <compare>
#include <functional>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace homhom {

inline constexpr int kMaxVertices = 64;

using Vertex = int;

/// A subset of {0..63}, stored as a bitmask. Iteration is in ascending
/// vertex order.
class VertexSet {
public:
    class iterator {
    public:
        using value_type = Vertex;
        using difference_type = std::ptrdiff_t;

        iterator() = default;
        explicit iterator(std::uint64_t rest) : rest_(rest) {}

        Vertex operator*() const { return std::countr_zero(rest_); }
        iterator& operator++()
        {
            rest_ &= rest_ - 1;
            return *this;
        }
        iterator operator++(int)
        {
            auto copy = *this;
            ++*this;
            return copy;
        }
        bool operator==(const iterator&) const = default;

    private:
        std::uint64_t rest_ = 0;
    };

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
    VertexSet(std::initializer_list<Vertex> members);

    /// {0, ..., n-1}
    static constexpr VertexSet prefix(int n)
    {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }
    static constexpr VertexSet single(Vertex v) { return VertexSet(std::uint64_t{1} << v); }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool contains(Vertex v) const { return (bits_ >> v) & 1U; }
    /// Lowest member; undefined on the empty set.
    constexpr Vertex first() const { return std::countr_zero(bits_); }
    constexpr bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }

    constexpr VertexSet with(Vertex v) const { return VertexSet(bits_ | (std::uint64_t{1} << v)); }
    constexpr VertexSet without(Vertex v) const { return VertexSet(bits_ & ~(std::uint64_t{1} << v)); }

    constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
    constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
    constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
    VertexSet& operator&=(VertexSet o)
    {
        bits_ &= o.bits_;
        return *this;
    }
    VertexSet& operator|=(VertexSet o)
    {
        bits_ |= o.bits_;
        return *this;
    }
    VertexSet& operator-=(VertexSet o)
    {
        bits_ &= ~o.bits_;
        return *this;
    }

    constexpr bool operator==(const VertexSet&) const = default;
    constexpr auto operator<=>(const VertexSet&) const = default;

    iterator begin() const { return iterator(bits_); }
    iterator end() const { return iterator(0); }

    std::vector<Vertex> to_vector() const;

private:
    std::uint64_t bits_ = 0;
};

struct Edge {
    Vertex u;
    Vertex v;
    bool operator==(const Edge&) const = default;
};

/// Simple undirected graph on vertices 0..n-1 (1 <= n <= 64), stored as one
/// adjacency bitmask per vertex. Values are immutable once built.
class Graph {
public:
    /// Edgeless graph on n vertices.
    explicit Graph(int n);
    Graph(int n, std::span<const Edge> edges);
    Graph(int n, std::initializer_list<Edge> edges);

    /// Builds from adjacency rows; rejects loops and asymmetric rows.
    static Graph from_rows(std::span<const std::uint64_t> rows);

    int order() const { return n_; }
    VertexSet vertices() const { return VertexSet::prefix(n_); }
    bool adjacent(Vertex u, Vertex v) const { return (rows_[u] >> v) & 1U; }
    /// Unchecked neighbour row.
    VertexSet row(Vertex v) const { return VertexSet(rows_[v]); }
    int degree(Vertex v) const { return std::popcount(rows_[v]); }
    int max_degree() const;
    int edge_count() const;
    std::vector<Edge> edges() const;

    Graph with_edge(Vertex u, Vertex v) const;

    /// Labeled equality (same n, same edge set).
    bool operator==(const Graph&) const = default;

private:
    void check_vertex(Vertex v) const;

    int n_;
    std::vector<std::uint64_t> rows_;
};

struct Bipartition {
    VertexSet part_x;
    VertexSet part_y;
};

struct InducedSubgraph {
    Graph graph;
    /// original_ids[i] is the host vertex that became vertex i.
    std::vector<Vertex> original_ids;
};

VertexSet neighbors(const Graph& g, Vertex v);
/// Common neighbours of a nonempty set.
VertexSet common_neighbors(const Graph& g, VertexSet s);
InducedSubgraph induced_subgraph(const Graph& g, VertexSet s);

bool is_connected(const Graph& g);
std::vector<VertexSet> connected_components(const Graph& g);
/// Vertices reachable from v.
VertexSet component_of(const Graph& g, Vertex v);
/// Whether the induced subgraph on s is connected (false for the empty set).
bool is_connected_subset(const Graph& g, VertexSet s);

/// nullopt when u and v lie in different components.
std::optional<int> distance(const Graph& g, Vertex u, Vertex v);
int diameter(const Graph& g);

/// Per-component 2-colouring with the lowest vertex of each component in
/// part_x; nullopt if an odd cycle exists.
std::optional<Bipartition> bipartition(const Graph& g);
/// Length of a shortest cycle; nullopt for forests.
std::optional<int> girth(const Graph& g);
/// Lengths k in [3, max_len] such that an induced C_k exists.
std::set<int> induced_cycle_lengths(const Graph& g, int max_len);
inline std::set<int> induced_cycle_lengths(const Graph& g) { return induced_cycle_lengths(g, g.order()); }

/// Induced-subgraph isomorphism test.
bool embeds(const Graph& pattern, const Graph& host);
bool is_isomorphic(const Graph& a, const Graph& b);

Graph disjoint_union(std::span<const Graph> parts);
Graph edge_complete_union(const Graph& g, const Graph& h);
Graph complement(const Graph& g);
bool is_complete(const Graph& g);
/// Applies a vertex permutation: vertex v becomes perm[v].
Graph relabel(const Graph& g, std::span<const Vertex> perm);

/// Visits the k-element subsets of `universe` in increasing order of their
/// member lists. Stops early and returns false when `visit` returns false.
bool for_each_subset_of_size(VertexSet universe, int k, const std::function<bool(VertexSet)>& visit);

inline constexpr int kDefaultCanonicalBound = 10;

/// Isomorphism-invariant byte string: equal iff the graphs are isomorphic.
/// Computed as the lexicographically smallest adjacency string over the
/// labelings reached by individualization and colour refinement.
std::string canonical_form(const Graph& g, int max_order = kDefaultCanonicalBound);

} // namespace homhom
