#pragma once

// Definition-level reference implementations used only by tests. They touch
// the library solely through Graph::order() and Graph::adjacent(), so they
// stay independent of the morphism search they are compared against.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <unordered_set>
#include <vector>

#include "homhom/graph.hpp"

namespace brute {

using homhom::Graph;
using Map = std::vector<int>; // -1 = unmapped

enum class Kind { H, M, I };

inline bool valid(const Graph& a, const Graph& b, const Map& f, Kind k)
{
    const int n = a.order();
    for (int u = 0; u < n; ++u) {
        if (f[u] < 0)
            continue;
        for (int v = u + 1; v < n; ++v) {
            if (f[v] < 0)
                continue;
            if (a.adjacent(u, v) && !b.adjacent(f[u], f[v]))
                return false;
            if (k != Kind::H && f[u] == f[v])
                return false;
            if (k == Kind::I && !a.adjacent(u, v) && b.adjacent(f[u], f[v]))
                return false;
        }
    }
    return true;
}

/// Calls visit on every map from the members of `dom` into 0..m-1 (odometer
/// order); the other entries stay -1.
inline void for_each_map(int n, std::uint64_t dom, int m, const std::function<void(const Map&)>& visit)
{
    std::vector<int> members;
    for (int v = 0; v < n; ++v)
        if ((dom >> v) & 1U)
            members.push_back(v);
    Map f(n, -1);
    for (int v : members)
        f[v] = 0;
    while (true) {
        visit(f);
        std::size_t i = 0;
        while (i < members.size() && ++f[members[i]] == m)
            f[members[i++]] = 0;
        if (i == members.size())
            return;
    }
}

/// All total maps a -> b of kind k (for k = I also surjective).
inline std::vector<Map> total_maps(const Graph& a, const Graph& b, Kind k)
{
    std::vector<Map> out;
    const int n = a.order();
    if (k != Kind::H && n > b.order())
        return out;
    if (k == Kind::I && n != b.order())
        return out;
    for_each_map(n, (std::uint64_t{1} << n) - 1, b.order(), [&](const Map& f) {
        if (valid(a, b, f, k))
            out.push_back(f);
    });
    return out;
}

inline bool connected_subset(const Graph& g, std::uint64_t s)
{
    if (s == 0)
        return false;
    std::uint64_t seen = s & (~s + 1);
    bool grew = true;
    while (grew) {
        grew = false;
        for (int u = 0; u < g.order(); ++u) {
            if (!((seen >> u) & 1U))
                continue;
            for (int v = 0; v < g.order(); ++v)
                if (((s >> v) & 1U) && !((seen >> v) & 1U) && g.adjacent(u, v)) {
                    seen |= std::uint64_t{1} << v;
                    grew = true;
                }
        }
    }
    return seen == s;
}

inline std::uint64_t encode(const Map& f, std::uint64_t dom, int m)
{
    std::uint64_t code = 0;
    for (int v = 0; v < static_cast<int>(f.size()); ++v)
        if ((dom >> v) & 1U)
            code = code * static_cast<std::uint64_t>(m) + static_cast<std::uint64_t>(f[v]);
    return code;
}

/// x-maps from (connected) induced subgraphs of g1 into g2 all extend to a
/// total y-map g1 -> g2. Meant for orders up to 5.
inline bool morphic(const Graph& g1, const Graph& g2, Kind x, Kind y, bool connected)
{
    const auto ext = total_maps(g1, g2, y);
    const int n = g1.order();
    const int m = g2.order();
    for (std::uint64_t dom = 1; dom < (std::uint64_t{1} << n); ++dom) {
        if (connected && !connected_subset(g1, dom))
            continue;
        std::unordered_set<std::uint64_t> restrictions;
        for (const auto& e : ext)
            restrictions.insert(encode(e, dom, m));
        bool ok = true;
        for_each_map(n, dom, m, [&](const Map& f) {
            if (ok && valid(g1, g2, f, x) && !restrictions.count(encode(f, dom, m)))
                ok = false;
        });
        if (!ok)
            return false;
    }
    return true;
}

inline bool in_class(const Graph& g, Kind x, Kind y, bool connected) { return morphic(g, g, x, y, connected); }

/// No total y-map g1 -> g2 agrees with f.
inline bool non_extendable(const Graph& g1, const Graph& g2, const Map& f, Kind y)
{
    for (const auto& e : total_maps(g1, g2, y)) {
        bool agrees = true;
        for (int v = 0; v < g1.order(); ++v)
            agrees = agrees && (f[v] < 0 || f[v] == e[v]);
        if (agrees)
            return false;
    }
    return true;
}

inline bool isomorphic(const Graph& a, const Graph& b)
{
    if (a.order() != b.order())
        return false;
    std::vector<int> p(a.order());
    std::iota(p.begin(), p.end(), 0);
    do {
        if (valid(a, b, p, Kind::I))
            return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

/// Reference canonical form: lexicographically least adjacency string over
/// all permutations. Orders up to 7.
inline std::string canonical(const Graph& g)
{
    const int n = g.order();
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::string best;
    do {
        std::string s;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                s.push_back(g.adjacent(p[i], p[j]) ? '1' : '0');
        if (best.empty() || s < best)
            best = s;
    } while (std::next_permutation(p.begin(), p.end()));
    return best;
}

/// Labeled graph on n vertices from the low bits of `code` (upper triangle,
/// row by row).
inline Graph from_code(int n, std::uint64_t code)
{
    std::vector<homhom::Edge> edges;
    int bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
            if ((code >> bit) & 1U)
                edges.push_back({i, j});
    return Graph(n, edges);
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng)
{
    std::bernoulli_distribution coin(p);
    std::vector<homhom::Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng))
                edges.push_back({i, j});
    return Graph(n, edges);
}

inline std::vector<int> random_permutation(int n, std::mt19937_64& rng)
{
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

/// Shortest-path distance by repeated relaxation; -1 when unreachable.
inline int bfs_distance(const Graph& g, int u, int v)
{
    std::vector<int> d(g.order(), -1);
    d[u] = 0;
    for (int round = 0; round < g.order(); ++round)
        for (int a = 0; a < g.order(); ++a)
            for (int b = 0; b < g.order(); ++b)
                if (d[a] >= 0 && g.adjacent(a, b) && (d[b] < 0 || d[b] > d[a] + 1))
                    d[b] = d[a] + 1;
    return d[v];
}

} // namespace brute
