#include <algorithm>
#include <stdexcept>

#include "homhom/recognizers.hpp"

namespace homhom {

namespace {

    // Kuhn's augmenting paths on the bipartite complement between x and y.
    std::optional<std::vector<std::pair<Vertex, Vertex>>> complement_matching(const Graph& g, VertexSet x, VertexSet y)
    {
        std::vector<Vertex> owner(static_cast<std::size_t>(g.order()), -1);
        std::function<bool(Vertex, VertexSet&)> augment = [&](Vertex z, VertexSet& visited) {
            for (Vertex w : y - g.row(z)) {
                if (visited.contains(w))
                    continue;
                visited = visited.with(w);
                if (owner[w] < 0 || augment(owner[w], visited)) {
                    owner[w] = z;
                    return true;
                }
            }
            return false;
        };
        for (Vertex z : x) {
            VertexSet visited;
            if (!augment(z, visited))
                return std::nullopt;
        }
        std::vector<std::pair<Vertex, Vertex>> out;
        for (Vertex w : y)
            if (owner[w] >= 0)
                out.emplace_back(owner[w], w);
        std::sort(out.begin(), out.end());
        return out;
    }

    VertexSet neighbourhood(const Graph& g, VertexSet s)
    {
        VertexSet out;
        for (Vertex v : s)
            out |= g.row(v);
        return out;
    }

    Vertex smallest(VertexSet s)
    {
        if (s.empty())
            throw std::logic_error("pcm_extract: expected a nonempty choice set");
        return s.first();
    }

} // namespace

std::string pcm_certificate_problem(const Graph& g, const PcmCertificate& cert, int n)
{
    const VertexSet z = cert.z_set;
    const VertexSet w = cert.w_set;
    if (!(z & w).empty())
        return "parts overlap";
    if (!(z | w).subset_of(g.vertices()))
        return "vertex out of range";
    if (w.size() != n)
        return "second part has " + std::to_string(w.size()) + " vertices, expected " + std::to_string(n);
    if (z.size() < 2 || z.size() > n)
        return "first part has " + std::to_string(z.size()) + " vertices, expected 2.." + std::to_string(n);
    for (Vertex v : z)
        if (!(g.row(v) & z).empty())
            return "edge inside first part";
    for (Vertex v : w)
        if (!(g.row(v) & w).empty())
            return "edge inside second part";
    if (!is_connected_subset(g, z | w))
        return "induced subgraph is disconnected";
    VertexSet matched_z;
    VertexSet matched_w;
    for (const auto& [a, b] : cert.matching) {
        if (!z.contains(a) || !w.contains(b))
            return "matching pair outside the parts";
        if (matched_z.contains(a) || matched_w.contains(b))
            return "matching is not injective";
        if (g.adjacent(a, b))
            return "matched pair is adjacent";
        matched_z = matched_z.with(a);
        matched_w = matched_w.with(b);
    }
    if (matched_z != z)
        return "matching does not cover the first part";
    return {};
}

std::optional<PcmCertificate> embeds_pcm(const Graph& g, int n)
{
    if (n < 3)
        throw std::invalid_argument("embeds_pcm: n must be at least 3");
    std::optional<PcmCertificate> found;
    for (int size = n + 2; size <= std::min(2 * n, g.order()) && !found; ++size) {
        for_each_subset_of_size(g.vertices(), size, [&](VertexSet u) {
            if (!is_connected_subset(g, u))
                return true;
            auto sub = induced_subgraph(g, u);
            auto sides = bipartition(sub.graph);
            if (!sides)
                return true;
            auto lift = [&](VertexSet local) {
                VertexSet out;
                for (Vertex v : local)
                    out = out.with(sub.original_ids[v]);
                return out;
            };
            const VertexSet p = lift(sides->part_x);
            const VertexSet q = lift(sides->part_y);
            for (auto [x, y] : {std::pair{p, q}, std::pair{q, p}}) {
                if (y.size() != n || x.size() < 2 || x.size() > n)
                    continue;
                if (auto m = complement_matching(g, x, y)) {
                    found = PcmCertificate{x, y, *m};
                    return false;
                }
            }
            return true;
        });
    }
    return found;
}

PcmCertificate pcm_extract(const Graph& a, VertexSet z_part, int n)
{
    if (n < 3)
        throw PcmPreconditionError("pcm_extract: n must be at least 3");
    if (!z_part.subset_of(a.vertices()))
        throw PcmPreconditionError("pcm_extract: Z contains vertices outside the graph");
    if (!is_connected(a))
        throw PcmPreconditionError("pcm_extract: graph is not connected");
    const VertexSet w_part = a.vertices() - z_part;
    for (Vertex v : a.vertices()) {
        const VertexSet own = z_part.contains(v) ? z_part : w_part;
        if (!(a.row(v) & own).empty())
            throw PcmPreconditionError("pcm_extract: Z and its complement are not the parts of a bipartition");
    }
    if (w_part.size() < n)
        throw PcmPreconditionError("pcm_extract: |W| = " + std::to_string(w_part.size()) + " is below n = " +
                                   std::to_string(n));
    for (Vertex z : z_part)
        if (w_part.subset_of(a.row(z)))
            throw PcmPreconditionError("pcm_extract: vertex " + std::to_string(z) + " of Z is adjacent to all of W");

    // Start from a vertex of maximum degree.
    Vertex z1 = -1;
    for (Vertex z : z_part)
        if (z1 < 0 || a.degree(z) > a.degree(z1))
            z1 = z;

    // 3-path z1 w0 z2 w1 with w1 outside N(z1), maximizing |N(z2) - N(z1)|.
    Vertex z2 = -1;
    int best = -1;
    for (Vertex z : z_part.without(z1)) {
        if ((a.row(z) & a.row(z1)).empty())
            continue;
        const int score = (a.row(z) - a.row(z1)).size();
        if (score > 0 && score > best) {
            best = score;
            z2 = z;
        }
    }
    if (z2 < 0)
        throw std::logic_error("pcm_extract: no 3-path from the starting vertex");
    const Vertex w0 = smallest(a.row(z1) & a.row(z2));
    const Vertex w1 = smallest(a.row(z2) - a.row(z1));
    const Vertex w2 = smallest(a.row(z1) - a.row(z2));

    VertexSet zi{z1, z2};
    VertexSet wi{w0, w1, w2};
    // matching[j] = (z_j, w_j) with z_j not adjacent to w_j.
    std::vector<std::pair<Vertex, Vertex>> matching{{z1, w1}, {z2, w2}};

    while (true) {
        const VertexSet nstar = neighbourhood(a, zi);
        if (nstar.size() >= n)
            break;

        // 2-path w' z v with w' in N*, v in W - N*, maximizing |N(z) - N*|.
        Vertex z = -1;
        best = -1;
        for (Vertex c : z_part - zi) {
            if ((a.row(c) & nstar).empty())
                continue;
            const int score = (a.row(c) - nstar).size();
            if (score > 0 && score > best) {
                best = score;
                z = c;
            }
        }
        if (z < 0)
            throw std::logic_error("pcm_extract: no 2-path leaving N*(Z_i)");
        const Vertex v = smallest(a.row(z) - nstar);

        zi = zi.with(z);
        wi = nstar.with(v);

        VertexSet matched;
        for (const auto& [mz, mw] : matching)
            matched = matched.with(mw);
        const VertexSet free_choice = nstar - matched - a.row(z);
        if (!free_choice.empty()) {
            matching.emplace_back(z, free_choice.first());
        } else {
            // Take a matched w_l that z misses, and hand v (which misses all
            // of the old Z) to z_l instead.
            auto it = std::min_element(matching.begin(), matching.end(), [&](const auto& p, const auto& q) {
                const bool pa = !a.adjacent(z, p.second);
                const bool qa = !a.adjacent(z, q.second);
                if (pa != qa)
                    return pa;
                return p.second < q.second;
            });
            if (it == matching.end() || a.adjacent(z, it->second))
                throw std::logic_error("pcm_extract: no complement partner for the new vertex");
            const Vertex wl = it->second;
            it->second = v;
            matching.emplace_back(z, wl);
        }
    }

    // Pad the W side up to n from N*(Z_i) - W_i.
    const VertexSet nstar = neighbourhood(a, zi);
    VertexSet pad = nstar - wi;
    while (wi.size() < n) {
        wi = wi.with(pad.first());
        pad = pad.without(pad.first());
    }

    std::sort(matching.begin(), matching.end());
    PcmCertificate cert{zi, wi, matching};
    if (auto problem = pcm_certificate_problem(a, cert, n); !problem.empty())
        throw std::logic_error("pcm_extract produced an invalid certificate: " + problem);
    return cert;
}

} // namespace homhom
