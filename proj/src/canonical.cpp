#include "homhom/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace homhom {

namespace {

    using Colouring = std::vector<int>;

    // Colour refinement to an equitable partition. New colours are ranks of
    // (old colour, neighbour-colour histogram) signatures, so the numbering
    // is isomorphism-invariant.
    int refine(const Graph& g, Colouring& colours)
    {
        const int n = g.order();
        int classes = 1 + *std::max_element(colours.begin(), colours.end());
        while (true) {
            std::vector<std::vector<int>> sigs(static_cast<std::size_t>(n));
            for (Vertex v = 0; v < n; ++v) {
                auto& s = sigs[v];
                s.assign(static_cast<std::size_t>(classes) + 1, 0);
                s[0] = colours[v];
                for (Vertex w : g.row(v))
                    ++s[1 + colours[w]];
            }
            auto sorted = sigs;
            std::sort(sorted.begin(), sorted.end());
            sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
            for (Vertex v = 0; v < n; ++v)
                colours[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sigs[v]) - sorted.begin());
            const int next = static_cast<int>(sorted.size());
            if (next == classes)
                return classes;
            classes = next;
        }
    }

    std::string encode(const Graph& g, const Colouring& position)
    {
        const int n = g.order();
        std::vector<Vertex> at(static_cast<std::size_t>(n));
        for (Vertex v = 0; v < n; ++v)
            at[position[v]] = v;
        std::string out(1, static_cast<char>(n));
        unsigned char acc = 0;
        int bits = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                acc = static_cast<unsigned char>((acc << 1) | (g.adjacent(at[i], at[j]) ? 1 : 0));
                if (++bits == 8) {
                    out.push_back(static_cast<char>(acc));
                    acc = 0;
                    bits = 0;
                }
            }
        if (bits > 0)
            out.push_back(static_cast<char>(acc << (8 - bits)));
        return out;
    }

    void search(const Graph& g, Colouring colours, std::string& best, bool& have_best)
    {
        const int n = g.order();
        const int classes = refine(g, colours);
        if (classes == n) {
            auto candidate = encode(g, colours);
            if (!have_best || candidate < best) {
                best = std::move(candidate);
                have_best = true;
            }
            return;
        }
        std::vector<int> counts(static_cast<std::size_t>(classes), 0);
        for (int c : colours)
            ++counts[c];
        const int cell = static_cast<int>(std::find_if(counts.begin(), counts.end(), [](int k) { return k > 1; }) - counts.begin());
        // Swapping two twins in the cell is an automorphism that preserves the
        // colouring, so only the first of each twin class needs a branch.
        VertexSet tried;
        for (Vertex v = 0; v < n; ++v) {
            if (colours[v] != cell)
                continue;
            const std::uint64_t nv = g.row(v).bits() & ~(std::uint64_t{1} << v);
            bool twin = false;
            for (Vertex u : tried)
                twin = twin || (g.row(u).bits() & ~(std::uint64_t{1} << v)) == (nv & ~(std::uint64_t{1} << u));
            if (twin)
                continue;
            tried = tried.with(v);
            Colouring next(colours.size());
            for (Vertex w = 0; w < n; ++w)
                next[w] = 2 * colours[w] + (colours[w] == cell && w != v ? 1 : 0);
            search(g, std::move(next), best, have_best);
        }
    }

} // namespace

std::string canonical_form(const Graph& g, int max_order)
{
    if (g.order() > max_order)
        throw std::invalid_argument("canonical_form: order " + std::to_string(g.order()) + " above bound " +
                                    std::to_string(max_order));
    std::string best;
    bool have_best = false;
    search(g, Colouring(static_cast<std::size_t>(g.order()), 0), best, have_best);
    return best;
}

} // namespace homhom
