#include "homhom/oracle.hpp"

#include <deque>
#include <random>
#include <set>
#include <unordered_set>

namespace homhom {

std::string class_name(const ClassQuery& q)
{
    std::string out = q.connected ? "C-" : "";
    out += kind_letter(q.x);
    out += kind_letter(q.y);
    return out;
}

ClassQuery parse_class(std::string_view name)
{
    ClassQuery q{MorphismKind::Homo, MorphismKind::Homo, false};
    std::string_view rest = name;
    if (rest.starts_with("C-")) {
        q.connected = true;
        rest.remove_prefix(2);
    }
    if (rest.size() != 2)
        throw std::invalid_argument("unknown class '" + std::string(name) + "'");
    q.x = kind_from_letter(rest[0]);
    q.y = kind_from_letter(rest[1]);
    return q;
}

namespace {

    constexpr std::size_t kAutomorphismLimit = 4096;

    PartialMap compose(const PartialMap& outer, const PartialMap& inner)
    {
        PartialMap out(inner.size());
        for (std::size_t v = 0; v < inner.size(); ++v)
            out[v] = outer[inner[v]];
        return out;
    }

    // A small generating set for the group spanned by the automorphisms the
    // search produced (the whole group unless the enumeration hit its cap).
    std::vector<PartialMap> automorphism_generators(const Graph& g)
    {
        const auto all = automorphisms(g, kAutomorphismLimit);
        std::vector<PartialMap> gens;
        std::set<PartialMap> closure{all.front()};
        for (const auto& a : all) {
            if (closure.count(a) || closure.size() >= kAutomorphismLimit)
                continue;
            gens.push_back(a);
            closure = {all.front()};
            std::deque<PartialMap> queue{all.front()};
            while (!queue.empty() && closure.size() < kAutomorphismLimit) {
                auto e = std::move(queue.front());
                queue.pop_front();
                for (const auto& s : gens) {
                    auto next = compose(s, e);
                    if (closure.insert(next).second)
                        queue.push_back(std::move(next));
                }
            }
        }
        return gens;
    }

    VertexSet apply(const PartialMap& perm, VertexSet s)
    {
        VertexSet out;
        for (Vertex v : s)
            out = out.with(perm[v]);
        return out;
    }

    class OrbitTracker {
    public:
        OrbitTracker(const Graph& g) : gens_(automorphism_generators(g))
        {
            if (g.order() <= 24)
                bitmap_.assign(std::size_t{1} << g.order(), false);
        }

        // True when s is the first member of its orbit seen; marks the orbit.
        bool claim(VertexSet s)
        {
            if (seen(s))
                return false;
            std::vector<VertexSet> stack{s};
            mark(s);
            while (!stack.empty()) {
                VertexSet t = stack.back();
                stack.pop_back();
                for (const auto& p : gens_) {
                    VertexSet u = apply(p, t);
                    if (!seen(u)) {
                        mark(u);
                        stack.push_back(u);
                    }
                }
            }
            return true;
        }

    private:
        bool seen(VertexSet s) const { return bitmap_.empty() ? set_.count(s.bits()) > 0 : bitmap_[s.bits()]; }
        void mark(VertexSet s)
        {
            if (bitmap_.empty())
                set_.insert(s.bits());
            else
                bitmap_[s.bits()] = true;
        }

        std::vector<PartialMap> gens_;
        std::vector<bool> bitmap_;
        std::unordered_set<std::uint64_t> set_;
    };

    void check_budget(const Graph& g, MorphismKind x, const OracleBudget& budget)
    {
        const int cap = x == MorphismKind::Iso ? budget.max_order_iso : budget.max_order_homo;
        if (g.order() > cap)
            throw BudgetExceeded("oracle budget: order " + std::to_string(g.order()) + " exceeds " +
                                 std::to_string(cap) + " for " + kind_letter(x) + "-maps");
    }

    bool extends(const Graph& g1, const Graph& g2, MorphismKind y, const PartialMap& f)
    {
        switch (y) {
        case MorphismKind::Homo:
            return find_morphism({.src = g1, .dst = g2, .kind = MorphismKind::Homo, .seed = f}).has_value();
        case MorphismKind::Mono:
            return extend_between(g1, g2, MorphismKind::Mono, f).has_value();
        case MorphismKind::Iso:
            // An isomorphism restricts to an isomorphism onto the induced image.
            return is_morphism(g1, g2, f, MorphismKind::Iso) && extend_between(g1, g2, MorphismKind::Iso, f).has_value();
        }
        return false;
    }

    Verdict morphic(const Graph& g1, const Graph& g2, const ClassQuery& q, const OracleBudget& budget)
    {
        check_budget(g1, q.x, budget);
        check_budget(g2, q.x, budget);
        Verdict verdict;
        verdict.exhaustive =
            budget.sample_permille >= 1000 && (!budget.max_source_size || *budget.max_source_size >= g1.order());
        const int top = std::min(g1.order(), budget.max_source_size.value_or(g1.order()));
        std::mt19937_64 rng(budget.seed);
        OrbitTracker orbits(g1);

        for (int k = 1; k <= top && verdict.holds; ++k) {
            for_each_subset_of_size(g1.vertices(), k, [&](VertexSet s) {
                if (q.connected && !is_connected_subset(g1, s))
                    return true;
                if (!orbits.claim(s))
                    return true;
                if (budget.sample_permille < 1000 && static_cast<int>(rng() % 1000) >= budget.sample_permille)
                    return true;
                for_each_morphism({.src = g1, .dst = g2, .kind = q.x, .scope = s}, [&](const PartialMap& f) {
                    ++verdict.maps_checked;
                    if (extends(g1, g2, q.y, f))
                        return true;
                    verdict.holds = false;
                    verdict.witness =
                        Witness{s, f, blocked_vertex({.src = g1, .dst = g2, .kind = q.y, .seed = f})};
                    return false;
                });
                return verdict.holds;
            });
        }
        return verdict;
    }

} // namespace

Verdict is_c_xy(const Graph& g, const ClassQuery& q, const OracleBudget& budget) { return morphic(g, g, q, budget); }

Verdict is_xy(const Graph& g, MorphismKind x, MorphismKind y, const OracleBudget& budget)
{
    return morphic(g, g, {x, y, false}, budget);
}

Verdict c_xy_morphic(const Graph& g1, const Graph& g2, const ClassQuery& q, const OracleBudget& budget)
{
    return morphic(g1, g2, q, budget);
}

SymmetricVerdict c_xy_symmetric(const Graph& g1, const Graph& g2, const ClassQuery& q, const OracleBudget& budget)
{
    SymmetricVerdict out{false, morphic(g1, g2, q, budget), morphic(g2, g1, q, budget)};
    out.holds = out.forward.holds && out.backward.holds;
    return out;
}

bool is_c_xy_via_components(const Graph& g, const ClassQuery& q, const OracleBudget& budget)
{
    std::vector<Graph> parts;
    for (VertexSet c : connected_components(g))
        parts.push_back(induced_subgraph(g, c).graph);
    for (const auto& p : parts)
        if (!is_c_xy(p, q, budget).holds)
            return false;
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = i + 1; j < parts.size(); ++j)
            if (!c_xy_symmetric(parts[i], parts[j], q, budget).holds)
                return false;
    return true;
}

NeighbourhoodCheck neighbourhood_class_check(const Graph& g, const ClassQuery& q, const OracleBudget& budget)
{
    for (Vertex v : g.vertices()) {
        if (g.degree(v) == 0)
            continue;
        Graph nbhd = induced_subgraph(g, g.row(v)).graph;
        if (!is_xy(nbhd, q.x, q.y, budget).holds)
            return {false, v};
    }
    return {};
}

} // namespace homhom
