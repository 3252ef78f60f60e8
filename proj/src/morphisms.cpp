#include "homhom/morphisms.hpp"

#include <algorithm>
#include <stdexcept>

namespace homhom {

char kind_letter(MorphismKind k)
{
    switch (k) {
    case MorphismKind::Homo:
        return 'H';
    case MorphismKind::Mono:
        return 'M';
    case MorphismKind::Iso:
        return 'I';
    }
    return '?';
}

MorphismKind kind_from_letter(char c)
{
    switch (c) {
    case 'H':
        return MorphismKind::Homo;
    case 'M':
        return MorphismKind::Mono;
    case 'I':
        return MorphismKind::Iso;
    default:
        throw std::invalid_argument(std::string("unknown morphism letter '") + c + "'");
    }
}

bool at_least(MorphismKind have, MorphismKind want) { return static_cast<int>(have) >= static_cast<int>(want); }

PartialMap empty_map(int source_order) { return PartialMap(static_cast<std::size_t>(source_order), kUnmapped); }

PartialMap identity_on(int source_order, VertexSet s)
{
    PartialMap f = empty_map(source_order);
    for (Vertex v : s)
        f[v] = v;
    return f;
}

VertexSet domain_of(const PartialMap& f)
{
    VertexSet d;
    for (std::size_t v = 0; v < f.size(); ++v)
        if (f[v] != kUnmapped)
            d = d.with(static_cast<Vertex>(v));
    return d;
}

VertexSet image_of(const PartialMap& f)
{
    VertexSet im;
    for (Vertex t : f)
        if (t != kUnmapped)
            im = im.with(t);
    return im;
}

std::optional<MorphismKind> strongest_kind(const Graph& src, const Graph& dst, const PartialMap& f)
{
    if (static_cast<int>(f.size()) != src.order())
        throw std::invalid_argument("partial map size does not match source order");
    for (Vertex t : f)
        if (t != kUnmapped && (t < 0 || t >= dst.order()))
            throw std::invalid_argument("partial map target out of range");
    const auto dom = domain_of(f).to_vector();
    bool injective = true;
    bool reflects = true;
    for (std::size_t i = 0; i < dom.size(); ++i)
        for (std::size_t j = i + 1; j < dom.size(); ++j) {
            const Vertex u = dom[i];
            const Vertex v = dom[j];
            const bool edge = src.adjacent(u, v);
            if (f[u] == f[v]) {
                if (edge)
                    return std::nullopt;
                injective = false;
                continue;
            }
            const bool image_edge = dst.adjacent(f[u], f[v]);
            if (edge && !image_edge)
                return std::nullopt;
            if (!edge && image_edge)
                reflects = false;
        }
    if (!injective)
        return MorphismKind::Homo;
    return reflects ? MorphismKind::Iso : MorphismKind::Mono;
}

bool is_morphism(const Graph& src, const Graph& dst, const PartialMap& f, MorphismKind kind)
{
    auto k = strongest_kind(src, dst, f);
    return k && at_least(*k, kind);
}

namespace {

    class Search {
    public:
        Search(const SearchRequest& req, const MorphismVisitor* visit)
            : src_(req.src), dst_(req.dst), visit_(visit), injective_(req.kind != MorphismKind::Homo),
              reflect_(req.kind == MorphismKind::Iso)
        {
            const int n = src_.order();
            scope_ = req.scope.value_or(src_.vertices());
            if (!scope_.subset_of(src_.vertices()))
                throw std::invalid_argument("search scope outside source graph");
            image_ = req.seed.empty() ? empty_map(n) : req.seed;
            if (static_cast<int>(image_.size()) != n)
                throw std::invalid_argument("seed size does not match source order");
            if (!req.allowed.empty() && static_cast<int>(req.allowed.size()) != n)
                throw std::invalid_argument("allowed-target list size does not match source order");
            const VertexSet seeded = domain_of(image_);
            if (!seeded.subset_of(scope_))
                throw std::invalid_argument("seed maps vertices outside the search scope");

            valid_ = is_morphism(src_, dst_, image_, req.kind);
            for (Vertex v : seeded)
                if (!req.allowed.empty() && !req.allowed[v].contains(image_[v]))
                    valid_ = false;
            if (!valid_)
                return;

            VertexSet non_isolated;
            for (Vertex t : dst_.vertices())
                if (dst_.degree(t) > 0)
                    non_isolated = non_isolated.with(t);

            domains_.assign(static_cast<std::size_t>(n), VertexSet{});
            pending_ = scope_ - seeded;
            for (Vertex v : pending_) {
                VertexSet d = req.allowed.empty() ? dst_.vertices() : req.allowed[v] & dst_.vertices();
                const int need = (src_.row(v) & scope_).size();
                if (injective_) {
                    VertexSet filtered;
                    for (Vertex t : d)
                        if (dst_.degree(t) >= need)
                            filtered = filtered.with(t);
                    d = filtered;
                } else if (need > 0) {
                    d &= non_isolated;
                }
                domains_[v] = d;
            }
            for (Vertex u : seeded)
                narrow(domains_, pending_, u, image_[u]);
        }

        bool valid() const { return valid_; }

        std::optional<Vertex> first_empty() const
        {
            if (!valid_)
                return std::nullopt;
            for (Vertex v : pending_)
                if (domains_[v].empty())
                    return v;
            return std::nullopt;
        }

        std::size_t run()
        {
            if (valid_ && !first_empty())
                recurse(pending_, domains_);
            return count_;
        }

    private:
        // Restricts the domains of the pending vertices after mapping u to t.
        void narrow(std::vector<VertexSet>& domains, VertexSet open, Vertex u, Vertex t) const
        {
            const VertexSet nt = dst_.row(t);
            for (Vertex w : open.without(u)) {
                if (src_.adjacent(u, w))
                    domains[w] &= nt;
                else if (reflect_)
                    domains[w] -= nt;
                if (injective_)
                    domains[w] = domains[w].without(t);
            }
        }

        bool recurse(VertexSet pending, const std::vector<VertexSet>& domains)
        {
            if (pending.empty()) {
                ++count_;
                return visit_ == nullptr || (*visit_)(image_);
            }
            // Smallest domain first, then most mapped neighbours, then lowest id.
            Vertex pick = -1;
            int best_size = 0;
            int best_links = 0;
            for (Vertex v : pending) {
                const int size = domains[v].size();
                const int links = (src_.row(v) & (scope_ - pending)).size();
                if (pick < 0 || size < best_size || (size == best_size && links > best_links)) {
                    pick = v;
                    best_size = size;
                    best_links = links;
                }
            }
            const VertexSet rest = pending.without(pick);
            for (Vertex t : domains[pick]) {
                image_[pick] = t;
                std::vector<VertexSet> next = domains;
                narrow(next, rest, pick, t);
                bool dead = false;
                for (Vertex w : rest)
                    if (next[w].empty()) {
                        dead = true;
                        break;
                    }
                if (!dead && !recurse(rest, next)) {
                    image_[pick] = kUnmapped;
                    return false;
                }
            }
            image_[pick] = kUnmapped;
            return true;
        }

        const Graph& src_;
        const Graph& dst_;
        const MorphismVisitor* visit_;
        bool injective_;
        bool reflect_;
        bool valid_ = false;
        VertexSet scope_;
        VertexSet pending_;
        PartialMap image_;
        std::vector<VertexSet> domains_;
        std::size_t count_ = 0;
    };

} // namespace

std::size_t for_each_morphism(const SearchRequest& req, const MorphismVisitor& visit)
{
    Search s(req, &visit);
    return s.run();
}

std::optional<PartialMap> find_morphism(const SearchRequest& req)
{
    std::optional<PartialMap> found;
    for_each_morphism(req, [&](const PartialMap& f) {
        found = f;
        return false;
    });
    return found;
}

std::vector<PartialMap> all_morphisms(const SearchRequest& req)
{
    std::vector<PartialMap> out;
    for_each_morphism(req, [&](const PartialMap& f) {
        out.push_back(f);
        return true;
    });
    return out;
}

std::optional<Vertex> blocked_vertex(const SearchRequest& req)
{
    Search s(req, nullptr);
    return s.first_empty();
}

namespace {

    void require_valid(const Graph& g1, const Graph& g2, const PartialMap& f, MorphismKind kind, const char* what)
    {
        if (!is_morphism(g1, g2, f, kind))
            throw std::invalid_argument(std::string(what) + ": initial map is not " + kind_letter(kind) + "-valid");
    }

} // namespace

std::optional<PartialMap> extend_to_endomorphism(const Graph& g, const PartialMap& f)
{
    require_valid(g, g, f, MorphismKind::Homo, "extend_to_endomorphism");
    return find_morphism({.src = g, .dst = g, .kind = MorphismKind::Homo, .seed = f});
}

std::optional<PartialMap> extend_to_automorphism(const Graph& g, const PartialMap& f)
{
    require_valid(g, g, f, MorphismKind::Iso, "extend_to_automorphism");
    return find_morphism({.src = g, .dst = g, .kind = MorphismKind::Iso, .seed = f});
}

std::optional<PartialMap> extend_between(const Graph& g1, const Graph& g2, MorphismKind kind, const PartialMap& f)
{
    require_valid(g1, g2, f, MorphismKind::Homo, "extend_between");
    if (kind == MorphismKind::Iso && (g1.order() != g2.order() || g1.edge_count() != g2.edge_count()))
        return std::nullopt;
    if (kind == MorphismKind::Mono && g1.order() > g2.order())
        return std::nullopt;
    return find_morphism({.src = g1, .dst = g2, .kind = kind, .seed = f});
}

bool homomorphism_exists(const Graph& from, const Graph& to)
{
    return find_morphism({.src = from, .dst = to, .kind = MorphismKind::Homo}).has_value();
}

bool hom_equivalent(const Graph& a, const Graph& b) { return homomorphism_exists(a, b) && homomorphism_exists(b, a); }

std::vector<PartialMap> automorphisms(const Graph& g, std::size_t limit)
{
    PartialMap id = identity_on(g.order(), g.vertices());
    std::vector<PartialMap> out{id};
    if (limit <= 1)
        return out;
    for_each_morphism({.src = g, .dst = g, .kind = MorphismKind::Iso}, [&](const PartialMap& f) {
        if (f != id)
            out.push_back(f);
        return out.size() < limit;
    });
    return out;
}

CoreResult core_of(const Graph& g)
{
    const int n = g.order();
    const int start = g.edge_count() > 0 ? 2 : 1;
    for (int k = start; k <= n; ++k) {
        std::optional<CoreResult> found;
        for_each_subset_of_size(g.vertices(), k, [&](VertexSet s) {
            if (start == 2 && induced_subgraph(g, s).graph.edge_count() == 0)
                return true;
            std::vector<VertexSet> allowed(static_cast<std::size_t>(n), s);
            auto r = find_morphism(
                {.src = g, .dst = g, .kind = MorphismKind::Homo, .seed = identity_on(n, s), .allowed = allowed});
            if (!r)
                return true;
            found = CoreResult{induced_subgraph(g, s), *r};
            return false;
        });
        if (found)
            return *found;
    }
    throw std::logic_error("core_of: no retract found");
}

} // namespace homhom
