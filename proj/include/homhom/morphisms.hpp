#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "homhom/graph.hpp"

namespace homhom {

/// H: homomorphism, M: monomorphism (injective homomorphism),
/// I: isomorphism onto the induced image (injective, edges and non-edges
/// both preserved).
enum class MorphismKind { Homo, Mono, Iso };

char kind_letter(MorphismKind k);
MorphismKind kind_from_letter(char c);
/// Iso is strongest: every Iso map is Mono, every Mono map is Homo.
bool at_least(MorphismKind have, MorphismKind want);

inline constexpr Vertex kUnmapped = -1;

/// image[v] is the target of v, or kUnmapped.
using PartialMap = std::vector<Vertex>;

PartialMap empty_map(int source_order);
PartialMap identity_on(int source_order, VertexSet s);
VertexSet domain_of(const PartialMap& f);
VertexSet image_of(const PartialMap& f);

/// Strongest kind the map satisfies on its domain, or nullopt when it does
/// not preserve edges. Sizes must match src.order(); targets must be in dst.
std::optional<MorphismKind> strongest_kind(const Graph& src, const Graph& dst, const PartialMap& f);
bool is_morphism(const Graph& src, const Graph& dst, const PartialMap& f, MorphismKind kind);

/// Return false to stop the enumeration.
using MorphismVisitor = std::function<bool(const PartialMap&)>;

struct SearchRequest {
    const Graph& src;
    const Graph& dst;
    MorphismKind kind;
    /// Vertices of src that must be mapped. Defaults to all of src.
    std::optional<VertexSet> scope{};
    /// Fixed assignments; must lie in scope. An invalid seed has no extensions.
    PartialMap seed{};
    /// Optional allowed targets, indexed by source vertex.
    std::span<const VertexSet> allowed{};
};

/// Visits every map on `scope` that agrees with the seed and has the
/// requested kind, in lexicographic order of target ids under the search's
/// variable order. Returns the number of maps visited.
std::size_t for_each_morphism(const SearchRequest& req, const MorphismVisitor& visit);
std::optional<PartialMap> find_morphism(const SearchRequest& req);
std::vector<PartialMap> all_morphisms(const SearchRequest& req);

/// A source vertex whose set of possible targets is empty once the seed is
/// propagated to its neighbours; such a vertex blocks every extension.
std::optional<Vertex> blocked_vertex(const SearchRequest& req);

std::optional<PartialMap> extend_to_endomorphism(const Graph& g, const PartialMap& f);
std::optional<PartialMap> extend_to_automorphism(const Graph& g, const PartialMap& f);
/// kind Iso asks for an isomorphism g1 -> g2.
std::optional<PartialMap> extend_between(const Graph& g1, const Graph& g2, MorphismKind kind, const PartialMap& f);

bool homomorphism_exists(const Graph& from, const Graph& to);
bool hom_equivalent(const Graph& a, const Graph& b);

/// At most `limit` automorphisms; the first is the identity.
std::vector<PartialMap> automorphisms(const Graph& g, std::size_t limit = 1U << 20);

struct CoreResult {
    InducedSubgraph core;
    /// A retraction of g onto the core's vertex set.
    PartialMap retraction;
};

/// Smallest retract, searched by subset size and then by bitmask order.
CoreResult core_of(const Graph& g);

} // namespace homhom
