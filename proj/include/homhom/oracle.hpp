#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "homhom/graph.hpp"
#include "homhom/morphisms.hpp"

namespace homhom {

/// connected == true gives C-XY (source subgraphs restricted to connected
/// ones); false gives plain XY.
struct ClassQuery {
    MorphismKind x;
    MorphismKind y;
    bool connected = true;

    bool operator==(const ClassQuery&) const = default;
};

/// "C-HH", "II", ...
std::string class_name(const ClassQuery& q);
/// Inverse of class_name; throws std::invalid_argument.
ClassQuery parse_class(std::string_view name);

inline constexpr ClassQuery kCII{MorphismKind::Iso, MorphismKind::Iso};
inline constexpr ClassQuery kCMI{MorphismKind::Mono, MorphismKind::Iso};
inline constexpr ClassQuery kCHI{MorphismKind::Homo, MorphismKind::Iso};
inline constexpr ClassQuery kCIH{MorphismKind::Iso, MorphismKind::Homo};
inline constexpr ClassQuery kCMH{MorphismKind::Mono, MorphismKind::Homo};
inline constexpr ClassQuery kCHH{MorphismKind::Homo, MorphismKind::Homo};
inline constexpr ClassQuery kConnectedClasses[] = {kCII, kCMI, kCHI, kCIH, kCMH, kCHH};

/// An x-morphism from the subgraph induced on `source` that has no
/// y-extension. `blocked` is a vertex that no extension can map anywhere,
/// when one is visible after propagating the map to its neighbours.
struct Witness {
    VertexSet source;
    PartialMap map;
    std::optional<Vertex> blocked;
};

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct OracleBudget {
    /// Largest order accepted when x is H or M.
    int max_order_homo = 10;
    /// Largest order accepted when x is I.
    int max_order_iso = 16;
    /// Only source sets up to this size are examined when set.
    std::optional<int> max_source_size{};
    /// Each orbit of source sets is examined with this probability (in
    /// thousandths), drawn from a generator seeded with `seed`.
    int sample_permille = 1000;
    std::uint64_t seed = 0;

    bool exhaustive() const { return !max_source_size && sample_permille >= 1000; }
};

struct Verdict {
    bool holds = true;
    std::optional<Witness> witness{};
    /// False when the budget restricted the search, so `holds` only means
    /// that no counterexample was found among the examined maps.
    bool exhaustive = true;
    std::uint64_t maps_checked = 0;
};

Verdict is_c_xy(const Graph& g, const ClassQuery& q, const OracleBudget& budget = {});
Verdict is_xy(const Graph& g, MorphismKind x, MorphismKind y, const OracleBudget& budget = {});

/// Every x-morphism from a (connected) induced subgraph of g1 into g2
/// extends to a y-morphism g1 -> g2; for y = I that is an isomorphism.
Verdict c_xy_morphic(const Graph& g1, const Graph& g2, const ClassQuery& q, const OracleBudget& budget = {});

struct SymmetricVerdict {
    bool holds;
    Verdict forward;  // g1 into g2
    Verdict backward; // g2 into g1
};

/// Both directions are always evaluated.
SymmetricVerdict c_xy_symmetric(const Graph& g1, const Graph& g2, const ClassQuery& q, const OracleBudget& budget = {});

/// Every component in the class and every pair of components symmetric.
bool is_c_xy_via_components(const Graph& g, const ClassQuery& q, const OracleBudget& budget = {});

struct NeighbourhoodCheck {
    bool holds = true;
    std::optional<Vertex> counterexample{};
};

/// Checks that the subgraph induced on each nonempty neighbourhood is in the
/// unrestricted class XY.
NeighbourhoodCheck neighbourhood_class_check(const Graph& g, const ClassQuery& q, const OracleBudget& budget = {});

} // namespace homhom
