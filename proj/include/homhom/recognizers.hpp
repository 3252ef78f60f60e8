#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "homhom/families.hpp"
#include "homhom/graph.hpp"
#include "homhom/oracle.hpp"

namespace homhom {

// ---- C-II, C-HI, C-MI -------------------------------------------------------

struct UnionOfCopies {
    FamilyDescriptor family;
    int copies;
};

/// g as a disjoint union of copies of one connected-homogeneous graph:
/// K_n, K_t[complement of K_s] (s, t >= 2), C_n (n >= 5), L(K_{s,s}) (s >= 3),
/// bcpm(n) (n >= 3), Petersen or Clebsch. The first match in that order is
/// reported (C_6 is reported as a cycle, C_4 as K_2[complement of K_2]).
std::optional<UnionOfCopies> classify_cii(const Graph& g);

/// Disjoint union of equal complete graphs.
bool is_chi(const Graph& g);

/// Disjoint union of copies of one of K_n, K_{s,s} (s >= 2), C_n (n >= 3).
bool is_cmi(const Graph& g);

// ---- structural predicates --------------------------------------------------

/// n >= 2 such that g is K_n-treelike: every induced cycle is a triangle and
/// every neighbourhood is a disjoint union of K_{n-1}. Throws on disconnected g.
std::optional<int> is_kn_treelike(const Graph& g);

/// Every induced cycle has length 4 and the two-squares graph does not embed.
bool b1_holds(const Graph& g);
/// Connected bipartite, and for each k <= max degree every k-subset of a
/// part has a common neighbour.
bool b2_holds(const Graph& g);
/// Connected bipartite, and each whole part has a common neighbour.
bool b2_star_holds(const Graph& g);
/// n when g is K_{n,n} minus a perfect matching with n >= 3.
std::optional<int> is_bcpm(const Graph& g);

/// A perfect complement matching inside the subgraph induced on z_set and
/// w_set: matching[i] = (z, w) with z not adjacent to w, all w distinct.
struct PcmCertificate {
    VertexSet z_set;
    VertexSet w_set;
    std::vector<std::pair<Vertex, Vertex>> matching;
};

/// Empty string when `cert` describes an induced PCM(n) subgraph of g,
/// otherwise the first violated condition.
std::string pcm_certificate_problem(const Graph& g, const PcmCertificate& cert, int n);

/// Exhaustive search over induced subgraphs. Throws for n < 3.
std::optional<PcmCertificate> embeds_pcm(const Graph& g, int n);

class PcmPreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Grows a PCM(n) subgraph of the connected bipartite graph a, whose parts
/// are z_part and its complement W, from a maximum-degree vertex of z_part.
/// Requires n >= 3, |W| >= n and a non-neighbour in W for every z; throws
/// PcmPreconditionError naming the violated condition otherwise. Ties are
/// broken towards the smallest vertex id.
PcmCertificate pcm_extract(const Graph& a, VertexSet z_part, int n);

// ---- C-HH -------------------------------------------------------------------

enum class ChhFamily { K1, KnTreelike, B1, B2Star, Bcpm };

std::string chh_family_name(ChhFamily f);

struct ChhMatch {
    ChhFamily family; // first match in the order K1, treelike, B1, B2*, bcpm
    int param = 0;    // n for treelike and bcpm
    std::vector<std::pair<ChhFamily, int>> all;
};

/// Connected C-HH families. Throws std::invalid_argument on disconnected g.
std::optional<ChhMatch> is_chh_connected(const Graph& g);

/// Both graphs must be connected and C-HH (std::invalid_argument otherwise).
bool chh_symmetric(const Graph& g1, const Graph& g2);

enum class ChhCase {
    Connected,      // delegated to is_chh_connected
    IndependentSet, // (a)
    Treelike,       // (b) K_n-treelike components, one n >= 3
    AllB1,          // (c)
    AllB2Star,      // (d)
    BcpmMix,        // (e) copies of bcpm(n) plus PCM(n)-free B2* components
};

/// "connected", "a", ..., "e".
std::string chh_case_label(ChhCase c);

struct ChhClassification {
    ChhCase kind;
    int n = 0; // treelike clique size or bcpm parameter
    std::optional<ChhMatch> connected{};
};

std::optional<ChhClassification> is_chh(const Graph& g);

/// m, k, j_1.. when g is a generalised multiclaw (see FamilyTag::Multiclaw).
std::optional<std::vector<int>> is_multiclaw(const Graph& g);

// ---- combined report --------------------------------------------------------

enum class Decision { Yes, No, OracleOnly };

struct ClassEntry {
    ClassQuery query;
    Decision recognizer = Decision::OracleOnly;
    /// Membership forced by proven facts when the recognizer has no verdict.
    std::optional<bool> known{};
    std::vector<std::string> facts{};
    std::optional<bool> oracle{};
    bool oracle_exhaustive = false;
    std::optional<std::string> oracle_error{};
    std::optional<Witness> witness{};
    std::optional<std::string> family{};

    /// Recognizer (or known fact) contradicts the oracle.
    bool mismatch() const;
};

struct ClassReport {
    int order = 0;
    /// Requested classes in the order C-II, C-MI, C-HI, C-IH, C-MH, C-HH.
    std::vector<ClassEntry> entries;
    bool mismatch() const;
    const ClassEntry& at(const ClassQuery& q) const;
};

struct ClassifyOptions {
    bool run_oracle = true;
    /// Restricts both the recognizers and the oracle to these classes.
    std::vector<ClassQuery> classes{std::begin(kConnectedClasses), std::end(kConnectedClasses)};
    OracleBudget budget{};
};

ClassReport classify(const Graph& g, const ClassifyOptions& opts = {});

} // namespace homhom
