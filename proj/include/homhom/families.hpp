#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "homhom/graph.hpp"

namespace homhom {

enum class FamilyTag {
    Complete,            // [n]
    RegularMultipartite, // [t, s]: K_t[complement of K_s]
    Cycle,               // [n]
    Path,                // [k]: k edges, k+1 vertices
    LineKss,             // [s]: L(K_{s,s})
    Bcpm,                // [n]: K_{n,n} minus a perfect matching
    Petersen,            // []
    Clebsch,             // []
    TwoSquares,          // []
    KnTreelike,          // [n, components]: chain of K_n blocks
    KmnTreelike,         // [m, n, components]: chain of K_{m,n} blocks
    PcmExample,          // [n]: the PCM(n)-free (B2*) example graph
    Multiclaw,           // [m, k, j_1, ..., j_l]
};

struct FamilyDescriptor {
    FamilyTag tag;
    std::vector<int> params;

    bool operator==(const FamilyDescriptor&) const = default;
};

std::string_view family_name(FamilyTag tag);
/// Accepts the names printed by family_name plus a few aliases
/// ("fig8", "multipartite", "kss-line"); throws std::invalid_argument.
FamilyTag family_tag_from_name(std::string_view name);
std::string to_string(const FamilyDescriptor& desc);

/// Vertex labelling per family:
///  - RegularMultipartite: part i holds vertices i*s .. i*s+s-1.
///  - LineKss: u_i (u, i in 0..s-1) is vertex u*s + i.
///  - Bcpm: x_i = i, y_j = n + j.
///  - Petersen: 2-subsets of {1..5} in lexicographic order (12, 13, ..., 45).
///  - Clebsch: 5-bit strings with the top bit clear; b ~ c iff b or its
///    antipode is at Hamming distance 1 from c.
///  - TwoSquares: the 6-cycle 0..5 with chord 2-5.
///  - PcmExample: a_1..a_3 = 0..2, b_1..b_n = 3..n+2.
///  - Multiclaw: the K_m block first, then each j_alpha * K_k block in turn.
Graph make(const FamilyDescriptor& desc);

/// A block is K_a when b == 0, otherwise K_{a,b} (part a listed first).
struct Block {
    int a;
    int b = 0;
};

struct Glue {
    int block_a;
    Vertex vertex_a;
    int block_b;
    Vertex vertex_b;
};

/// Blocks glued pairwise at single vertices. The blocks-and-glues graph must
/// be a tree and no two vertices of one block may be identified. A vertex may
/// be shared by several blocks.
struct TreeOfCliques {
    std::vector<Block> blocks;
    std::vector<Glue> glues;
};

Graph make_treelike(const TreeOfCliques& spec);
/// A chain of `components` copies of K_n, each glued to the next.
TreeOfCliques treelike_chain(int n, int components);

/// Complete bipartite on {a_1,a_2,a_3} and {b_1..b_n} except a_1b_1, a_1b_3,
/// a_2b_2, a_2b_3. Requires n >= 4.
Graph make_pcm_figure8(int n);

inline constexpr int kDefaultEnumerationBound = 7;
inline constexpr int kHardEnumerationBound = 8;

/// One representative per isomorphism class, ordered by (order, canonical
/// form), for every order 1..max_n. Orders above 7 need allow_large and
/// print a warning; orders above 8 are rejected.
std::vector<Graph> enumerate_graphs(int max_n, bool connected_only, bool allow_large = false);

} // namespace homhom
