#ifndef BOOKX_CONVEX_GRAPH_HPP
#define BOOKX_CONVEX_GRAPH_HPP

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace bookx {

/// Unordered vertex pair stored with u < v.
struct Edge {
    int u = 0;
    int v = 0;

    auto operator<=>(const Edge&) const = default;
};

/// Orders the endpoints; does not validate them.
constexpr Edge make_edge(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

/// True when {u, v} is a side of the n-gon.
bool is_side(int n, Edge e);

/// Cyclic distance between the endpoints: 1 for sides, 2 for shortest diagonals.
int edge_length(int n, Edge e);

/// Convex-position test: true iff the endpoints are distinct and alternate
/// around the circle. Throws InputError on out-of-range vertices.
bool edges_cross(int n, Edge a, Edge b);

/**
 * A graph on vertices 0..n-1 placed clockwise in convex position.
 *
 * Edges are kept sorted and unique. Unless allow_sides is set, polygon sides
 * are rejected, so the graph is a subgraph of D_n.
 */
class ConvexGraph {
public:
    ConvexGraph() = default;
    ConvexGraph(int n, std::vector<Edge> edges, bool allow_sides = false);

    int n() const { return n_; }
    bool allow_sides() const { return allow_sides_; }
    std::span<const Edge> edges() const& { return edges_; }
    // by value on temporaries, so `for (Edge e : make_graph().edges())` is safe
    std::vector<Edge> edges() && { return std::move(edges_); }
    std::size_t edge_count() const { return edges_.size(); }
    bool contains(Edge e) const;

    bool operator==(const ConvexGraph&) const = default;

private:
    int n_ = 3;
    bool allow_sides_ = false;
    std::vector<Edge> edges_;
};

std::int64_t crossing_count(const ConvexGraph& g);

/// Number of edges crossing each edge, indexed like g.edges().
std::vector<int> per_edge_crossings(const ConvexGraph& g);

int local_crossing_number(const ConvexGraph& g);

/// G^x: one node per edge (lexicographic order), adjacent when the edges cross.
struct CrossingGraph {
    std::vector<Edge> nodes;
    std::vector<std::vector<int>> neighbors;

    std::size_t adjacency_count() const;
};

CrossingGraph crossing_graph(const ConvexGraph& g);
bool has_acyclic_crossing_graph(const ConvexGraph& g);

/// G_n when include_sides, otherwise D_n.
ConvexGraph complete_convex(int n, bool include_sides);

/// Largest legal i for reduced_complete(nprime, i).
int reduced_complete_max_index(int nprime);

/// The main diagonals E_{n',i} removed from D_{n'} by reduced_complete.
std::vector<Edge> removed_main_diagonals(int nprime, int i);

/// 1 when E_{n',i} holds i+1 diagonals, 0 when it holds i.
int reduced_complete_delta(int nprime, int i);

/// D_{n',i} = D_{n'} minus E_{n',i}.
ConvexGraph reduced_complete(int nprime, int i);

struct CompositionSpec {
    std::vector<ConvexGraph> parts;

    int result_n() const;
};

/**
 * Glues the parts in a chain along merged sides and adds each merged side as
 * an edge. Part j keeps vertex 0 as a shared pivot and occupies the next
 * n_j - 1 consecutive vertices, so consecutive parts share one pivot chord.
 */
ConvexGraph parallel_compose(const CompositionSpec& spec);

/// Edges v0 v_{i-1} and v_{i-2} v_i for 3 <= i <= n-1: 2n-6 edges whose
/// crossing graph is a forest.
ConvexGraph lemma36_construction(int n);

/// Image under the dihedral map v -> (sign * v + rotation) mod n.
ConvexGraph dihedral_image(const ConvexGraph& g, int rotation, bool reflect);

/// Lexicographically smallest sorted edge list over all 2n dihedral images.
ConvexGraph canonical_form(const ConvexGraph& g);

}  // namespace bookx

#endif  // BOOKX_CONVEX_GRAPH_HPP
