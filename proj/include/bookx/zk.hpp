#ifndef BOOKX_ZK_HPP
#define BOOKX_ZK_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "bookx/convex_graph.hpp"
#include "bookx/rational.hpp"

namespace bookx {

/// Position of {u, v} in the lexicographic list of all C(n,2) pairs.
std::size_t edge_index(int n, Edge e);
Edge edge_at(int n, std::size_t index);

/**
 * A k-page book drawing of K_n in the circular model: every one of the
 * C(n,2) pairs (sides included) is assigned a page in 0..k-1.
 */
class BookDrawing {
public:
    BookDrawing(int n, int k, std::vector<int> page_of);
    static BookDrawing from_pages(int n, int k, const std::vector<std::vector<Edge>>& pages);

    int n() const { return n_; }
    int k() const { return k_; }
    int page_of(Edge e) const { return page_of_[edge_index(n_, e)]; }
    std::span<const int> assignment() const { return page_of_; }

    void set_page(Edge e, int page);

    /// Edges of each page in lexicographic order.
    std::vector<std::vector<Edge>> pages() const;
    ConvexGraph page_graph(int page) const;

    bool operator==(const BookDrawing&) const = default;

private:
    int n_;
    int k_;
    std::vector<int> page_of_;
};

/// n = qk + r with 0 < r <= k.
struct ZkParams {
    int n = 0;
    int k = 0;
    int q = 0;
    int r = 0;

    static ZkParams of(int n, int k);
};

/// F(r,n) = r(r^2-3r+2)(2n-3-r)/24.
Rational f_term(int r, int n);

/// Z_k(n), the crossing count of the block constructions.
std::int64_t zk_value(int n, int k);

/// g_m: pairs {i,j} with i + j = m (mod n).
std::vector<Edge> matching_class(int n, int m);

/// Matching class index of an edge.
inline int matching_class_of(int n, Edge e) { return (e.u + e.v) % n; }

/// Consecutive blocks of matchings: the first r pages take q+1 classes,
/// the remaining k-r pages take q.
BookDrawing dps_construction(int n, int k);

/// Consecutive blocks with page c taking block_sizes[c] classes. The sizes
/// must be a permutation of r copies of q+1 and k-r copies of q.
BookDrawing block_permutation_variant(int n, int k, std::span<const int> block_sizes);

/// Per-page block sizes when every matching class sits on one page and each
/// page holds a consecutive run of classes; empty otherwise.
std::vector<int> detect_block_layout(const BookDrawing& d);

/**
 * Moves `subset` (edges of g_boundary) to the neighbouring page. The class
 * g_boundary must be the end of a (q+1)-block adjacent to a q-block of the
 * block construction `base`.
 */
BookDrawing boundary_move_variant(const BookDrawing& base, int boundary, std::span<const Edge> subset);

std::int64_t count_monochromatic_crossings(const BookDrawing& d);

}  // namespace bookx

#endif  // BOOKX_ZK_HPP
