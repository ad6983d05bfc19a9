#include "bookx/zk.hpp"

#include <algorithm>
#include <string>

#include "bookx/error.hpp"

namespace bookx {

std::size_t edge_index(int n, Edge e) {
    const auto u = static_cast<std::size_t>(e.u);
    const auto v = static_cast<std::size_t>(e.v);
    const auto nn = static_cast<std::size_t>(n);
    return u * (2 * nn - u - 1) / 2 + (v - u - 1);
}

Edge edge_at(int n, std::size_t index) {
    int u = 0;
    std::size_t row = static_cast<std::size_t>(n - 1);
    while (index >= row) {
        index -= row;
        --row;
        ++u;
    }
    return {u, u + 1 + static_cast<int>(index)};
}

BookDrawing::BookDrawing(int n, int k, std::vector<int> page_of) : n_(n), k_(k), page_of_(std::move(page_of)) {
    if (n < 3) throw InputError("book drawing needs n >= 3");
    if (k < 1) throw InputError("book drawing needs k >= 1");
    if (page_of_.size() != static_cast<std::size_t>(binomial(n, 2)))
        throw InputError("book drawing must assign all C(n,2) edges");
    for (int p : page_of_)
        if (p < 0 || p >= k) throw InputError("page index " + std::to_string(p) + " out of range");
}

BookDrawing BookDrawing::from_pages(int n, int k, const std::vector<std::vector<Edge>>& pages) {
    if (n < 3 || k < 1) throw InputError("book drawing needs n >= 3 and k >= 1");
    if (static_cast<int>(pages.size()) != k) throw InputError("expected " + std::to_string(k) + " pages");
    std::vector<int> page_of(static_cast<std::size_t>(binomial(n, 2)), -1);
    for (int p = 0; p < k; ++p)
        for (Edge e : pages[p]) {
            if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n || e.u == e.v)
                throw InputError("invalid edge in drawing");
            auto& slot = page_of[edge_index(n, make_edge(e.u, e.v))];
            if (slot != -1) throw InputError("edge assigned twice");
            slot = p;
        }
    if (std::find(page_of.begin(), page_of.end(), -1) != page_of.end())
        throw InputError("drawing leaves an edge unassigned");
    return BookDrawing(n, k, std::move(page_of));
}

void BookDrawing::set_page(Edge e, int page) {
    if (page < 0 || page >= k_) throw InputError("page index out of range");
    page_of_[edge_index(n_, make_edge(e.u, e.v))] = page;
}

std::vector<std::vector<Edge>> BookDrawing::pages() const {
    std::vector<std::vector<Edge>> out(k_);
    for (std::size_t i = 0; i < page_of_.size(); ++i) out[page_of_[i]].push_back(edge_at(n_, i));
    return out;
}

ConvexGraph BookDrawing::page_graph(int page) const {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < page_of_.size(); ++i)
        if (page_of_[i] == page) edges.push_back(edge_at(n_, i));
    return ConvexGraph(n_, std::move(edges), true);
}

ZkParams ZkParams::of(int n, int k) {
    if (n < 1 || k < 1) throw InputError("need n >= 1 and k >= 1");
    ZkParams p{n, k, n / k, n % k};
    if (p.r == 0) {
        p.r = k;
        p.q -= 1;
    }
    return p;
}

Rational f_term(int r, int n) {
    if (r < 0 || n < 0) throw InputError("F(r,n) needs r, n >= 0");
    const BigInt rr = r;
    return Rational(rr * (rr * rr - 3 * rr + 2) * (2 * BigInt(n) - 3 - rr), 24);
}

std::int64_t zk_value(int n, int k) {
    if (n < 1 || k < 1) throw InputError("Z_k(n) needs n >= 1 and k >= 1");
    const int rem = n % k;
    const int fl = n / k;
    return to_int64(Rational(rem) * f_term(fl + 1, n) + Rational(k - rem) * f_term(fl, n));
}

std::vector<Edge> matching_class(int n, int m) {
    if (n < 3 || m < 0 || m >= n) throw InputError("matching class needs n >= 3 and 0 <= m < n");
    std::vector<Edge> out;
    for (int i = 0; i < n; ++i) {
        const int j = ((m - i) % n + n) % n;
        if (i < j) out.push_back({i, j});
    }
    return out;
}

namespace {

BookDrawing tile_blocks(int n, int k, std::span<const int> sizes) {
    std::vector<int> page_of_class(n);
    int cls = 0;
    for (int c = 0; c < k; ++c)
        for (int t = 0; t < sizes[c]; ++t) page_of_class[cls++] = c;
    std::vector<int> page_of(static_cast<std::size_t>(binomial(n, 2)));
    for (std::size_t i = 0; i < page_of.size(); ++i)
        page_of[i] = page_of_class[matching_class_of(n, edge_at(n, i))];
    return BookDrawing(n, k, std::move(page_of));
}

}  // namespace

BookDrawing dps_construction(int n, int k) {
    if (n < 3) throw InputError("construction needs n >= 3");
    const ZkParams p = ZkParams::of(n, k);
    std::vector<int> sizes(k, p.q);
    std::fill(sizes.begin(), sizes.begin() + p.r, p.q + 1);
    return tile_blocks(n, k, sizes);
}

BookDrawing block_permutation_variant(int n, int k, std::span<const int> block_sizes) {
    if (n < 3) throw InputError("construction needs n >= 3");
    const ZkParams p = ZkParams::of(n, k);
    if (static_cast<int>(block_sizes.size()) != k) throw InputError("need one block size per page");
    const auto big = std::count(block_sizes.begin(), block_sizes.end(), p.q + 1);
    const auto small = std::count(block_sizes.begin(), block_sizes.end(), p.q);
    if (big != p.r || small != k - p.r)
        throw InputError("block sizes must be " + std::to_string(p.r) + " x " + std::to_string(p.q + 1) +
                         " and " + std::to_string(k - p.r) + " x " + std::to_string(p.q));
    return tile_blocks(n, k, block_sizes);
}

std::vector<int> detect_block_layout(const BookDrawing& d) {
    const int n = d.n();
    std::vector<int> page_of_class(n, -1);
    for (std::size_t i = 0; i < d.assignment().size(); ++i) {
        const int cls = matching_class_of(n, edge_at(n, i));
        const int p = d.assignment()[i];
        if (page_of_class[cls] == -1) page_of_class[cls] = p;
        else if (page_of_class[cls] != p) return {};
    }
    std::vector<int> sizes(d.k(), 0);
    std::vector<bool> closed(d.k(), false);
    for (int cls = 0; cls < n; ++cls) {
        const int p = page_of_class[cls];
        if (cls > 0 && page_of_class[cls - 1] != p) closed[page_of_class[cls - 1]] = true;
        if (closed[p]) return {};
        ++sizes[p];
    }
    return sizes;
}

BookDrawing boundary_move_variant(const BookDrawing& base, int boundary, std::span<const Edge> subset) {
    const int n = base.n();
    if (boundary < 0 || boundary >= n) throw InputError("boundary class out of range");
    const auto sizes = detect_block_layout(base);
    if (sizes.empty()) throw InputError("base drawing is not a block construction");
    const ZkParams p = ZkParams::of(n, base.k());

    const int page = base.page_of(matching_class(n, boundary).front());
    if (sizes[page] != p.q + 1) throw InputError("boundary class is not in a (q+1)-block");
    auto page_of_class = [&](int cls) { return base.page_of(matching_class(n, cls).front()); };
    int target = -1;
    if (p.q >= 1 && boundary > 0 && page_of_class(boundary - 1) != page &&
        sizes[page_of_class(boundary - 1)] == p.q)
        target = page_of_class(boundary - 1);
    if (p.q >= 1 && boundary + 1 < n && page_of_class(boundary + 1) != page &&
        sizes[page_of_class(boundary + 1)] == p.q)
        target = page_of_class(boundary + 1);
    if (target == -1) throw InputError("boundary class does not border a q-block");

    BookDrawing out = base;
    for (Edge e : subset) {
        const Edge ee = make_edge(e.u, e.v);
        if (ee.u < 0 || ee.v >= n || ee.u == ee.v || matching_class_of(n, ee) != boundary)
            throw InputError("moved edge is not in the boundary matching");
        out.set_page(ee, target);
    }
    return out;
}

std::int64_t count_monochromatic_crossings(const BookDrawing& d) {
    std::int64_t total = 0;
    for (const auto& edges : d.pages()) total += crossing_count(ConvexGraph(d.n(), edges, true));
    return total;
}

}  // namespace bookx
