#include "bookx/convex_graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "bookx/error.hpp"

namespace bookx {

namespace {

void check_vertex(int n, int v) {
    if (v < 0 || v >= n)
        throw InputError("vertex " + std::to_string(v) + " out of range for n=" + std::to_string(n));
}

bool alternate(Edge a, Edge b) {
    if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) return false;
    const bool bu_inside = a.u < b.u && b.u < a.v;
    const bool bv_inside = a.u < b.v && b.v < a.v;
    return bu_inside != bv_inside;
}

Edge mod_edge(int n, int a, int b) { return make_edge(((a % n) + n) % n, ((b % n) + n) % n); }

}  // namespace

bool is_side(int n, Edge e) { return e.v - e.u == 1 || (e.u == 0 && e.v == n - 1); }

int edge_length(int n, Edge e) { return std::min(e.v - e.u, n - (e.v - e.u)); }

bool edges_cross(int n, Edge a, Edge b) {
    for (int v : {a.u, a.v, b.u, b.v}) check_vertex(n, v);
    if (a.u == a.v || b.u == b.v) throw InputError("edge with equal endpoints");
    return alternate(make_edge(a.u, a.v), make_edge(b.u, b.v));
}

ConvexGraph::ConvexGraph(int n, std::vector<Edge> edges, bool allow_sides)
    : n_(n), allow_sides_(allow_sides), edges_(std::move(edges)) {
    if (n < 3) throw InputError("convex graph needs n >= 3, got " + std::to_string(n));
    for (Edge& e : edges_) {
        check_vertex(n, e.u);
        check_vertex(n, e.v);
        if (e.u == e.v) throw InputError("loop at vertex " + std::to_string(e.u));
        e = make_edge(e.u, e.v);
        if (!allow_sides && is_side(n, e))
            throw InputError("side {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                             "} not allowed in a subgraph of D_n");
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw InputError("duplicate edge");
}

bool ConvexGraph::contains(Edge e) const {
    return std::binary_search(edges_.begin(), edges_.end(), make_edge(e.u, e.v));
}

std::int64_t crossing_count(const ConvexGraph& g) {
    const auto edges = g.edges();
    std::int64_t total = 0;
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j) total += alternate(edges[i], edges[j]);
    return total;
}

std::vector<int> per_edge_crossings(const ConvexGraph& g) {
    const auto edges = g.edges();
    std::vector<int> count(edges.size(), 0);
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j)
            if (alternate(edges[i], edges[j])) {
                ++count[i];
                ++count[j];
            }
    return count;
}

int local_crossing_number(const ConvexGraph& g) {
    const auto count = per_edge_crossings(g);
    return count.empty() ? 0 : *std::max_element(count.begin(), count.end());
}

std::size_t CrossingGraph::adjacency_count() const {
    std::size_t deg = 0;
    for (const auto& nb : neighbors) deg += nb.size();
    return deg / 2;
}

CrossingGraph crossing_graph(const ConvexGraph& g) {
    CrossingGraph cg;
    cg.nodes.assign(g.edges().begin(), g.edges().end());
    cg.neighbors.resize(cg.nodes.size());
    for (std::size_t i = 0; i < cg.nodes.size(); ++i)
        for (std::size_t j = i + 1; j < cg.nodes.size(); ++j)
            if (alternate(cg.nodes[i], cg.nodes[j])) {
                cg.neighbors[i].push_back(static_cast<int>(j));
                cg.neighbors[j].push_back(static_cast<int>(i));
            }
    return cg;
}

bool has_acyclic_crossing_graph(const ConvexGraph& g) {
    const CrossingGraph cg = crossing_graph(g);
    std::vector<int> parent(cg.nodes.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < cg.nodes.size(); ++i)
        for (int j : cg.neighbors[i]) {
            if (j < static_cast<int>(i)) continue;
            const int a = find(static_cast<int>(i)), b = find(j);
            if (a == b) return false;
            parent[a] = b;
        }
    return true;
}

ConvexGraph complete_convex(int n, bool include_sides) {
    if (n < 3) throw InputError("complete convex graph needs n >= 3");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (include_sides || !is_side(n, {i, j})) edges.push_back({i, j});
    return ConvexGraph(n, std::move(edges), include_sides);
}

int reduced_complete_max_index(int nprime) { return std::max(0, (nprime - 4) / 2); }

int reduced_complete_delta(int nprime, int i) {
    if (nprime % 2 == 0) return 4 * i <= nprime ? 0 : 1;
    return i == 0 ? 0 : 1;
}

std::vector<Edge> removed_main_diagonals(int nprime, int i) {
    if (nprime < 4) throw InputError("reduced_complete needs n' >= 4");
    if (i < 0 || i > reduced_complete_max_index(nprime))
        throw InputError("index i=" + std::to_string(i) + " out of range [0, " +
                         std::to_string(reduced_complete_max_index(nprime)) + "] for n'=" +
                         std::to_string(nprime));
    std::vector<Edge> removed;
    if (i == 0) return removed;
    if (nprime % 2 == 1) {
        for (int t = 0; t <= i; ++t) removed.push_back(mod_edge(nprime, 2 * t, 2 * t + (nprime - 1) / 2));
    } else if (4 * i <= nprime) {
        for (int t = 0; t < i; ++t) removed.push_back(mod_edge(nprime, 2 * t, 2 * t + nprime / 2));
    } else {
        const int quarter = nprime / 4;
        for (int t = 0; t < quarter; ++t) removed.push_back(mod_edge(nprime, 2 * t, 2 * t + nprime / 2));
        for (int t = 0; t <= i - quarter; ++t)
            removed.push_back(mod_edge(nprime, 2 * t + 1, 2 * t + 1 + nprime / 2));
    }
    std::sort(removed.begin(), removed.end());
    return removed;
}

ConvexGraph reduced_complete(int nprime, int i) {
    const auto removed = removed_main_diagonals(nprime, i);
    const ConvexGraph full = complete_convex(nprime, false);
    std::vector<Edge> edges;
    for (Edge e : full.edges())
        if (!std::binary_search(removed.begin(), removed.end(), e)) edges.push_back(e);
    return ConvexGraph(nprime, std::move(edges));
}

int CompositionSpec::result_n() const {
    int total = 0;
    for (const auto& p : parts) total += p.n();
    return total - 2 * (static_cast<int>(parts.size()) - 1);
}

ConvexGraph parallel_compose(const CompositionSpec& spec) {
    if (spec.parts.empty()) throw InputError("composition needs at least one part");
    for (const auto& p : spec.parts) {
        if (p.n() < 3) throw InputError("composition part with fewer than 3 vertices");
        if (p.allow_sides()) throw InputError("composition parts must be subgraphs of D_n");
    }
    if (spec.parts.size() == 1) return spec.parts.front();

    const int total = spec.result_n();
    std::vector<Edge> edges;
    int start = 1;
    for (std::size_t j = 0; j < spec.parts.size(); ++j) {
        const ConvexGraph& part = spec.parts[j];
        auto global = [&](int local) { return local == 0 ? 0 : start + local - 1; };
        for (Edge e : part.edges()) edges.push_back(make_edge(global(e.u), global(e.v)));
        start += part.n() - 2;
        if (j + 1 < spec.parts.size()) edges.push_back({0, start});
    }
    return ConvexGraph(total, std::move(edges));
}

ConvexGraph lemma36_construction(int n) {
    if (n < 4) throw InputError("lemma36_construction needs n >= 4");
    std::vector<Edge> edges;
    for (int i = 3; i <= n - 1; ++i) {
        edges.push_back({0, i - 1});
        edges.push_back({i - 2, i});
    }
    return ConvexGraph(n, std::move(edges));
}

ConvexGraph dihedral_image(const ConvexGraph& g, int rotation, bool reflect) {
    const int n = g.n();
    std::vector<Edge> edges;
    edges.reserve(g.edge_count());
    for (Edge e : g.edges()) {
        const int a = reflect ? -e.u : e.u;
        const int b = reflect ? -e.v : e.v;
        edges.push_back(mod_edge(n, a + rotation, b + rotation));
    }
    return ConvexGraph(n, std::move(edges), g.allow_sides());
}

ConvexGraph canonical_form(const ConvexGraph& g) {
    ConvexGraph best = g;
    for (int r = 0; r < g.n(); ++r)
        for (bool reflect : {false, true}) {
            ConvexGraph img = dihedral_image(g, r, reflect);
            if (std::lexicographical_compare(img.edges().begin(), img.edges().end(),
                                             best.edges().begin(), best.edges().end()))
                best = std::move(img);
        }
    return best;
}

}  // namespace bookx
