#ifndef BOOKX_TESTS_ORACLES_HPP
#define BOOKX_TESTS_ORACLES_HPP

// Brute-force reference implementations. They share nothing with the library
// beyond plain vertex pairs.

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <cstdint>
#include <utility>
#include <vector>

namespace oracle {

using Pair = std::pair<int, int>;

// Vertex i sits at (i, i^2): points on a parabola are in convex position and
// their hull order is 0, 1, ..., n-1.
inline std::int64_t orient(int a, int b, int c) {
    const std::int64_t ax = a, ay = std::int64_t{a} * a;
    const std::int64_t bx = b, by = std::int64_t{b} * b;
    const std::int64_t cx = c, cy = std::int64_t{c} * c;
    return (bx - ax) * (cy - ay) - (by - ay) * (cx - ax);
}

inline bool segments_cross(Pair s, Pair t) {
    if (s.first == t.first || s.first == t.second || s.second == t.first || s.second == t.second) return false;
    const auto sgn = [](std::int64_t v) { return (v > 0) - (v < 0); };
    return sgn(orient(s.first, s.second, t.first)) * sgn(orient(s.first, s.second, t.second)) < 0 &&
           sgn(orient(t.first, t.second, s.first)) * sgn(orient(t.first, t.second, s.second)) < 0;
}

inline std::int64_t crossings(const std::vector<Pair>& edges) {
    std::int64_t total = 0;
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j) total += segments_cross(edges[i], edges[j]);
    return total;
}

inline int local_crossing(const std::vector<Pair>& edges) {
    int best = 0;
    for (const Pair& e : edges) {
        int c = 0;
        for (const Pair& f : edges) c += segments_cross(e, f);
        best = std::max(best, c);
    }
    return best;
}

inline bool is_side(int n, Pair e) { return e.second - e.first == 1 || (e.first == 0 && e.second == n - 1); }

inline std::vector<Pair> diagonals(int n) {
    std::vector<Pair> out;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!is_side(n, {i, j})) out.push_back({i, j});
    return out;
}

struct Exhaustive {
    int best = 0;
    std::vector<std::uint32_t> optima;  // subsets of diagonals(n)
};

// Every subset of D_n's diagonals; `accept` sees the subset and per-diagonal
// crossing masks.
template <class Accept>
Exhaustive exhaustive(int n, Accept accept) {
    const auto diag = diagonals(n);
    const int m = static_cast<int>(diag.size());
    std::vector<std::uint32_t> adj(m, 0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (segments_cross(diag[i], diag[j])) adj[i] |= 1u << j;
    Exhaustive out;
    for (std::uint32_t s = 0; s < (1u << m); ++s) {
        const int size = std::popcount(s);
        if (size < out.best || !accept(s, adj)) continue;
        if (size > out.best) {
            out.best = size;
            out.optima.clear();
        }
        out.optima.push_back(s);
    }
    return out;
}

inline Exhaustive max_local_crossing(int n, int ell) {
    return exhaustive(n, [ell](std::uint32_t s, const std::vector<std::uint32_t>& adj) {
        for (std::uint32_t r = s; r; r &= r - 1)
            if (std::popcount(adj[std::countr_zero(r)] & s) > ell) return false;
        return true;
    });
}

// Forest test by edge count per component: a graph is a forest iff
// |E| = |V| - #components.
inline Exhaustive max_acyclic(int n) {
    return exhaustive(n, [](std::uint32_t s, const std::vector<std::uint32_t>& adj) {
        int edges = 0;
        for (std::uint32_t r = s; r; r &= r - 1) edges += std::popcount(adj[std::countr_zero(r)] & s);
        edges /= 2;
        int components = 0;
        std::uint32_t left = s;
        while (left) {
            std::uint32_t comp = left & -left, frontier = comp;
            while (frontier) {
                const int v = std::countr_zero(frontier);
                frontier &= frontier - 1;
                const std::uint32_t fresh = adj[v] & s & ~comp;
                comp |= fresh;
                frontier |= fresh;
            }
            left &= ~comp;
            ++components;
        }
        return edges == std::popcount(s) - components;
    });
}

inline std::vector<Pair> subset_edges(int n, std::uint32_t s) {
    const auto diag = diagonals(n);
    std::vector<Pair> out;
    for (std::uint32_t r = s; r; r &= r - 1) out.push_back(diag[std::countr_zero(r)]);
    return out;
}

// Lexicographically least image under the 2n rotations and reflections.
inline std::vector<Pair> canonical(int n, const std::vector<Pair>& edges) {
    std::vector<Pair> best;
    for (int rot = 0; rot < n; ++rot)
        for (int refl = 0; refl < 2; ++refl) {
            std::vector<Pair> img;
            for (auto [a, b] : edges) {
                int x = ((refl ? n - a : a) + rot) % n;
                int y = ((refl ? n - b : b) + rot) % n;
                img.push_back({std::min(x, y), std::max(x, y)});
            }
            std::sort(img.begin(), img.end());
            if (best.empty() || img < best) best = img;
        }
    return best;
}

inline std::size_t dihedral_classes(int n, const Exhaustive& ex) {
    std::vector<std::vector<Pair>> seen;
    for (std::uint32_t s : ex.optima) seen.push_back(canonical(n, subset_edges(n, s)));
    std::sort(seen.begin(), seen.end());
    return static_cast<std::size_t>(std::unique(seen.begin(), seen.end()) - seen.begin());
}

// Smallest p/q >= sqrt(num/den) over q = 1..max_den, by trying every q.
inline std::pair<std::int64_t, std::int64_t> sqrt_upper_brute(std::int64_t num, std::int64_t den,
                                                              std::int64_t max_den) {
    std::int64_t bp = -1, bq = 1;
    for (std::int64_t q = 1; q <= max_den; ++q) {
        // smallest p with p^2 den >= num q^2
        const __int128 target = static_cast<__int128>(num) * q * q;
        std::int64_t p = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(target) / den));
        while (p > 0 && static_cast<__int128>(p - 1) * (p - 1) * den >= target) --p;
        while (static_cast<__int128>(p) * p * den < target) ++p;
        if (bp < 0 || static_cast<__int128>(p) * bq < static_cast<__int128>(bp) * q) {
            bp = p;
            bq = q;
        }
    }
    const std::int64_t g = std::gcd(bp, bq);
    return {bp / g, bq / g};
}

inline std::int64_t two_page_formula(std::int64_t n) {
    return (n / 2) * ((n - 1) / 2) * ((n - 2) / 2) * ((n - 3) / 2) / 4;
}

}  // namespace oracle

#endif  // BOOKX_TESTS_ORACLES_HPP
