#include "bookx/emax.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>
#include <string>

#include "bookx/error.hpp"
#include "bookx/parallel.hpp"

namespace bookx {

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(int i) { return Mask{1} << i; }

// D_n's diagonals ordered by length, then lexicographically, with the
// crossing relation as bitmasks over that order.
struct Instance {
    int n = 0;
    std::vector<Edge> diagonals;
    std::vector<Mask> adj;

    ConvexGraph graph_of(Mask set) const {
        std::vector<Edge> edges;
        for (Mask m = set; m; m &= m - 1) edges.push_back(diagonals[std::countr_zero(m)]);
        return ConvexGraph(n, std::move(edges));
    }

    // first diagonal of each length, i.e. {0, L}
    int first_of_length(int len) const {
        for (std::size_t i = 0; i < diagonals.size(); ++i)
            if (edge_length(n, diagonals[i]) == len) return static_cast<int>(i);
        return -1;
    }

    Mask at_least_length(int len) const {
        Mask m = 0;
        for (std::size_t i = 0; i < diagonals.size(); ++i)
            if (edge_length(n, diagonals[i]) >= len) m |= bit(static_cast<int>(i));
        return m;
    }
};

Instance make_instance(int n) {
    Instance in;
    in.n = n;
    const ConvexGraph full = complete_convex(n, false);
    in.diagonals.assign(full.edges().begin(), full.edges().end());
    std::stable_sort(in.diagonals.begin(), in.diagonals.end(), [n](Edge a, Edge b) {
        return edge_length(n, a) < edge_length(n, b);
    });
    in.adj.assign(in.diagonals.size(), 0);
    for (std::size_t i = 0; i < in.diagonals.size(); ++i)
        for (std::size_t j = 0; j < in.diagonals.size(); ++j)
            if (i != j && edges_cross(n, in.diagonals[i], in.diagonals[j])) in.adj[i] |= bit(static_cast<int>(j));
    return in;
}

// Greedy partition of `cand` into cliques of the crossing graph; a clique
// contributes at most `per_clique` members to any feasible set.
int clique_cover_bound(const Instance& in, Mask cand, int per_clique) {
    int bound = 0;
    while (cand) {
        const int v = std::countr_zero(cand);
        Mask clique = bit(v);
        Mask ext = cand & in.adj[v];
        while (ext) {
            const int u = std::countr_zero(ext);
            clique |= bit(u);
            ext &= in.adj[u];
        }
        bound += std::min(std::popcount(clique), per_clique);
        cand &= ~clique;
    }
    return bound;
}

struct SubproblemResult {
    int best = -1;
    Mask best_set = 0;
    bool found = false;
    std::vector<Mask> optima;
    bool aborted = false;
    std::uint64_t nodes = 0;
};

// Subsets of diagonals where every chosen diagonal crosses at most `ell`
// chosen ones.
class LocalCrossingSearch {
public:
    LocalCrossingSearch(const Instance& in, int ell, int incumbent, bool collect, std::uint64_t node_limit)
        : in_(in), ell_(ell), collect_(collect), limit_(node_limit) {
        res_.best = incumbent;
    }

    SubproblemResult run(Mask chosen, Mask cand) {
        std::array<std::uint8_t, 64> cnt{};
        Mask sat = 0;
        for (Mask m = chosen; m; m &= m - 1) {
            const int u = std::countr_zero(m);
            const int c = std::popcount(in_.adj[u] & chosen);
            if (c > ell_) return res_;
            cnt[u] = static_cast<std::uint8_t>(c);
            if (c == ell_) sat |= bit(u);
        }
        Mask feasible = 0;
        for (Mask m = cand & ~chosen; m; m &= m - 1) {
            const int w = std::countr_zero(m);
            if ((in_.adj[w] & sat) == 0 && std::popcount(in_.adj[w] & chosen) <= ell_) feasible |= bit(w);
        }
        recurse(chosen, feasible, sat, std::popcount(chosen), cnt);
        return res_;
    }

private:
    int residual_bound(Mask chosen, Mask cand, Mask sat, const std::array<std::uint8_t, 64>& cnt) const {
        int bound = 0;
        Mask rest = cand;
        for (Mask m = chosen & ~sat; m && rest; m &= m - 1) {
            const int u = std::countr_zero(m);
            const Mask near = rest & in_.adj[u];
            const int budget = ell_ - cnt[u];
            if (std::popcount(near) > budget) {
                bound += budget;
                rest &= ~near;
            }
        }
        return bound + clique_cover_bound(in_, rest, ell_ + 1);
    }

    void record(Mask chosen, int size) {
        if (collect_) {
            if (size > res_.best) {
                res_.best = size;
                res_.optima.clear();
            }
            if (size == res_.best) res_.optima.push_back(chosen);
        } else if (size > res_.best) {
            res_.best = size;
            res_.best_set = chosen;
            res_.found = true;
        }
    }

    void recurse(Mask chosen, Mask cand, Mask sat, int size, const std::array<std::uint8_t, 64>& cnt) {
        if (res_.aborted) return;
        if (limit_ != 0 && res_.nodes >= limit_) {
            res_.aborted = true;
            return;
        }
        ++res_.nodes;
        if (cand == 0) {
            record(chosen, size);
            return;
        }
        const int ub = size + residual_bound(chosen, cand, sat, cnt);
        if (collect_ ? ub < res_.best : ub <= res_.best) return;

        const int v = std::countr_zero(cand);
        {
            const Mask chosen2 = chosen | bit(v);
            Mask cand2 = cand & ~bit(v);
            Mask sat2 = sat;
            auto cnt2 = cnt;
            const Mask nb = in_.adj[v] & chosen;
            cnt2[v] = static_cast<std::uint8_t>(std::popcount(nb));
            for (Mask m = nb; m; m &= m - 1) {
                const int u = std::countr_zero(m);
                if (++cnt2[u] == ell_) {
                    sat2 |= bit(u);
                    cand2 &= ~in_.adj[u];
                }
            }
            if (cnt2[v] == ell_) {
                sat2 |= bit(v);
                cand2 &= ~in_.adj[v];
            }
            for (Mask m = cand2 & in_.adj[v]; m; m &= m - 1) {
                const int w = std::countr_zero(m);
                if (std::popcount(in_.adj[w] & chosen2) > ell_) cand2 &= ~bit(w);
            }
            recurse(chosen2, cand2, sat2, size + 1, cnt2);
        }
        recurse(chosen, cand & ~bit(v), sat, size, cnt);
    }

    const Instance& in_;
    int ell_;
    bool collect_;
    std::uint64_t limit_;
    SubproblemResult res_;
};

// Subsets of diagonals whose crossing graph is a forest.
class AcyclicSearch {
public:
    AcyclicSearch(const Instance& in, int incumbent, std::uint64_t node_limit) : in_(in), limit_(node_limit) {
        res_.best = incumbent;
    }

    SubproblemResult run(Mask chosen, Mask cand) {
        std::array<std::int8_t, 64> comp{};
        comp.fill(-1);
        Mask placed = 0;
        for (Mask m = chosen; m; m &= m - 1) {
            const int v = std::countr_zero(m);
            if (!joinable(v, placed, comp)) return res_;
            join(v, placed, comp);
            placed |= bit(v);
        }
        Mask feasible = 0;
        for (Mask m = cand & ~chosen; m; m &= m - 1) {
            const int w = std::countr_zero(m);
            if (joinable(w, chosen, comp)) feasible |= bit(w);
        }
        recurse(chosen, feasible, std::popcount(chosen), comp);
        return res_;
    }

private:
    // v's chosen neighbours must lie in pairwise distinct trees
    bool joinable(int v, Mask chosen, const std::array<std::int8_t, 64>& comp) const {
        std::uint64_t seen = 0;
        for (Mask m = in_.adj[v] & chosen; m; m &= m - 1) {
            const int c = comp[std::countr_zero(m)];
            if (seen & bit(c)) return false;
            seen |= bit(c);
        }
        return true;
    }

    void join(int v, Mask chosen, std::array<std::int8_t, 64>& comp) const {
        std::uint64_t merged = 0;
        for (Mask m = in_.adj[v] & chosen; m; m &= m - 1) merged |= bit(comp[std::countr_zero(m)]);
        comp[v] = static_cast<std::int8_t>(v);
        for (Mask m = chosen; m; m &= m - 1) {
            const int u = std::countr_zero(m);
            if (merged & bit(comp[u])) comp[u] = static_cast<std::int8_t>(v);
        }
    }

    void recurse(Mask chosen, Mask cand, int size, const std::array<std::int8_t, 64>& comp) {
        if (res_.aborted) return;
        if (limit_ != 0 && res_.nodes >= limit_) {
            res_.aborted = true;
            return;
        }
        ++res_.nodes;
        if (cand == 0) {
            if (size > res_.best) {
                res_.best = size;
                res_.best_set = chosen;
                res_.found = true;
            }
            return;
        }
        if (size + clique_cover_bound(in_, cand, 2) <= res_.best) return;

        const int v = std::countr_zero(cand);
        {
            auto comp2 = comp;
            join(v, chosen, comp2);
            const Mask chosen2 = chosen | bit(v);
            Mask cand2 = cand & ~bit(v);
            // joining v can merge trees, so candidates away from v may close a cycle too
            for (Mask m = cand2; m; m &= m - 1) {
                const int w = std::countr_zero(m);
                if (!joinable(w, chosen2, comp2)) cand2 &= ~bit(w);
            }
            recurse(chosen2, cand2, size + 1, comp2);
        }
        recurse(chosen, cand & ~bit(v), size, comp);
    }

    const Instance& in_;
    std::uint64_t limit_;
    SubproblemResult res_;
};

// Root split: subproblem L fixes {0, L} and excludes shorter diagonals.
struct RootSplit {
    std::vector<Mask> chosen;
    std::vector<Mask> cand;
};

RootSplit root_split(const Instance& in) {
    RootSplit split;
    for (int len = 2; len <= in.n / 2; ++len) {
        const int first = in.first_of_length(len);
        if (first < 0) continue;
        split.chosen.push_back(bit(first));
        split.cand.push_back(in.at_least_length(len) & ~bit(first));
    }
    return split;
}

unsigned resolve_threads(const SearchBudget& budget) {
    return budget.threads != 0 ? budget.threads : worker_count();
}

bool lex_less(const ConvexGraph& a, const ConvexGraph& b) {
    return std::lexicographical_compare(a.edges().begin(), a.edges().end(), b.edges().begin(), b.edges().end());
}

void check_search_args(int ell, int n) {
    if (n < 3) throw InputError("e_l(n) needs n >= 3");
    if (ell < 0) throw InputError("e_l(n) needs l >= 0");
}

ConvexGraph graph_from_list(int n, std::initializer_list<std::pair<int, int>> pairs) {
    std::vector<Edge> edges;
    for (auto [a, b] : pairs) edges.push_back({a, b});
    return ConvexGraph(n, std::move(edges));
}

}  // namespace

std::string_view to_string(EmaxMethod m) {
    switch (m) {
        case EmaxMethod::ExactSearch: return "exact-search";
        case EmaxMethod::ClosedForm: return "closed-form";
        case EmaxMethod::CompositionLower: return "composition-lower";
        case EmaxMethod::AnalyticUpper: return "analytic-upper";
        case EmaxMethod::AcyclicSearch: return "acyclic-search";
    }
    return "unknown";
}

void validate_record(const EdgeMaxRecord& rec) {
    if (rec.method == EmaxMethod::ClosedForm && rec.ell > 4)
        throw std::logic_error("closed-form record with l > 4");
    if (!rec.certificate) return;
    const ConvexGraph& g = *rec.certificate;
    if (g.n() != rec.n) throw std::logic_error("certificate has the wrong vertex count");
    if (g.allow_sides()) throw std::logic_error("certificate must be a subgraph of D_n");
    if (rec.method == EmaxMethod::AcyclicSearch) {
        if (!has_acyclic_crossing_graph(g)) throw std::logic_error("certificate crossing graph has a cycle");
    } else if (local_crossing_number(g) > rec.ell) {
        throw std::logic_error("certificate exceeds the local crossing budget");
    }
    if (Rational(static_cast<std::int64_t>(g.edge_count())) != rec.value)
        throw std::logic_error("certificate edge count differs from the recorded value");
}

EdgeMaxRecord emax_exact(int ell, int n, const SearchBudget& budget) {
    check_search_args(ell, n);
    EdgeMaxRecord rec;
    rec.ell = ell;
    rec.n = n;
    rec.method = EmaxMethod::ExactSearch;

    if (n > kMaxSearchVertices) {
        EdgeMaxRecord lower = emax_composition_bound(ell, n);
        rec.value = lower.value;
        rec.certificate = lower.certificate;
        rec.status = ResultStatus::Inexact;
        return rec;
    }

    const Instance in = make_instance(n);
    ConvexGraph incumbent(n, {});
    if (budget.warm_start) incumbent = *emax_composition_bound(ell, n, false).certificate;
    const int start = static_cast<int>(incumbent.edge_count());

    const RootSplit split = root_split(in);
    std::vector<SubproblemResult> results(split.chosen.size());
    parallel_for(results.size(), resolve_threads(budget), [&](std::size_t i) {
        LocalCrossingSearch search(in, ell, start, false, budget.max_nodes);
        results[i] = search.run(split.chosen[i], split.cand[i]);
    });

    int best = start;
    ConvexGraph certificate = canonical_form(incumbent);
    for (const auto& r : results) {
        rec.nodes += r.nodes;
        if (r.aborted) rec.status = ResultStatus::Inexact;
        if (!r.found) continue;
        ConvexGraph g = canonical_form(in.graph_of(r.best_set));
        if (r.best > best || (r.best == best && lex_less(g, certificate))) {
            best = r.best;
            certificate = std::move(g);
        }
    }
    rec.value = best;
    rec.certificate = std::move(certificate);
    validate_record(rec);
    return rec;
}

std::vector<ConvexGraph> emax_optima(int ell, int n, const SearchBudget& budget) {
    check_search_args(ell, n);
    if (n > kMaxSearchVertices) throw Unsupported("optimum enumeration is limited to n <= 12");
    const Instance in = make_instance(n);
    const int start = budget.warm_start ? static_cast<int>(emax_composition_bound(ell, n, false).value) : 0;

    const RootSplit split = root_split(in);
    std::vector<SubproblemResult> results(split.chosen.size());
    parallel_for(results.size(), resolve_threads(budget), [&](std::size_t i) {
        LocalCrossingSearch search(in, ell, start, true, budget.max_nodes);
        results[i] = search.run(split.chosen[i], split.cand[i]);
    });

    int best = 0;
    for (const auto& r : results) {
        if (r.aborted) throw std::runtime_error("optimum enumeration exceeded its node budget");
        if (!r.optima.empty()) best = std::max(best, r.best);
    }
    std::vector<ConvexGraph> classes;
    if (best == 0) {
        classes.push_back(ConvexGraph(n, {}));
        return classes;
    }
    for (const auto& r : results)
        if (r.best == best)
            for (Mask m : r.optima) classes.push_back(canonical_form(in.graph_of(m)));
    std::sort(classes.begin(), classes.end(), lex_less);
    classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
    return classes;
}

Rational ClosedForm::delta(int n) const {
    switch (ell) {
        case 0: return 0;
        case 1: return n % 2 == 0 ? Rational(1, 2) : Rational(0);
        case 2: return n % 3 == 2 ? Rational(1) : Rational(0);
        case 3: {
            static const std::array<Rational, 4> d{Rational(-1, 4), Rational(1, 2), Rational(5, 4), Rational(0)};
            return d[n % 4];
        }
        case 4: {
            static const std::array<Rational, 4> d{Rational(1, 2), Rational(0), Rational(3, 2), Rational(1)};
            return d[n % 4];
        }
    }
    throw Unsupported("no closed form for l = " + std::to_string(ell));
}

ClosedForm closed_form(int ell) {
    static const std::array<Rational, 5> slopes{Rational(1), Rational(3, 2), Rational(2), Rational(9, 4),
                                                Rational(5, 2)};
    if (ell < 0) throw InputError("l must be >= 0");
    if (ell > 4) throw Unsupported("no proven closed form for e_l(n) with l = " + std::to_string(ell));
    return ClosedForm{ell, slopes[ell]};
}

Rational emax_closed_form(int ell, int n) {
    const ClosedForm cf = closed_form(ell);
    if (n < std::max(3, ell)) throw InputError("closed form needs n >= max(3, l)");
    const Rational v = cf.value(n);
    if (!is_integer(v)) throw std::logic_error("closed form produced a non-integer: " + to_string(v));
    return v;
}

int ceil_two_sqrt(int ell) {
    if (ell < 0) throw InputError("l must be >= 0");
    const auto four = static_cast<std::uint64_t>(4) * static_cast<std::uint64_t>(ell);
    auto s = static_cast<int>(isqrt(four));
    if (static_cast<std::uint64_t>(s) * static_cast<std::uint64_t>(s) < four) ++s;
    return s;
}

Rational c_ell(int ell) {
    if (ell < 0) throw InputError("l must be >= 0");
    if (ell == 0) return 1;
    const int s = ceil_two_sqrt(ell);
    const Rational half(1, 2);
    if (s % 2 == 0) {
        if (s * s - s <= 4 * ell + 2) return half + Rational(s, 4) + Rational(ell, s);
        return half + Rational(s, 4) + Rational(ell - 1, s);
    }
    if (s * s < 4 * ell + 5) return half + Rational(s, 2);
    return half + Rational(s, 4) + Rational(4 * ell - 3, 4 * s);
}

EdgeMaxRecord emax_composition_bound(int ell, int n, bool use_special_remainders) {
    check_search_args(ell, n);
    const int s = ceil_two_sqrt(ell);
    const int nprime = 2 + std::max(1, s);
    const int block = nprime - 2;

    ConvexGraph unit = nprime == 3 ? complete_convex(3, false)
                                   : reduced_complete(nprime, (block * block) / 4 - ell);

    CompositionSpec spec;
    std::optional<ConvexGraph> remainder;
    int rest = n;
    if (use_special_remainders && ell == 4) {
        static const std::array<int, 4> size{8, 5, 6, 7};
        const int rsize = size[n % 4];
        if (n >= rsize) {
            switch (n % 4) {
                case 0: remainder = graph_s8(); break;
                case 1: remainder = complete_convex(5, false); break;
                case 2: remainder = complete_convex(6, false); break;
                default: remainder = graph_s7(); break;
            }
            rest = n - rsize;
        }
    }
    if (!remainder) {
        const int r = 2 + (n - 2) % block;
        if (r > 2) remainder = complete_convex(r, false);
        rest = n - r;
    }
    for (int c = 0; c < rest / block; ++c) spec.parts.push_back(unit);
    if (remainder) spec.parts.push_back(*remainder);

    EdgeMaxRecord rec;
    rec.ell = ell;
    rec.n = n;
    rec.method = EmaxMethod::CompositionLower;
    rec.certificate = parallel_compose(spec);
    rec.value = static_cast<std::int64_t>(rec.certificate->edge_count());
    validate_record(rec);
    return rec;
}

Rational sqrt_upper_approx(std::int64_t num, std::int64_t den, std::int64_t max_den) {
    if (num < 0 || den <= 0 || max_den < 1) throw InputError("sqrt_upper_approx needs num >= 0, den > 0");
    using Wide = __int128;
    // p/q >= sqrt(num/den)  <=>  p^2 den >= num q^2
    auto above = [&](Wide p, Wide q) { return p * p * den >= static_cast<Wide>(num) * q * q; };

    const auto fl = static_cast<std::int64_t>(isqrt(static_cast<std::uint64_t>(num / den)));
    if (static_cast<Wide>(fl) * fl * den == num) return Rational(fl);
    std::int64_t lo_p = fl, lo_q = 1;
    std::int64_t hi_p = fl + 1, hi_q = 1;

    // Stern-Brocot descent with lo < root <= hi, batching repeated moves.
    while (true) {
        if (lo_q + hi_q > max_den) break;
        if (above(lo_p + hi_p, lo_q + hi_q)) {
            // move hi toward lo as far as possible
            std::int64_t lo_k = 1, hi_k = (max_den - hi_q) / lo_q;
            while (lo_k < hi_k) {
                const std::int64_t mid = lo_k + (hi_k - lo_k + 1) / 2;
                if (above(hi_p + mid * lo_p, hi_q + mid * lo_q)) lo_k = mid;
                else hi_k = mid - 1;
            }
            hi_p += lo_k * lo_p;
            hi_q += lo_k * lo_q;
        } else {
            std::int64_t lo_k = 1, hi_k = (max_den - lo_q) / hi_q;
            while (lo_k < hi_k) {
                const std::int64_t mid = lo_k + (hi_k - lo_k + 1) / 2;
                if (!above(lo_p + mid * hi_p, lo_q + mid * hi_q)) lo_k = mid;
                else hi_k = mid - 1;
            }
            lo_p += lo_k * hi_p;
            lo_q += lo_k * hi_q;
        }
    }
    return Rational(hi_p, hi_q);
}

Rational analytic_upper(int ell, int n) {
    if (ell < 0 || n < 3) throw InputError("analytic_upper needs l >= 0 and n >= 3");
    return sqrt_upper_approx(27LL * ell, 2, 1000000) * n;
}

EdgeMaxRecord estar_acyclic(int n, const SearchBudget& budget) {
    if (n < 4) throw InputError("e*(n) needs n >= 4");
    EdgeMaxRecord rec;
    rec.ell = 0;
    rec.n = n;
    rec.method = EmaxMethod::AcyclicSearch;
    if (n > kMaxAcyclicSearchVertices) {
        rec.certificate = lemma36_construction(n);
        rec.value = static_cast<std::int64_t>(rec.certificate->edge_count());
        rec.status = ResultStatus::Inexact;
        return rec;
    }

    const Instance in = make_instance(n);
    ConvexGraph incumbent(n, {});
    if (budget.warm_start) incumbent = lemma36_construction(n);
    const int start = static_cast<int>(incumbent.edge_count());

    const RootSplit split = root_split(in);
    std::vector<SubproblemResult> results(split.chosen.size());
    parallel_for(results.size(), resolve_threads(budget), [&](std::size_t i) {
        AcyclicSearch search(in, start, budget.max_nodes);
        results[i] = search.run(split.chosen[i], split.cand[i]);
    });

    int best = start;
    ConvexGraph certificate = canonical_form(incumbent);
    for (const auto& r : results) {
        rec.nodes += r.nodes;
        if (r.aborted) rec.status = ResultStatus::Inexact;
        if (!r.found) continue;
        ConvexGraph g = canonical_form(in.graph_of(r.best_set));
        if (r.best > best || (r.best == best && lex_less(g, certificate))) {
            best = r.best;
            certificate = std::move(g);
        }
    }
    rec.value = best;
    rec.certificate = std::move(certificate);
    validate_record(rec);
    return rec;
}

MEllExploration m_ell_explore(int ell, int n_max, const SearchBudget& budget) {
    if (ell < 0 || n_max < 3) throw InputError("m_ell_explore needs l >= 0 and n_max >= 3");
    MEllExploration out;
    for (int n = 3; n <= n_max; ++n) {
        std::int64_t e = 0;
        if (n <= 10) {
            const EdgeMaxRecord rec = emax_exact(ell, n, budget);
            if (rec.status != ResultStatus::Exact) throw std::runtime_error("search budget exceeded in m_ell_explore");
            e = to_int64(rec.value);
        } else if (ell <= 4) {
            e = to_int64(emax_closed_form(ell, n));
            out.all_searched = false;
        } else {
            throw Unsupported("no exact e_l(n) available for l > 4 and n > 10");
        }
        out.e_values.push_back(e);
        const Rational ratio(e + 1, n - 2);
        if (out.argmax_n == 0 || ratio > out.value) {
            out.value = ratio;
            out.argmax_n = n;
        }
    }
    return out;
}

const ConvexGraph& graph_s7() {
    static const ConvexGraph g = graph_from_list(
        7, {{0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {2, 4}, {3, 5}, {4, 6}});
    return g;
}

const ConvexGraph& graph_s7_prime() {
    static const ConvexGraph g = graph_from_list(
        7, {{0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 5}, {1, 6}, {2, 4}, {2, 5}, {3, 5}, {4, 6}});
    return g;
}

const ConvexGraph& graph_s8() {
    static const ConvexGraph g = graph_from_list(8, {{0, 2}, {0, 3}, {0, 4}, {0, 6}, {1, 3}, {1, 4}, {1, 6},
                                                     {1, 7}, {2, 4}, {3, 5}, {3, 6}, {4, 6}, {5, 7}});
    return g;
}

}  // namespace bookx
