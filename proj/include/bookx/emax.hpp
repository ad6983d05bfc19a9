#ifndef BOOKX_EMAX_HPP
#define BOOKX_EMAX_HPP

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "bookx/convex_graph.hpp"
#include "bookx/rational.hpp"

namespace bookx {

enum class EmaxMethod { ExactSearch, ClosedForm, CompositionLower, AnalyticUpper, AcyclicSearch };
std::string_view to_string(EmaxMethod m);

enum class ResultStatus { Exact, Inexact };

struct SearchBudget {
    /// Node limit per root subproblem; 0 means unlimited.
    std::uint64_t max_nodes = 0;
    /// 0 selects worker_count().
    unsigned threads = 0;
    /// Seed the incumbent with the composition construction.
    bool warm_start = true;
};

/// Largest instance the bitset search handles (54 diagonals).
inline constexpr int kMaxSearchVertices = 12;

/// e_l(n) or a bound on it, with an optional witnessing graph.
struct EdgeMaxRecord {
    int ell = 0;
    int n = 0;
    Rational value;
    EmaxMethod method = EmaxMethod::ExactSearch;
    ResultStatus status = ResultStatus::Exact;
    std::optional<ConvexGraph> certificate;
    std::uint64_t nodes = 0;
};

/// Re-measures the certificate (vertex count, lc <= ell, edge count == value)
/// and the method rules. Throws std::logic_error on violation.
void validate_record(const EdgeMaxRecord& rec);

/**
 * Maximum edges of a subgraph of D_n with local crossing number <= ell, by
 * branch and bound over diagonals ordered by length. The root is split by the
 * shortest diagonal length in the solution, which fixes {0, L} by rotation.
 * Exceeding the node budget yields status Inexact with the best value found.
 */
EdgeMaxRecord emax_exact(int ell, int n, const SearchBudget& budget = {});

/// Every optimal subgraph for (ell, n), one canonical representative per
/// dihedral class, sorted.
std::vector<ConvexGraph> emax_optima(int ell, int n, const SearchBudget& budget = {});

/// C_l and delta_l(n) of the l <= 4 closed form.
struct ClosedForm {
    int ell = 0;
    Rational c_ell;

    Rational delta(int n) const;
    Rational value(int n) const { return c_ell * (n - 3) + delta(n); }
};

/// Throws Unsupported for ell > 4.
ClosedForm closed_form(int ell);

/// C_l (n-3) + delta_l(n) for 0 <= ell <= 4 and n >= max(3, ell).
Rational emax_closed_form(int ell, int n);

/// Composition lower bound q D_{n',i} (/) R; the value is the measured edge count.
/// With use_special_remainders and ell = 4 the remainder is S_8, D_5, D_6
/// or S_7 according to n mod 4.
EdgeMaxRecord emax_composition_bound(int ell, int n, bool use_special_remainders = true);

/// Slope C_l of the composition bound.
Rational c_ell(int ell);

/// ceil(2 sqrt(ell)) computed in integers.
int ceil_two_sqrt(int ell);

/// Smallest p/q >= sqrt(num/den) with 1 <= q <= max_den.
Rational sqrt_upper_approx(std::int64_t num, std::int64_t den, std::int64_t max_den);

/// sqrt(27 ell / 2) * n, using the rational over-approximation of the root.
Rational analytic_upper(int ell, int n);

/// Maximum edges of a subgraph of D_n whose crossing graph is a forest.
EdgeMaxRecord estar_acyclic(int n, const SearchBudget& budget = {});

inline constexpr int kMaxAcyclicSearchVertices = 9;

/// Exploratory max over 3 <= n <= n_max of (e_l(n)+1)/(n-2).
struct MEllExploration {
    Rational value;
    int argmax_n = 0;
    /// Per-n e_l(n) values used, index 0 is n = 3.
    std::vector<std::int64_t> e_values;
    /// True when every value came from exact search.
    bool all_searched = true;
};

MEllExploration m_ell_explore(int ell, int n_max, const SearchBudget& budget = {});

/// Optimal lc <= 4 subgraphs fixed from emax_optima: the two classes on 7
/// vertices (11 edges) and the smallest class on 8 vertices (13 edges).
const ConvexGraph& graph_s7();
const ConvexGraph& graph_s7_prime();
const ConvexGraph& graph_s8();

}  // namespace bookx

#endif  // BOOKX_EMAX_HPP
