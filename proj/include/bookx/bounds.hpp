#ifndef BOOKX_BOUNDS_HPP
#define BOOKX_BOUNDS_HPP

#include <array>
#include <cstdint>
#include <string>

#include "bookx/convex_graph.hpp"
#include "bookx/rational.hpp"

namespace bookx {

/// e_l(n) as used by the bound engine: C(n,2) - n when lc(D_n) <= l, else the
/// l <= 4 closed form.
Rational emax_for_bounds(int ell, int n);

/// m e(H) - sum_{l<m} e_l(n); a lower bound on cr(H) for H in D_n. m <= 5.
Rational crossing_lower_per_graph(const ConvexGraph& h, int m);

/// L_{k,n}(m) = (m/2) n (n-3) - k sum_{l<m} e_l(n), for 0 <= m <= 5.
Rational l_bound(int k, int n, int m);

struct BestM {
    int m = 0;
    /// e_4(n) < n(n-3)/(2k): the unrestricted optimum would need e_5.
    bool cap_active = false;
};

/// Smallest m <= 4 with e_m(n) >= n(n-3)/(2k), else 5 with the cap flag.
BestM best_m(int k, int n);

/// beta of the piecewise bound: -1 (k even, 4 | n), 1 (k odd, 4 | n-2), else 0.
int theorem24_beta(int k, int n);

struct PiecewiseBound {
    Rational value;
    /// 1..5, or 0 when vacuous (k < 3 or n <= 2k).
    int branch = 0;
    int beta = 0;
    bool vacuous = false;
};

/// The five-branch lower bound on nu_k(K_n), evaluated as printed.
PiecewiseBound theorem24_bound(int k, int n);

/// nu_k(K_n) = (n-3)(n-2k)/2 for 2k < n <= 3k.
std::int64_t theorem25_exact(int k, int n);

/// 8000(4107k^2-5416k+1309) / (37(111k-17)(111k-77)(37k-19)(3k-1)), k >= 3.
Rational theorem12_formula(int k);

/// Limit of Z_k(n)/C(n,4): (2/k^2)(1 - 1/(2k)).
Rational zk_asymptotic_coefficient(int k);

/// max_{1<=m<=5} L_{k,n'}(m) / C(n',4), requires n' > 2k.
Rational asymptotic_coefficient(int k, int nprime);

struct AsymptoticBest {
    Rational coefficient;
    int nprime = 0;
    int m = 0;
};

/// Scans n' in (lo, hi]; ties go to the smallest n', then the smallest m.
/// lo < 0 or hi < 0 select the default interval (2k, 8k].
AsymptoticBest best_asymptotic_coefficient(int k, int lo = -1, int hi = -1);

struct BoundReport {
    int k = 0;
    int n = 0;
    std::array<Rational, 6> l_values;
    BestM chosen;
    Rational best_rational;
    /// ceil(best_rational), clamped at 0.
    BigInt best_bound;
    PiecewiseBound piecewise;
};

BoundReport bound_report(int k, int n);

/// Cells of the known-values table that come from the 2k < n <= 3k result
/// rather than earlier computations.
bool table1_shaded(int k, int n);

/// CSV text for table 1, 2 or 3.
std::string emit_table(int which);

}  // namespace bookx

#endif  // BOOKX_BOUNDS_HPP
