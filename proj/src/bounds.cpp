#include "bookx/bounds.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "bookx/emax.hpp"
#include "bookx/error.hpp"
#include "bookx/zk.hpp"

namespace bookx {

namespace {

void check_m(int m) {
    if (m < 0) throw InputError("m must be >= 0");
    if (m > 5) throw Unsupported("m > 5 needs e_5(n), which is unknown");
}

Rational emax_sum(int n, int m) {
    Rational sum = 0;
    for (int ell = 0; ell < m; ++ell) sum += emax_for_bounds(ell, n);
    return sum;
}

Rational delta_sum(int n, int upto) {
    Rational sum = 0;
    for (int ell = 1; ell <= upto; ++ell) sum += closed_form(ell).delta(n);
    return sum;
}

}  // namespace

Rational emax_for_bounds(int ell, int n) {
    if (n < 3) throw InputError("e_l(n) needs n >= 3");
    // D_n itself qualifies; this also covers n = l = 4, where the closed form overshoots
    if (((n - 2) * (n - 2)) / 4 <= ell) return binomial(n, 2) - n;
    return emax_closed_form(ell, n);
}

Rational crossing_lower_per_graph(const ConvexGraph& h, int m) {
    check_m(m);
    if (h.allow_sides()) throw InputError("counting bound applies to subgraphs of D_n");
    return Rational(m) * static_cast<std::int64_t>(h.edge_count()) - emax_sum(h.n(), m);
}

Rational l_bound(int k, int n, int m) {
    if (k < 1 || n < 3) throw InputError("L_{k,n}(m) needs k >= 1 and n >= 3");
    check_m(m);
    return Rational(m * static_cast<std::int64_t>(n) * (n - 3), 2) - Rational(k) * emax_sum(n, m);
}

BestM best_m(int k, int n) {
    if (k < 1 || n < 3) throw InputError("best_m needs k >= 1 and n >= 3");
    const Rational threshold(static_cast<std::int64_t>(n) * (n - 3), 2 * k);
    for (int m = 0; m <= 4; ++m)
        if (emax_for_bounds(m, n) >= threshold) return {m, false};
    return {5, true};
}

int theorem24_beta(int k, int n) {
    if (k % 2 == 0 && n % 4 == 0) return -1;
    if (k % 2 == 1 && (n - 2) % 4 == 0) return 1;
    return 0;
}

PiecewiseBound theorem24_bound(int k, int n) {
    PiecewiseBound out;
    if (k < 3 || n <= 2 * k) {
        out.vacuous = true;
        out.value = 0;
        return out;
    }
    out.beta = theorem24_beta(k, n);
    const Rational a(n - 3);
    if (n <= 3 * k) {
        out.branch = 1;
        out.value = Rational(1, 2) * a * (n - 2 * k);
    } else if (n <= 4 * k) {
        out.branch = 2;
        out.value = a * (Rational(n) - Rational(5 * k, 2)) - Rational(k) * delta_sum(n, 1);
    } else if (n <= (9 * k) / 2 + out.beta) {
        out.branch = 3;
        out.value = Rational(3, 2) * a * (n - 3 * k) - Rational(k) * delta_sum(n, 2);
    } else if (n <= 5 * k) {
        out.branch = 4;
        out.value = 2 * a * (Rational(n) - Rational(27 * k, 8)) - Rational(k) * delta_sum(n, 3);
    } else {
        out.branch = 5;
        out.value = Rational(5, 2) * a * (Rational(n) - Rational(37 * k, 10)) - Rational(k) * delta_sum(n, 4);
    }
    return out;
}

std::int64_t theorem25_exact(int k, int n) {
    if (k < 1 || !(2 * k < n && n <= 3 * k)) throw InputError("exact value needs 2k < n <= 3k");
    const std::int64_t v = to_int64(Rational(static_cast<std::int64_t>(n - 3) * (n - 2 * k), 2));
    if (v != zk_value(n, k)) throw std::logic_error("exact value disagrees with Z_k(n)");
    return v;
}

Rational theorem12_formula(int k) {
    if (k < 3) throw InputError("formula needs k >= 3");
    const BigInt kk = k;
    const BigInt num = 8000 * (4107 * kk * kk - 5416 * kk + 1309);
    const BigInt den = 37 * (111 * kk - 17) * (111 * kk - 77) * (37 * kk - 19) * (3 * kk - 1);
    return Rational(num, den);
}

Rational zk_asymptotic_coefficient(int k) {
    if (k < 1) throw InputError("k must be >= 1");
    return Rational(2, k * k) * (1 - Rational(1, 2 * k));
}

Rational asymptotic_coefficient(int k, int nprime) {
    if (k < 1) throw InputError("k must be >= 1");
    if (nprime <= 2 * k || nprime < 4) throw InputError("n' must exceed 2k; the bound is vacuous otherwise");
    Rational best = l_bound(k, nprime, 1);
    for (int m = 2; m <= 5; ++m) best = std::max(best, l_bound(k, nprime, m));
    return best / Rational(big_binomial(nprime, 4));
}

AsymptoticBest best_asymptotic_coefficient(int k, int lo, int hi) {
    if (k < 1) throw InputError("k must be >= 1");
    if (lo < 0) lo = 2 * k;
    if (hi < 0) hi = 8 * k;
    lo = std::max({lo, 2 * k, 3});
    if (hi <= lo) throw InputError("empty n' interval");
    AsymptoticBest best;
    for (int nprime = lo + 1; nprime <= hi; ++nprime) {
        const Rational choose4(big_binomial(nprime, 4));
        for (int m = 1; m <= 5; ++m) {
            const Rational c = l_bound(k, nprime, m) / choose4;
            if (best.nprime == 0 || c > best.coefficient) best = {c, nprime, m};
        }
    }
    return best;
}

BoundReport bound_report(int k, int n) {
    if (k < 1 || n < 3) throw InputError("bound report needs k >= 1 and n >= 3");
    BoundReport rep;
    rep.k = k;
    rep.n = n;
    for (int m = 0; m <= 5; ++m) rep.l_values[m] = l_bound(k, n, m);
    rep.chosen = best_m(k, n);
    rep.best_rational = *std::max_element(rep.l_values.begin(), rep.l_values.end());
    rep.best_bound = std::max(BigInt(0), ceil(rep.best_rational));
    rep.piecewise = theorem24_bound(k, n);
    return rep;
}

bool table1_shaded(int k, int n) {
    // nu_5(K_11) and nu_5(K_12) were known before the 2k < n <= 3k result
    return k >= 5 && 2 * k < n && n <= 3 * k && !(k == 5 && n <= 12);
}

std::string emit_table(int which) {
    std::ostringstream out;
    switch (which) {
        case 1: {
            // span of each printed row
            static const std::array<std::pair<int, int>, 6> rows{
                {{2, 22}, {3, 15}, {4, 13}, {5, 15}, {6, 18}, {7, 21}}};
            out << "k,n,value,shaded,source\n";
            for (auto [k, last] : rows)
                for (int n = 5; n <= last; ++n) {
                    const bool shaded = table1_shaded(k, n);
                    std::int64_t v = 0;
                    std::string source;
                    if (shaded) {
                        v = theorem25_exact(k, n);
                        source = "exact-2k<n<=3k";
                    } else {
                        v = zk_value(n, k);
                        source = k == 2 ? "zk-two-page" : "zk";
                    }
                    out << k << ',' << n << ',' << v << ',' << (shaded ? 1 : 0) << ',' << source << '\n';
                }
            break;
        }
        case 2: {
            out << "k,new_lower_bound,upper_bound,ratio,lower_exact,upper_exact\n";
            for (int k = 14; k <= 20; ++k) {
                const Rational lower = best_asymptotic_coefficient(k).coefficient;
                const Rational upper = zk_asymptotic_coefficient(k);
                out << k << ',' << to_scientific(lower, 5, Rounding::Truncate) << ','
                    << to_scientific(upper, 5, Rounding::Truncate) << ','
                    << to_fixed(lower / upper, 4, Rounding::HalfEven) << ',' << to_string(lower) << ','
                    << to_string(upper) << '\n';
            }
            break;
        }
        case 3: {
            out << "k,coefficient,nprime,m,valid_for_n_at_least,n_111k_over_20\n";
            for (int k = 14; k <= 20; ++k) {
                const AsymptoticBest b = best_asymptotic_coefficient(k);
                out << k << ',' << to_string(b.coefficient) << ',' << b.nprime << ',' << b.m << ',' << b.nprime << ','
                    << (111 * k) / 20 << '\n';
            }
            break;
        }
        default: throw InputError("table must be 1, 2 or 3");
    }
    return out.str();
}

}  // namespace bookx
