#include "doctest.h"

#include <random>

#include "bookx/bounds.hpp"
#include "bookx/emax.hpp"
#include "bookx/error.hpp"
#include "bookx/zk.hpp"
#include "oracles.hpp"

using namespace bookx;

TEST_CASE("e_l values used by the bounds match exhaustive search") {
    for (int n = 3; n <= 8; ++n)
        for (int ell = 0; ell <= 4; ++ell) CHECK(emax_for_bounds(ell, n) == oracle::max_local_crossing(n, ell).best);
}

TEST_CASE("per-graph counting inequality") {
    const ConvexGraph d7 = complete_convex(7, false);
    CHECK(crossing_lower_per_graph(d7, 0) == 0);
    CHECK(crossing_lower_per_graph(d7, 1) == 10);
    std::vector<oracle::Pair> pairs;
    for (Edge e : d7.edges()) pairs.push_back({e.u, e.v});
    CHECK(Rational(oracle::crossings(pairs)) >= 10);
    CHECK_THROWS_AS(crossing_lower_per_graph(d7, 6), Unsupported);

    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 5 + static_cast<int>(rng() % 6);
        std::vector<Edge> edges;
        for (Edge e : complete_convex(n, false).edges())
            if (rng() % 3 != 0) edges.push_back(e);
        const ConvexGraph h(n, edges);
        std::vector<oracle::Pair> p;
        for (Edge e : h.edges()) p.push_back({e.u, e.v});
        for (int m = 0; m <= 5; ++m) CHECK(Rational(oracle::crossings(p)) >= crossing_lower_per_graph(h, m));
    }
}

TEST_CASE("L_{k,n}(m)") {
    for (int k = 1; k <= 10; ++k)
        for (int n = 4; n <= 40; ++n) {
            CHECK(l_bound(k, n, 0) == 0);
            CHECK(l_bound(k, n, 1) == Rational(static_cast<std::int64_t>(n - 3) * (n - 2 * k), 2));
        }
    CHECK(l_bound(14, 76, 5) == 4406);
    CHECK(emax_for_bounds(0, 76) == 73);
    CHECK(emax_for_bounds(1, 76) == 110);
    CHECK(emax_for_bounds(2, 76) == 146);
    CHECK(emax_for_bounds(3, 76) == 164);
    CHECK(emax_for_bounds(4, 76) == 183);
    CHECK_THROWS_AS(l_bound(3, 10, 6), Unsupported);
}

TEST_CASE("best m") {
    for (int k = 3; k <= 20; ++k) {
        for (int n = 2 * k + 1; n <= 3 * k; ++n) CHECK(best_m(k, n).m == 1);
        for (int n = 3 * k + 1; n <= 4 * k; ++n) CHECK(best_m(k, n).m == 2);
    }
    const BestM b = best_m(14, 70);
    CHECK(b.m <= 4);
    CHECK_FALSE(b.cap_active);
    CHECK(best_m(3, 200).cap_active);
    // the chosen m maximizes L among m <= 5 whenever the cap is inactive
    for (int k = 3; k <= 12; ++k)
        for (int n = 2 * k + 1; n <= 8 * k; ++n) {
            const BestM c = best_m(k, n);
            if (c.cap_active) continue;
            for (int m = 0; m <= 5; ++m) CHECK(l_bound(k, n, c.m) >= l_bound(k, n, m));
        }
}

TEST_CASE("piecewise bound") {
    CHECK(theorem24_bound(5, 13).value == 15);
    CHECK(theorem24_bound(5, 13).branch == 1);
    CHECK(theorem24_bound(6, 16).value == 26);
    CHECK(theorem24_bound(7, 21).value == 63);
    CHECK(theorem24_bound(2, 10).vacuous);
    CHECK(theorem24_bound(5, 10).vacuous);
    CHECK(theorem24_bound(5, 10).value == 0);
    CHECK(theorem24_beta(4, 16) == -1);
    CHECK(theorem24_beta(5, 18) == 1);
    CHECK(theorem24_beta(5, 17) == 0);

    // each printed branch equals the best L over m <= 5
    for (int k = 3; k < 40; ++k)
        for (int n = 2 * k + 1; n < 12 * k; ++n) {
            Rational best = l_bound(k, n, 0);
            for (int m = 1; m <= 5; ++m) best = std::max(best, l_bound(k, n, m));
            CAPTURE(k);
            CAPTURE(n);
            REQUIRE(theorem24_bound(k, n).value == best);
        }
}

TEST_CASE("exact values for 2k < n <= 3k") {
    CHECK(theorem25_exact(5, 14) == 22);
    CHECK(theorem25_exact(6, 18) == 45);
    for (int k = 1; k <= 30; ++k) {
        CHECK(theorem25_exact(k, 3 * k) == static_cast<std::int64_t>(3 * k - 3) * k / 2);
        CHECK(theorem25_exact(k, 3 * k) == zk_value(3 * k, k));
        if (k >= 3)
            for (int n = 2 * k + 1; n <= 3 * k; ++n) CHECK(theorem24_bound(k, n).value == theorem25_exact(k, n));
    }
    CHECK_THROWS_AS(theorem25_exact(5, 16), InputError);
}

TEST_CASE("asymptotic coefficients") {
    CHECK(theorem12_formula(14) == Rational(834808000, 245494885781LL));
    CHECK(theorem12_formula(14) == Rational(BigInt(5843656000LL), BigInt(1718464200467LL)));
    CHECK(theorem12_formula(3) > 0);
    CHECK(theorem12_formula(3) < zk_asymptotic_coefficient(3));
    CHECK(zk_asymptotic_coefficient(3) == Rational(2, 9) * Rational(5, 6));

    CHECK(asymptotic_coefficient(14, 76) == Rational(4406, 1282975));
    CHECK_THROWS_AS(asymptotic_coefficient(14, 28), InputError);

    const AsymptoticBest b14 = best_asymptotic_coefficient(14, 28, 112);
    CHECK(b14.coefficient == Rational(4406, 1282975));
    CHECK(b14.nprime == 76);
    CHECK(b14.m == 5);
    CHECK(best_asymptotic_coefficient(15).coefficient == Rational(640, 214389));
    CHECK(best_asymptotic_coefficient(18).coefficient == Rational(8086, 3921225));
    CHECK(best_asymptotic_coefficient(20).coefficient == Rational(85, 51039));

    for (int k = 3; k <= 100; ++k) CHECK(theorem12_formula(k) <= asymptotic_coefficient(k, 111 * k / 20));
}

TEST_CASE("bound report") {
    const BoundReport r = bound_report(5, 13);
    CHECK(r.best_bound == 15);
    CHECK(r.chosen.m == 1);
    CHECK(r.piecewise.value == 15);
    const BoundReport small = bound_report(5, 8);
    CHECK(small.best_bound == 0);
    CHECK(small.piecewise.vacuous);
}

TEST_CASE("decimal renderings") {
    CHECK(to_scientific(Rational(4406, 1282975), 5, Rounding::Truncate) == "3.4342e-3");
    CHECK(to_scientific(zk_asymptotic_coefficient(14), 5, Rounding::Truncate) == "9.8396e-3");
    CHECK(to_scientific(zk_asymptotic_coefficient(20), 5, Rounding::Truncate) == "4.8750e-3");
    CHECK(to_fixed(Rational(4406, 1282975) / zk_asymptotic_coefficient(14), 4, Rounding::HalfEven) == "0.3490");
    CHECK(to_scientific(Rational(125, 100000), 2, Rounding::HalfEven) == "1.2e-3");
    CHECK(to_scientific(Rational(135, 100000), 2, Rounding::HalfEven) == "1.4e-3");
    CHECK(to_fixed(Rational(1, 8), 2, Rounding::HalfEven) == "0.12");
    CHECK(to_fixed(Rational(3, 8), 2, Rounding::HalfEven) == "0.38");
    CHECK(to_scientific(Rational(0), 3, Rounding::Truncate) == "0.00e0");
}
