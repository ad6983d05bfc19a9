#include "doctest.h"

#include "bookx/emax.hpp"
#include "bookx/error.hpp"
#include "oracles.hpp"

using namespace bookx;

TEST_CASE("exact search agrees with exhaustive enumeration for n <= 8") {
    for (int n = 3; n <= 8; ++n)
        for (int ell = 0; ell <= 6; ++ell) {
            CAPTURE(n);
            CAPTURE(ell);
            const EdgeMaxRecord r = emax_exact(ell, n);
            CHECK(r.status == ResultStatus::Exact);
            CHECK(r.value == oracle::max_local_crossing(n, ell).best);
            REQUIRE(r.certificate);
            CHECK(local_crossing_number(*r.certificate) <= ell);
            CHECK(canonical_form(*r.certificate) == *r.certificate);
        }
}

TEST_CASE("cold and warm searches agree") {
    SearchBudget cold;
    cold.warm_start = false;
    for (int n = 5; n <= 10; ++n)
        for (int ell = 0; ell <= 4; ++ell) CHECK(emax_exact(ell, n, cold).value == emax_exact(ell, n).value);
}

TEST_CASE("certificates do not depend on the worker count") {
    SearchBudget one, three;
    one.threads = 1;
    three.threads = 3;
    for (int n = 6; n <= 10; ++n)
        for (int ell = 1; ell <= 4; ++ell) CHECK(*emax_exact(ell, n, one).certificate == *emax_exact(ell, n, three).certificate);
}

TEST_CASE("closed forms agree with the search from n = l + 1") {
    for (int ell = 0; ell <= 4; ++ell)
        for (int n = std::max(3, ell + 1); n <= 10; ++n) {
            CAPTURE(ell);
            CAPTURE(n);
            CHECK(emax_exact(ell, n).value == emax_closed_form(ell, n));
        }
    // The table's lower boundary n = l breaks at l = 4: D_4 has only 2 edges.
    CHECK(emax_closed_form(4, 4) == 3);
    CHECK(emax_exact(4, 4).value == 2);
}

TEST_CASE("closed form examples") {
    for (int n = 3; n <= 10; ++n) CHECK(emax_closed_form(0, n) == n - 3);
    CHECK(emax_closed_form(1, 6) == 5);
    CHECK(emax_closed_form(2, 8) == 11);
    CHECK(emax_closed_form(3, 6) == 8);
    CHECK(emax_closed_form(4, 70) == 169);
    CHECK_THROWS_AS(emax_closed_form(5, 10), Unsupported);
    CHECK_THROWS_AS(emax_closed_form(4, 3), InputError);
}

TEST_CASE("optimal classes at l = 4") {
    const auto seven = emax_optima(4, 7);
    CHECK(seven.size() == oracle::dihedral_classes(7, oracle::max_local_crossing(7, 4)));
    CHECK(seven.size() == 2);
    const auto eight = emax_optima(4, 8);
    CHECK(eight.size() == oracle::dihedral_classes(8, oracle::max_local_crossing(8, 4)));
    CHECK(eight.size() == 3);
    for (const auto& g : seven) CHECK(g.edge_count() == 11);
    CHECK(std::find(seven.begin(), seven.end(), canonical_form(graph_s7())) != seven.end());
    CHECK(std::find(seven.begin(), seven.end(), canonical_form(graph_s7_prime())) != seven.end());
    CHECK(std::find(eight.begin(), eight.end(), canonical_form(graph_s8())) != eight.end());
    CHECK(emax_exact(4, 7).value == 11);
    CHECK(emax_exact(4, 8).value == 13);
}

TEST_CASE("every chosen edge of an optimum is saturated or blocked") {
    // Adding any missing diagonal to an optimum must break lc <= l.
    for (int ell = 1; ell <= 4; ++ell)
        for (int n = 6; n <= 9; ++n) {
            const ConvexGraph g = *emax_exact(ell, n).certificate;
            for (Edge e : complete_convex(n, false).edges()) {
                if (g.contains(e)) continue;
                std::vector<Edge> more(g.edges().begin(), g.edges().end());
                more.push_back(e);
                CHECK(local_crossing_number(ConvexGraph(n, more)) > ell);
            }
        }
}

TEST_CASE("node budget yields an inexact record") {
    SearchBudget tiny;
    tiny.max_nodes = 5;
    tiny.warm_start = false;
    const EdgeMaxRecord r = emax_exact(4, 10, tiny);
    CHECK(r.status == ResultStatus::Inexact);
    CHECK(r.value <= 19);
    CHECK_NOTHROW(validate_record(r));
    CHECK(emax_exact(2, 13).status == ResultStatus::Inexact);
}

TEST_CASE("composition lower bound") {
    for (int n = 3; n <= 40; ++n) {
        const EdgeMaxRecord one = emax_composition_bound(1, n);
        CHECK(one.value == emax_closed_form(1, n));
        CHECK(one.value == (3 * (n - 3)) / 2 + (n % 2 == 0 ? 1 : 0));
        for (int ell = 0; ell <= 9; ++ell) {
            const EdgeMaxRecord r = emax_composition_bound(ell, n);
            CHECK_NOTHROW(validate_record(r));
            if (ell <= 4 && n >= ell + 1) CHECK(r.value <= emax_closed_form(ell, n));
        }
        if (n >= 5) CHECK(emax_composition_bound(4, n).value == emax_closed_form(4, n));
    }
    CHECK(*emax_composition_bound(4, 7).certificate == graph_s7());
    const EdgeMaxRecord h22 = emax_composition_bound(4, 22);
    CHECK(h22.value == 49);
}

TEST_CASE("slope C_l") {
    CHECK(c_ell(0) == 1);
    CHECK(c_ell(1) == Rational(3, 2));
    CHECK(c_ell(2) == 2);
    CHECK(c_ell(3) == Rational(9, 4));
    CHECK(c_ell(4) == Rational(5, 2));
    for (int ell = 0; ell <= 4; ++ell) CHECK(c_ell(ell) == closed_form(ell).c_ell);
    // every slope is achieved asymptotically by the composition, so it cannot
    // beat the search at the sizes we can afford
    for (int ell = 5; ell <= 12; ++ell) {
        const EdgeMaxRecord r = emax_exact(ell, 10);
        CHECK(emax_composition_bound(ell, 10).value <= r.value);
    }
}

TEST_CASE("rational square root upper bound") {
    for (std::int64_t ell = 1; ell <= 6; ++ell) {
        const auto [p, q] = oracle::sqrt_upper_brute(27 * ell, 2, 1000000);
        CHECK(sqrt_upper_approx(27 * ell, 2, 1000000) == Rational(p, q));
    }
    CHECK(sqrt_upper_approx(0, 2, 1000000) == 0);
    CHECK(sqrt_upper_approx(16, 1, 10) == 4);
    CHECK(analytic_upper(0, 7) == 0);
    for (int ell = 0; ell <= 4; ++ell)
        for (int n = std::max(3, ell); n <= 10; ++n)
            if (ell > 0) CHECK(emax_exact(ell, n).value <= analytic_upper(ell, n));
    const Rational at8 = analytic_upper(4, 8);
    CHECK(at8 >= 13);
    CHECK(at8 < Rational(5881, 100));
}

TEST_CASE("acyclic crossing graphs") {
    for (int n = 4; n <= 8; ++n) {
        const EdgeMaxRecord r = estar_acyclic(n);
        CHECK(r.status == ResultStatus::Exact);
        CHECK(r.value == 2 * n - 6);
        CHECK(r.value == oracle::max_acyclic(n).best);
        CHECK(has_acyclic_crossing_graph(*r.certificate));
    }
    SearchBudget cold;
    cold.warm_start = false;
    CHECK(estar_acyclic(9, cold).value == 12);
    CHECK(estar_acyclic(15).status == ResultStatus::Inexact);
    CHECK_THROWS_AS(estar_acyclic(3), InputError);
}

TEST_CASE("M_l exploration") {
    const MEllExploration four = m_ell_explore(4, 8);
    CHECK(four.value == Rational(5, 2));
    CHECK(four.argmax_n == 6);
    for (int nmax = 3; nmax <= 10; ++nmax) CHECK(m_ell_explore(0, nmax).value == 1);
    const MEllExploration two = m_ell_explore(2, 6);
    CHECK(two.value == 2);
    CHECK(two.argmax_n == 5);
}

TEST_CASE("record validation rejects bad certificates") {
    EdgeMaxRecord r;
    r.ell = 1;
    r.n = 5;
    r.value = 5;
    r.certificate = complete_convex(5, false);
    CHECK_THROWS_AS(validate_record(r), std::logic_error);
    r.ell = 2;
    CHECK_NOTHROW(validate_record(r));
    r.value = 4;
    CHECK_THROWS_AS(validate_record(r), std::logic_error);
}
