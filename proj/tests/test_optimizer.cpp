#include "doctest.h"

#include <random>

#include "bookx/bounds.hpp"
#include "bookx/optimizer.hpp"

using namespace bookx;

TEST_CASE("cached crossing table survives random moves") {
    std::mt19937_64 rng(8);
    for (auto [n, k] : {std::pair{7, 2}, {9, 3}, {12, 3}, {12, 5}}) {
        std::vector<int> start(static_cast<std::size_t>(binomial(n, 2)));
        for (int& p : start) p = static_cast<int>(rng() % k);
        AnnealState s(BookDrawing(n, k, start));
        CHECK(s.total() == s.recount());
        for (int move = 0; move < 20000; ++move) {
            const std::size_t e = rng() % s.edge_count();
            const int page = static_cast<int>(rng() % k);
            const std::int64_t expect = s.total() + s.delta(e, page);
            s.move(e, page);
            REQUIRE(s.total() == expect);
            if (move % 500 == 0) REQUIRE(s.consistent());
        }
        CHECK(s.total() == s.recount());
    }
}

TEST_CASE("annealing reaches known optima") {
    CHECK(anneal(7, 3, 4, 1).count == 2);
    CHECK(anneal(13, 5, 4, 1).count == 15);
    CHECK(anneal(12, 4, 4, 1).count == 18);
    const AnnealResult r = anneal(10, 3, 4, 1);
    CHECK(r.count == 20);
    CHECK(r.zk == 20);
    CHECK_FALSE(r.conjecture_alert);
    CHECK(count_monochromatic_crossings(r.best) == r.count);
}

TEST_CASE("annealing is deterministic by seed and independent of threads") {
    AnnealSchedule quick;
    quick.iterations = 30000;
    const AnnealResult a = anneal(11, 3, 3, 42, quick, 1);
    const AnnealResult b = anneal(11, 3, 3, 42, quick, 3);
    CHECK(a.count == b.count);
    CHECK(a.best == b.best);
    CHECK(a.best_restart == b.best_restart);
}

TEST_CASE("annealing never reports below the piecewise bound") {
    AnnealSchedule quick;
    quick.iterations = 10000;
    for (int k = 3; k <= 5; ++k)
        for (int n = 2 * k + 1; n <= 4 * k; ++n) {
            const AnnealResult r = anneal(n, k, 2, 7, quick);
            CHECK(r.count >= r.lower_bound);
            const PiecewiseBound b = theorem24_bound(k, n);
            CHECK(Rational(r.count) >= b.value);
        }
}

TEST_CASE("local improvement") {
    const BookDrawing base = dps_construction(14, 4);
    const BookDrawing improved = improve_from(base, 3);
    const std::int64_t count = count_monochromatic_crossings(improved);
    CHECK(count <= 53);
    if (count < 53) MESSAGE("drawing of K_14 in 4 pages below Z_4(14): " << count);

    const BookDrawing single(6, 2, std::vector<int>(15, 0));
    CHECK(count_monochromatic_crossings(single) == 15);
    CHECK(count_monochromatic_crossings(improve_from(single, 1)) == 3);

    AnnealSchedule none;
    none.iterations = 0;
    CHECK(improve_from(single, 1, none) == single);
}
