#include "bookx/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <random>
#include <stdexcept>

#include "bookx/bounds.hpp"
#include "bookx/error.hpp"
#include "bookx/parallel.hpp"

namespace bookx {

namespace {

std::shared_ptr<const std::vector<std::vector<std::uint32_t>>> crossing_lists(int n) {
    static std::mutex mutex;
    static std::map<int, std::shared_ptr<const std::vector<std::vector<std::uint32_t>>>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[n];
    if (!slot) {
        const auto m = static_cast<std::size_t>(binomial(n, 2));
        auto lists = std::make_shared<std::vector<std::vector<std::uint32_t>>>(m);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j)
                if (edges_cross(n, edge_at(n, i), edge_at(n, j))) {
                    (*lists)[i].push_back(static_cast<std::uint32_t>(j));
                    (*lists)[j].push_back(static_cast<std::uint32_t>(i));
                }
        slot = std::move(lists);
    }
    return slot;
}

struct RestartOutcome {
    std::vector<int> best;
    std::int64_t count = 0;
};

// One annealing run from `state`; returns the best assignment seen.
RestartOutcome run_schedule(AnnealState state, std::mt19937_64& rng, const AnnealSchedule& schedule,
                            std::int64_t floor_value) {
    RestartOutcome out{state.assignment(), state.total()};
    if (schedule.iterations == 0 || state.k() < 2) return out;

    std::vector<std::size_t> movable;
    for (std::size_t e = 0; e < state.edge_count(); ++e)
        if (!state.crossers(e).empty()) movable.push_back(e);
    if (movable.empty()) return out;

    std::uniform_int_distribution<std::size_t> pick_edge(0, movable.size() - 1);
    std::uniform_int_distribution<int> pick_page(0, state.k() - 2);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    const double t_start = std::max(schedule.t_start, 1e-9);
    const double t_end = std::clamp(schedule.t_end, 1e-9, t_start);
    const double alpha = std::pow(t_end / t_start, 1.0 / static_cast<double>(schedule.iterations));
    double temperature = t_start;
    std::uint64_t since_improvement = 0;

    for (std::uint64_t it = 0; it < schedule.iterations; ++it) {
        if (out.count <= floor_value) break;
        const std::size_t e = movable[pick_edge(rng)];
        int target = pick_page(rng);
        if (target >= state.page(e)) ++target;
        const std::int64_t d = state.delta(e, target);
        if (d <= 0 || unit(rng) < std::exp(-static_cast<double>(d) / temperature)) {
            state.move(e, target);
            if (state.total() < out.count) {
                out.count = state.total();
                out.best = state.assignment();
                since_improvement = 0;
            }
        }
        if (++since_improvement >= schedule.reheat_after && schedule.reheat_after > 0) {
            temperature = std::max(temperature, t_start / 2);
            since_improvement = 0;
        }
        temperature *= alpha;
    }
    return out;
}

std::int64_t known_lower_bound(int n, int k) {
    const PiecewiseBound b = theorem24_bound(k, n);
    if (b.vacuous) return 0;
    return std::max<std::int64_t>(0, ceil(b.value).convert_to<std::int64_t>());
}

}  // namespace

AnnealState::AnnealState(const BookDrawing& d)
    : n_(d.n()), k_(d.k()), page_(d.assignment().begin(), d.assignment().end()), crossers_(crossing_lists(d.n())) {
    table_.assign(page_.size() * static_cast<std::size_t>(k_), 0);
    for (std::size_t e = 0; e < page_.size(); ++e)
        for (std::uint32_t f : (*crossers_)[e]) {
            ++table_[e * k_ + page_[f]];
            if (page_[f] == page_[e] && f > e) ++total_;
        }
}

void AnnealState::move(std::size_t edge, int page) {
    if (page < 0 || page >= k_) throw InputError("page out of range");
    const int from = page_[edge];
    if (from == page) return;
    total_ += delta(edge, page);
    for (std::uint32_t f : (*crossers_)[edge]) {
        --table_[f * k_ + from];
        ++table_[f * k_ + page];
    }
    page_[edge] = page;
}

std::int64_t AnnealState::recount() const { return count_monochromatic_crossings(drawing()); }

bool AnnealState::consistent() const {
    const AnnealState fresh(drawing());
    return fresh.table_ == table_ && fresh.total_ == total_ && total_ == recount();
}

BookDrawing AnnealState::drawing() const { return BookDrawing(n_, k_, page_); }

AnnealResult anneal(int n, int k, int restarts, std::uint64_t seed, const AnnealSchedule& schedule,
                    unsigned threads) {
    if (n < 3 || k < 1) throw InputError("anneal needs n >= 3 and k >= 1");
    if (restarts < 1) throw InputError("anneal needs at least one restart");
    const std::int64_t lower = known_lower_bound(n, k);
    const auto m = static_cast<std::size_t>(binomial(n, 2));

    std::vector<RestartOutcome> outcomes(static_cast<std::size_t>(restarts));
    parallel_for(outcomes.size(), threads != 0 ? threads : worker_count(), [&](std::size_t r) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(r)};
        std::mt19937_64 rng(seq);
        std::uniform_int_distribution<int> page(0, k - 1);
        std::vector<int> start(m);
        for (int& p : start) p = page(rng);
        outcomes[r] = run_schedule(AnnealState(BookDrawing(n, k, std::move(start))), rng, schedule, lower);
    });

    std::size_t best = 0;
    for (std::size_t r = 1; r < outcomes.size(); ++r)
        if (outcomes[r].count < outcomes[best].count ||
            (outcomes[r].count == outcomes[best].count && outcomes[r].best < outcomes[best].best))
            best = r;

    AnnealResult res{BookDrawing(n, k, outcomes[best].best), outcomes[best].count, lower, zk_value(n, k), false,
                     static_cast<int>(best)};
    if (res.count < res.lower_bound) throw std::logic_error("annealing reported a count below the lower bound");
    res.conjecture_alert = res.count < res.zk;
    return res;
}

BookDrawing improve_from(const BookDrawing& start, std::uint64_t seed, const AnnealSchedule& schedule) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
    std::mt19937_64 rng(seq);
    const std::int64_t lower = known_lower_bound(start.n(), start.k());
    const RestartOutcome out = run_schedule(AnnealState(start), rng, schedule, lower);
    return BookDrawing(start.n(), start.k(), out.best);
}

}  // namespace bookx
