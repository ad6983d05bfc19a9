#ifndef BOOKX_OPTIMIZER_HPP
#define BOOKX_OPTIMIZER_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "bookx/zk.hpp"

namespace bookx {

/// Geometric cooling from t_start to t_end over `iterations` moves, with a
/// reheat to t_start / 2 after `reheat_after` moves without improvement.
struct AnnealSchedule {
    std::uint64_t iterations = 400000;
    double t_start = 1.5;
    double t_end = 0.02;
    std::uint64_t reheat_after = 60000;
};

/**
 * A drawing plus, for every edge e and page p, the number of edges on p that
 * cross e. Single-edge moves update the table in O(crossers of e).
 */
class AnnealState {
public:
    explicit AnnealState(const BookDrawing& d);

    int n() const { return n_; }
    int k() const { return k_; }
    std::size_t edge_count() const { return page_.size(); }
    int page(std::size_t edge) const { return page_[edge]; }
    std::int64_t total() const { return total_; }

    /// Change in total if `edge` moved to `page`.
    std::int64_t delta(std::size_t edge, int page) const {
        return static_cast<std::int64_t>(table_[edge * k_ + page]) - table_[edge * k_ + page_[edge]];
    }
    void move(std::size_t edge, int page);

    /// Edges that cross `edge` in the convex drawing of K_n.
    const std::vector<std::uint32_t>& crossers(std::size_t edge) const { return (*crossers_)[edge]; }

    /// Monochromatic crossings counted from scratch.
    std::int64_t recount() const;
    /// Cached table and total agree with a full rebuild.
    bool consistent() const;

    BookDrawing drawing() const;
    const std::vector<int>& assignment() const { return page_; }

private:
    int n_;
    int k_;
    std::vector<int> page_;
    std::vector<std::int32_t> table_;
    std::int64_t total_ = 0;
    std::shared_ptr<const std::vector<std::vector<std::uint32_t>>> crossers_;
};

struct AnnealResult {
    BookDrawing best;
    std::int64_t count = 0;
    /// Piecewise lower bound (0 when vacuous); count never drops below it.
    std::int64_t lower_bound = 0;
    std::int64_t zk = 0;
    /// count < Z_k(n): a drawing beating the conjectured optimum.
    bool conjecture_alert = false;
    int best_restart = 0;
};

/// Restarts run on independent streams seeded by (seed, restart index).
AnnealResult anneal(int n, int k, int restarts, std::uint64_t seed, const AnnealSchedule& schedule = {},
                    unsigned threads = 0);

/// Local search from `start`; the result never has more crossings than `start`.
BookDrawing improve_from(const BookDrawing& start, std::uint64_t seed, const AnnealSchedule& schedule = {});

}  // namespace bookx

#endif  // BOOKX_OPTIMIZER_HPP
