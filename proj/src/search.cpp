#include "fairseq/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <climits>
#include <mutex>
#include <thread>
#include <vector>

namespace fairseq {

std::string to_string(SearchStatus status) {
    switch (status) {
    case SearchStatus::Sat: return "sat";
    case SearchStatus::Unsat: return "unsat";
    case SearchStatus::Timeout: return "timeout";
    }
    return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

struct Shared {
    std::atomic<bool> cancel{false};
    std::atomic<bool> timed_out{false};
    std::atomic<std::uint64_t> nodes{0};
    std::mutex mtx;
    std::optional<RepeatedAssignment> witness;
};

class Worker {
  public:
    Worker(const SearchConfig &cfg, Shared &shared, Clock::time_point start,
           int branch_mod, int branch_offset)
        : cfg_(cfg), shared_(shared), start_(start), n_(cfg.n),
          max_days_(cfg.effective_max_days()), kind_(cfg.kind), index_(cfg.n),
          days_(static_cast<size_t>(max_days_),
                std::vector<int>(static_cast<size_t>(cfg.n), 0)),
          need_(static_cast<size_t>(cfg.n) + 1, 0), branch_mod_(branch_mod),
          branch_offset_(branch_offset) {}

    /// Returns true if the assigned subtree was exhausted without abort.
    bool run() {
        solve_day(1);
        shared_.nodes += local_nodes_;
        return !aborted_;
    }

    std::uint64_t nodes() const { return local_nodes_; }
    int max_depth() const { return local_max_depth_; }

  private:
    bool solve_day(int t) {
        if (t > max_days_) {
            std::lock_guard<std::mutex> lock(shared_.mtx);
            if (!shared_.witness)
                shared_.witness.emplace(n_, days_);
            shared_.cancel.store(true, std::memory_order_relaxed);
            return true;
        }
        if (t == 1 && cfg_.symmetry_breaking) {
            for (int i = 1; i <= n_; ++i) {
                days_[0][i - 1] = i;
                index_.append(i, i);
            }
            bool found = day_complete_ok(1) && solve_day(2);
            for (int i = 1; i <= n_; ++i) {
                index_.retract(i, i);
                days_[0][i - 1] = 0;
            }
            return found;
        }
        return assign(t, 1);
    }

    // Assigns item r on day t to one of the eligible players.
    bool assign(int t, int r) {
        if (bump_node(t, r))
            return false;
        if (r > n_)
            return day_complete_ok(t) && solve_day(t + 1);

        // Same-day deadlines: an unassigned player with a pending deficit
        // must receive an item no worse than its tightest failing bound.
        std::vector<std::pair<int, int>> cand; // (deadline, player)
        std::vector<int> deadlines;
        for (int i = 1; i <= n_; ++i) {
            if (days_[t - 1][i - 1] != 0)
                continue;
            int dl = today_deadline(i, t);
            if (dl == -1)
                return false; // needs two more top items in one day
            if (dl != 0) {
                if (dl < r)
                    return false; // required item already gone
                deadlines.push_back(dl);
            }
            if (check_incremental(index_, kind_, n_, t, i, r))
                cand.emplace_back(dl != 0 ? dl : INT_MAX, i);
        }
        // Hall condition: q players whose deadlines fit below d need q
        // distinct items from [r, d].
        std::sort(deadlines.begin(), deadlines.end());
        for (size_t q = 0; q < deadlines.size(); ++q)
            if (deadlines[q] - r + 1 < static_cast<int>(q) + 1)
                return false;
        if (!future_feasible(t, r))
            return false;

        std::sort(cand.begin(), cand.end()); // most-constrained first
        bool split = branch_mod_ > 1 && r == 1 &&
                     t == (cfg_.symmetry_breaking ? 2 : 1);
        for (size_t idx = 0; idx < cand.size(); ++idx) {
            if (split && static_cast<int>(idx % static_cast<size_t>(
                             branch_mod_)) != branch_offset_)
                continue;
            int p = cand[idx].second;
            days_[t - 1][p - 1] = r;
            index_.append(p, r);
            bool found = assign(t, r + 1);
            index_.retract(p, r);
            days_[t - 1][p - 1] = 0;
            if (found)
                return true;
            if (aborted_)
                return false;
        }
        return false;
    }

    // 0: no pending same-day requirement; -1: infeasible; else the tightest
    // bound under which the player still needs one item today.
    int today_deadline(int i, int t) const {
        int dl = 0;
        int j_max = per_day_jmax(t);
        for (int j = 1; j <= j_max; ++j) {
            int b = condition_bound(kind_, n_, t, j);
            if (b >= n_)
                continue;
            int deficit = j - index_.count(i, b);
            if (deficit >= 2)
                return -1;
            if (deficit == 1 && (dl == 0 || b < dl))
                dl = b;
        }
        return dl;
    }

    int per_day_jmax(int t) const {
        return (kind_ == ConditionKind::TopBalanced ||
                kind_ == ConditionKind::WindowedTop)
                   ? 1
                   : t;
    }

    // Aggregate lookahead: by the end of any future day t2, the total
    // outstanding demand for items of rank <= b cannot exceed the supply
    // of such items left today plus b per remaining day. Each player can
    // absorb at most one item per day.
    bool future_feasible(int t, int r) {
        for (int t2 = t; t2 <= max_days_; ++t2) {
            int gap = t2 - t;
            int j_max = per_day_jmax(t2);
            std::fill(need_.begin(), need_.end(), 0);
            for (int j = 1; j <= j_max; ++j) {
                int b = condition_bound(kind_, n_, t2, j);
                if (b >= n_)
                    continue;
                long long sum = 0;
                for (int i = 1; i <= n_; ++i) {
                    int req = j - index_.count(i, b);
                    if (req > need_[i])
                        need_[i] = req;
                    if (need_[i] >
                        gap + (days_[t - 1][i - 1] == 0 ? 1 : 0))
                        return false;
                    sum += need_[i];
                }
                long long supply = std::max(0, b - (r - 1)) +
                                   static_cast<long long>(b) * gap;
                if (sum > supply)
                    return false;
            }
        }
        return true;
    }

    // Prefix-kind conditions are decided exactly by the incremental rule;
    // windowed top-balance additionally checks every window ending today.
    bool day_complete_ok(int t) const {
        if (kind_ != ConditionKind::WindowedTop)
            return true;
        for (int len = 2; len <= t; ++len) {
            int b = condition_bound(kind_, n_, len, 1);
            if (b >= n_)
                continue;
            for (int i = 1; i <= n_; ++i) {
                int best = n_ + 1;
                for (int d = t - len + 1; d <= t; ++d)
                    best = std::min(best, days_[d - 1][i - 1]);
                if (best > b)
                    return false;
            }
        }
        return true;
    }

    // Returns true if the worker should abort (cancel, timeout, node limit).
    bool bump_node(int t, int r) {
        ++local_nodes_;
        int depth = (t - 1) * n_ + (r - 1);
        if (depth > local_max_depth_)
            local_max_depth_ = depth;
        if (cfg_.node_limit > 0 &&
            shared_.nodes.load(std::memory_order_relaxed) + local_nodes_ >
                cfg_.node_limit) {
            shared_.timed_out.store(true, std::memory_order_relaxed);
            shared_.cancel.store(true, std::memory_order_relaxed);
            aborted_ = true;
            return true;
        }
        if ((local_nodes_ & 0xFFF) == 0) {
            if (shared_.cancel.load(std::memory_order_relaxed)) {
                aborted_ = true;
                return true;
            }
            double elapsed =
                std::chrono::duration<double>(Clock::now() - start_).count();
            std::uint64_t total =
                shared_.nodes.load(std::memory_order_relaxed) + local_nodes_;
            if (cfg_.timeout_seconds > 0 && elapsed > cfg_.timeout_seconds) {
                shared_.timed_out.store(true, std::memory_order_relaxed);
                shared_.cancel.store(true, std::memory_order_relaxed);
                aborted_ = true;
                return true;
            }
            if (cfg_.progress)
                cfg_.progress({total, local_max_depth_, elapsed});
        }
        return aborted_;
    }

    const SearchConfig &cfg_;
    Shared &shared_;
    Clock::time_point start_;
    int n_;
    int max_days_;
    ConditionKind kind_;
    RankCountIndex index_;
    std::vector<std::vector<int>> days_;
    std::vector<int> need_;
    int branch_mod_;
    int branch_offset_;
    std::uint64_t local_nodes_ = 0;
    int local_max_depth_ = 0;
    bool aborted_ = false;
};

} // namespace

SearchOutcome search(const SearchConfig &cfg) {
    if (cfg.n < 1)
        throw std::invalid_argument("n must be positive");
    if (cfg.max_days > cfg.n)
        throw std::invalid_argument("max_days exceeds n");

    auto start = Clock::now();
    Shared shared;
    SearchOutcome out;

    int split_day = cfg.symmetry_breaking ? 2 : 1;
    int workers = std::max(1, cfg.workers);
    if (cfg.deterministic || cfg.effective_max_days() < split_day)
        workers = 1;

    bool exhausted = true;
    if (workers == 1) {
        Worker w(cfg, shared, start, 1, 0);
        exhausted = w.run();
        out.max_depth_reached = w.max_depth();
    } else {
        std::vector<std::thread> threads;
        std::vector<Worker> pool;
        pool.reserve(static_cast<size_t>(workers));
        for (int w = 0; w < workers; ++w)
            pool.emplace_back(cfg, shared, start, workers, w);
        std::vector<char> done(static_cast<size_t>(workers), 1);
        for (int w = 0; w < workers; ++w)
            threads.emplace_back([&pool, &done, w] { done[w] = pool[w].run(); });
        for (auto &th : threads)
            th.join();
        for (int w = 0; w < workers; ++w) {
            exhausted = exhausted && done[w];
            out.max_depth_reached =
                std::max(out.max_depth_reached, pool[w].max_depth());
        }
    }

    out.nodes_expanded = shared.nodes.load();
    out.elapsed_seconds =
        std::chrono::duration<double>(Clock::now() - start).count();
    if (shared.witness) {
        out.status = SearchStatus::Sat;
        out.witness = std::move(shared.witness);
    } else if (!exhausted || shared.timed_out.load()) {
        out.status = SearchStatus::Timeout;
    } else {
        out.status = SearchStatus::Unsat;
    }
    return out;
}

bool verify_witness(const SearchOutcome &outcome, ConditionKind kind) {
    if (outcome.status != SearchStatus::Sat || !outcome.witness)
        throw std::logic_error("verify_witness requires a Sat outcome");
    return check(*outcome.witness, kind).valid();
}

} // namespace fairseq
