#pragma once

#include "fairseq/assignment.hpp"
#include "fairseq/conditions.hpp"

#include <cstdint>
#include <functional>
#include <optional>

namespace fairseq {

struct ProgressRecord {
    std::uint64_t nodes = 0;
    int depth = 0; // deepest (day, item) slot reached so far, linearized
    double elapsed_seconds = 0;
};

struct SearchConfig {
    int n = 0;
    ConditionKind kind = ConditionKind::Balanced;
    int max_days = 0;           // 0 means n
    double timeout_seconds = 0; // 0 means no timeout
    std::uint64_t node_limit = 0;
    bool symmetry_breaking = true; // fix day 1 to the identity
    bool deterministic = false;    // forces a serial run
    int workers = 1;
    // Diagnostics hook, invoked from worker threads every few thousand
    // nodes. Must be thread-safe; null disables it.
    std::function<void(const ProgressRecord &)> progress;

    int effective_max_days() const { return max_days > 0 ? max_days : n; }
};

enum class SearchStatus { Sat, Unsat, Timeout };

std::string to_string(SearchStatus status);

struct SearchOutcome {
    SearchStatus status = SearchStatus::Unsat;
    std::optional<RepeatedAssignment> witness; // present iff Sat
    std::uint64_t nodes_expanded = 0;
    int max_depth_reached = 0;
    double elapsed_seconds = 0;
};

/// Depth-first backtracking over partial sequences. Fills days left to
/// right; within a day assigns items in ascending rank, branching over the
/// most-constrained eligible player first. Prunes with the exact per-day
/// incremental rule, a Hall-style check on same-day deadlines, and a sound
/// aggregate lookahead (total demand for top-b items by a future deadline
/// can never exceed the remaining supply). With symmetry_breaking, day 1 is
/// fixed to the identity: relabeling players maps any witness to one with
/// identity day 1 and the conditions are per-player and label-free.
///
/// Unsat is reported only after the (symmetry-reduced) space at the given
/// depth is exhausted; hitting the timeout or node limit yields Timeout.
/// With workers > 1 the day-2 placement of item 1 is split across threads;
/// the Sat/Unsat status is independent of the worker count, the particular
/// witness need not be. deterministic=true forces a serial run so the
/// witness is reproducible.
SearchOutcome search(const SearchConfig &cfg);

/// Re-runs the full non-incremental checker on a Sat witness.
/// Throws std::logic_error if the outcome is not Sat.
bool verify_witness(const SearchOutcome &outcome, ConditionKind kind);

} // namespace fairseq
