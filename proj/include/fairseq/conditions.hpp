#pragma once

#include "fairseq/assignment.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fairseq {

/// The five per-prefix bound families plus the windowed top-balance variant.
///
/// Each kind defines an integer bound(n, t, j) on Z_i^t[j] and an index
/// range J(t):
///   TopBalanced  ceil(n/t)            J = {1}
///   Balanced     ceil(j*n/t)          J = [t]
///   WeakBalanced floor(j*n/t) + 1     J = [t]
///   Prop2Strong  ceil((j+1)*n/t)      J = [t]
///   Prop2Weak    floor((j+1)*n/t) + 1 J = [t]
///   WindowedTop  TopBalanced over every window of consecutive days
enum class ConditionKind {
    TopBalanced,
    Balanced,
    WeakBalanced,
    Prop2Strong,
    Prop2Weak,
    WindowedTop,
};

std::string to_string(ConditionKind kind);
std::optional<ConditionKind> parse_condition_kind(const std::string &name);

/// Exact integer bound for Z_i^t[j], capped at n (a bound >= n is vacuous).
/// For WindowedTop, t is the window length.
int condition_bound(ConditionKind kind, int n, int t, int j);

struct CheckResult {
    std::vector<Violation> violations;
    bool valid() const { return violations.empty(); }
    /// Day of the first violation, or 0 if valid.
    int first_violation_day() const {
        return violations.empty() ? 0 : violations.front().day;
    }
};

/// Checks every prefix day t in [T], every player, every j in J(t).
/// Violations are reported exhaustively in (t, player, j) lexicographic
/// order. For WindowedTop, every contiguous window of every length in
/// [2, T] is checked, ordered by (length, start, player).
CheckResult check(const RepeatedAssignment &seq, ConditionKind kind);

/// Like check() but stops at the first violation.
std::optional<Violation> first_violation(const RepeatedAssignment &seq,
                                         ConditionKind kind);

/// Search-time pruning primitive. `index` reflects the whole assignment
/// through day t-1 plus the partially filled day t; `item` is the candidate
/// for `player` on day t. Since each player receives exactly one item per
/// day, this decides the day-t condition for that player exactly:
/// rejects iff count(player, bound) + (item <= bound ? 1 : 0) < j for some
/// j in J(t). For WindowedTop only the prefix window (= TopBalanced rule)
/// is applied here; full windows are checked at day completion.
bool check_incremental(const RankCountIndex &index, ConditionKind kind, int n,
                       int t, int player, int item);

} // namespace fairseq
