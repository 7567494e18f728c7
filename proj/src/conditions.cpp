#include "fairseq/conditions.hpp"

#include <algorithm>

namespace fairseq {

std::string to_string(ConditionKind kind) {
    switch (kind) {
    case ConditionKind::TopBalanced: return "top-balanced";
    case ConditionKind::Balanced: return "balanced";
    case ConditionKind::WeakBalanced: return "weak-balanced";
    case ConditionKind::Prop2Strong: return "prop2-strong";
    case ConditionKind::Prop2Weak: return "prop2-weak";
    case ConditionKind::WindowedTop: return "windowed-top";
    }
    return "?";
}

std::optional<ConditionKind> parse_condition_kind(const std::string &name) {
    for (ConditionKind k :
         {ConditionKind::TopBalanced, ConditionKind::Balanced,
          ConditionKind::WeakBalanced, ConditionKind::Prop2Strong,
          ConditionKind::Prop2Weak, ConditionKind::WindowedTop})
        if (to_string(k) == name)
            return k;
    return std::nullopt;
}

namespace {
inline int ceil_div(int a, int b) { return (a + b - 1) / b; }
} // namespace

int condition_bound(ConditionKind kind, int n, int t, int j) {
    int b = n;
    switch (kind) {
    case ConditionKind::TopBalanced:
    case ConditionKind::WindowedTop:
        b = ceil_div(n, t);
        break;
    case ConditionKind::Balanced:
        b = ceil_div(j * n, t);
        break;
    case ConditionKind::WeakBalanced:
        b = j * n / t + 1;
        break;
    case ConditionKind::Prop2Strong:
        b = ceil_div((j + 1) * n, t);
        break;
    case ConditionKind::Prop2Weak:
        b = (j + 1) * n / t + 1;
        break;
    }
    return std::min(b, n);
}

namespace {

void check_prefixes(const RepeatedAssignment &seq, ConditionKind kind,
                    std::vector<Violation> *out, bool first_only) {
    const int n = seq.n();
    RankCountIndex index(n);
    for (int t = 1; t <= seq.num_days(); ++t) {
        for (int i = 1; i <= n; ++i)
            index.append(i, seq.item(t, i));
        int j_max = (kind == ConditionKind::TopBalanced) ? 1 : t;
        for (int i = 1; i <= n; ++i) {
            for (int j = 1; j <= j_max; ++j) {
                int b = condition_bound(kind, n, t, j);
                if (b >= n)
                    continue; // vacuous
                if (index.count(i, b) < j) {
                    out->push_back({i, t, j, b, index.kth_best(i, j), 1});
                    if (first_only)
                        return;
                }
            }
        }
    }
}

void check_windows(const RepeatedAssignment &seq, std::vector<Violation> *out,
                   bool first_only) {
    const int n = seq.n();
    const int T = seq.num_days();
    for (int len = 2; len <= T; ++len) {
        int b = condition_bound(ConditionKind::WindowedTop, n, len, 1);
        if (b >= n)
            continue;
        for (int s = 1; s + len - 1 <= T; ++s) {
            for (int i = 1; i <= n; ++i) {
                int best = n + 1;
                for (int d = s; d < s + len; ++d)
                    best = std::min(best, seq.item(d, i));
                if (best > b) {
                    out->push_back({i, s + len - 1, len, b, best, s});
                    if (first_only)
                        return;
                }
            }
        }
    }
}

} // namespace

CheckResult check(const RepeatedAssignment &seq, ConditionKind kind) {
    CheckResult result;
    if (kind == ConditionKind::WindowedTop)
        check_windows(seq, &result.violations, false);
    else
        check_prefixes(seq, kind, &result.violations, false);
    return result;
}

std::optional<Violation> first_violation(const RepeatedAssignment &seq,
                                         ConditionKind kind) {
    std::vector<Violation> v;
    if (kind == ConditionKind::WindowedTop)
        check_windows(seq, &v, true);
    else
        check_prefixes(seq, kind, &v, true);
    if (v.empty())
        return std::nullopt;
    return v.front();
}

bool check_incremental(const RankCountIndex &index, ConditionKind kind, int n,
                       int t, int player, int item) {
    int j_max = (kind == ConditionKind::TopBalanced ||
                 kind == ConditionKind::WindowedTop)
                    ? 1
                    : t;
    for (int j = 1; j <= j_max; ++j) {
        int b = condition_bound(kind, n, t, j);
        if (b >= n)
            continue;
        if (index.count(player, b) + (item <= b ? 1 : 0) < j)
            return false;
    }
    return true;
}

} // namespace fairseq
