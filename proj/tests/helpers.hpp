// Shared test utilities: fixture loading, random sequence generation, and
// the naive re-sort-every-prefix reference checker kept independent of the
// incremental implementation.
#pragma once

#include "fairseq/assignment.hpp"
#include "fairseq/conditions.hpp"
#include "fairseq/io.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <random>
#include <string>
#include <vector>

namespace testutil {

inline std::string fixture_dir() {
    if (const char *env = std::getenv("FAIRSEQ_FIXTURES"))
        return env;
    return FAIRSEQ_FIXTURE_DIR;
}

inline fairseq::RepeatedAssignment fixture(const std::string &name) {
    return fairseq::load_sequence(fixture_dir() + "/" + name);
}

inline fairseq::RepeatedAssignment random_sequence(int n, int t,
                                                   std::mt19937_64 &rng) {
    std::vector<std::vector<int>> days(static_cast<size_t>(t));
    for (auto &day : days) {
        day.resize(static_cast<size_t>(n));
        std::iota(day.begin(), day.end(), 1);
        std::shuffle(day.begin(), day.end(), rng);
    }
    return fairseq::RepeatedAssignment(n, std::move(days));
}

// Reference checker: re-sorts every prefix bundle from scratch, no shared
// code with the production path beyond condition_bound.
inline std::vector<fairseq::Violation>
naive_check(const fairseq::RepeatedAssignment &seq, fairseq::ConditionKind kind) {
    using fairseq::ConditionKind;
    std::vector<fairseq::Violation> out;
    const int n = seq.n();
    if (kind == ConditionKind::WindowedTop) {
        for (int len = 2; len <= seq.num_days(); ++len) {
            int bound = fairseq::condition_bound(kind, n, len, 1);
            if (bound >= n)
                continue;
            for (int s = 1; s + len - 1 <= seq.num_days(); ++s)
                for (int i = 1; i <= n; ++i) {
                    int best = n + 1;
                    for (int d = s; d < s + len; ++d)
                        best = std::min(best, seq.item(d, i));
                    if (best > bound)
                        out.push_back({i, s + len - 1, len, bound, best, s});
                }
        }
        return out;
    }
    for (int t = 1; t <= seq.num_days(); ++t) {
        for (int i = 1; i <= n; ++i) {
            std::vector<int> bundle;
            for (int d = 1; d <= t; ++d)
                bundle.push_back(seq.item(d, i));
            std::sort(bundle.begin(), bundle.end());
            int j_max = kind == ConditionKind::TopBalanced ? 1 : t;
            for (int j = 1; j <= j_max; ++j) {
                int bound = fairseq::condition_bound(kind, n, t, j);
                if (bound >= n)
                    continue;
                if (bundle[j - 1] > bound)
                    out.push_back({i, t, j, bound, bundle[j - 1], 1});
            }
        }
    }
    return out;
}

inline const std::vector<fairseq::ConditionKind> kAllKinds = {
    fairseq::ConditionKind::TopBalanced, fairseq::ConditionKind::Balanced,
    fairseq::ConditionKind::WeakBalanced, fairseq::ConditionKind::Prop2Strong,
    fairseq::ConditionKind::Prop2Weak, fairseq::ConditionKind::WindowedTop};

} // namespace testutil
