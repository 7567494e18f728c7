#include "fairseq/construct.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace fairseq {

namespace {
inline int ceil_div(int a, int b) { return (a + b - 1) / b; }
} // namespace

RepeatedAssignment build_top_balanced(int n, std::optional<std::uint64_t> seed) {
    if (n < 1)
        throw std::invalid_argument("n must be positive");
    std::mt19937_64 rng(seed.value_or(0));
    auto maybe_shuffle = [&](std::vector<int> &v) {
        if (seed)
            std::shuffle(v.begin(), v.end(), rng);
    };

    std::vector<std::vector<int>> days;
    days.reserve(static_cast<size_t>(n));
    std::vector<int> identity(static_cast<size_t>(n));
    std::iota(identity.begin(), identity.end(), 1);
    days.push_back(identity);

    std::vector<int> best(static_cast<size_t>(n) + 1); // best item per player
    for (int i = 1; i <= n; ++i)
        best[i] = i;

    for (int d = 2; d <= n; ++d) {
        const int m = ceil_div(n, d);
        std::vector<int> lacking_m, lacking_m1; // best > m / best == m
        for (int i = 1; i <= n; ++i) {
            if (best[i] > m)
                lacking_m.push_back(i);
            else if (best[i] == m)
                lacking_m1.push_back(i);
        }
        maybe_shuffle(lacking_m);
        maybe_shuffle(lacking_m1);

        std::vector<int> today(static_cast<size_t>(n) + 1, 0); // player -> item
        int r = 1;
        // Items 1..m-1 go to players lacking a top-(m-1) item, those lacking
        // a top-m item first; a player still lacking top-m after that must
        // take item m itself.
        for (int i : lacking_m) {
            if (r > m)
                break;
            today[i] = r++;
        }
        for (int i : lacking_m1) {
            if (r > m - 1)
                break;
            today[i] = r++;
        }

        std::vector<int> rest_items, rest_players;
        for (int x = r; x <= n; ++x)
            rest_items.push_back(x);
        for (int i = 1; i <= n; ++i)
            if (today[i] == 0)
                rest_players.push_back(i);
        maybe_shuffle(rest_items);
        maybe_shuffle(rest_players);
        for (size_t idx = 0; idx < rest_players.size(); ++idx)
            today[rest_players[idx]] = rest_items[idx];

        std::vector<int> day(static_cast<size_t>(n));
        for (int i = 1; i <= n; ++i) {
            day[i - 1] = today[i];
            best[i] = std::min(best[i], today[i]);
        }
        days.push_back(std::move(day));

        // Claim (1): every player now holds a top-m item. Claim (2): no
        // player received two top-(m-1) items in the first d days.
        for (int i = 1; i <= n; ++i)
            if (best[i] > m)
                throw std::logic_error("top-balance claim (1) broken");
        for (int i = 1; i <= n; ++i) {
            int small = 0;
            for (int dd = 0; dd < d; ++dd)
                small += days[dd][i - 1] <= m - 1;
            if (small > 1)
                throw std::logic_error("top-balance claim (2) broken");
        }
    }
    return RepeatedAssignment(n, std::move(days));
}

RepeatedAssignment build_value_greedy(int n, int t, const Valuation &v) {
    if (n < 1 || t < 1 || t > n)
        throw std::invalid_argument("need 1 <= T <= n");
    if (v.n() != n)
        throw std::invalid_argument("valuation size does not match n");

    std::vector<std::vector<int>> days;
    days.reserve(static_cast<size_t>(t));
    std::vector<int> identity(static_cast<size_t>(n));
    std::iota(identity.begin(), identity.end(), 1);
    days.push_back(identity);

    std::vector<Rat> wealth(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i)
        wealth[i - 1] = v.values[static_cast<size_t>(i) - 1];

    for (int d = 2; d <= t; ++d) {
        std::vector<int> order(static_cast<size_t>(n));
        std::iota(order.begin(), order.end(), 1);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return wealth[a - 1] < wealth[b - 1];
        });
        std::vector<int> day(static_cast<size_t>(n));
        for (int r = 1; r <= n; ++r) {
            int player = order[r - 1];
            day[player - 1] = r;
            wealth[player - 1] += v.values[static_cast<size_t>(r) - 1];
        }
        days.push_back(std::move(day));
    }
    return RepeatedAssignment(n, std::move(days));
}

} // namespace fairseq
