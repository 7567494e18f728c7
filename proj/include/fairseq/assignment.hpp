#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace fairseq {

/// A finite sequence of daily assignments of n items to n players.
///
/// Day t (1-based) is a bijection: every player receives exactly one item,
/// every item goes to exactly one player. Item 1 is the best, item n the
/// worst. Internally stored day-major; the printed-table player-major view
/// is a view produced at the I/O boundary.
class RepeatedAssignment {
  public:
    /// days[t-1][i-1] = item given to player i on day t. Throws
    /// std::invalid_argument if any day is not a permutation of [n] or if
    /// there are more than n days.
    RepeatedAssignment(int n, std::vector<std::vector<int>> days);

    /// Builds from a player-major table: rows[i-1][t-1] = item for player i
    /// on day t (the orientation used in printed tables and CSV files).
    static RepeatedAssignment from_rows(int n,
                                        const std::vector<std::vector<int>> &rows);

    int n() const { return n_; }
    int num_days() const { return static_cast<int>(days_.size()); }

    /// Item assigned to player i on day t (both 1-based).
    int item(int t, int player) const;

    const std::vector<int> &day(int t) const;
    const std::vector<std::vector<int>> &days() const { return days_; }

    /// Sorted (ascending) multiset of items player i holds after day t.
    std::vector<int> bundle(int player, int t) const;

    /// Player-major table, rows[i-1][t-1].
    std::vector<std::vector<int>> rows() const;

    bool operator==(const RepeatedAssignment &other) const = default;

  private:
    int n_;
    std::vector<std::vector<int>> days_;
};

/// Z_i^t[j]: the j-th best item in player i's bundle after day t.
/// Throws std::out_of_range on invalid indices.
int kth_best(const RepeatedAssignment &seq, int player, int t, int j);

/// True iff the table is square (T = n) and every player's row is a
/// permutation of [n]. Columns are permutations by construction.
bool is_latin_square(const RepeatedAssignment &seq);

/// Per-player counts of items with rank <= k, maintained incrementally as
/// items are appended/retracted. Supports O(1) threshold queries during
/// search: Z_i^t[j] <= b  iff  count(i, b) >= j.
class RankCountIndex {
  public:
    explicit RankCountIndex(int n);

    void append(int player, int item);
    void retract(int player, int item);

    /// |{x in Z_i : x <= k}|. count(i, 0) == 0, count(i, n) == items held.
    int count(int player, int k) const { return counts_[player - 1][k]; }
    int items_held(int player) const { return counts_[player - 1][n_]; }

    /// j-th best held item, via the counting equivalence.
    int kth_best(int player, int j) const;

    int n() const { return n_; }

  private:
    int n_;
    std::vector<std::vector<int>> counts_; // [player-1][k], k in 0..n
};

/// Witness of a failed per-prefix condition: player `agent` after day `day`
/// has actual = Z[index] > bound. For windowed top-balance, `day` is the
/// last day of the window, `index` the window length, and `window_start`
/// the first day; prefix conditions leave window_start == 1.
struct Violation {
    int agent = 0;
    int day = 0;
    int index = 0;
    int bound = 0;
    int actual = 0;
    int window_start = 1;

    bool operator==(const Violation &) const = default;
};

std::string to_string(const Violation &v);

} // namespace fairseq
