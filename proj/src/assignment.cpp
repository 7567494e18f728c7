#include "fairseq/assignment.hpp"

#include <algorithm>
#include <sstream>

namespace fairseq {

RepeatedAssignment::RepeatedAssignment(int n, std::vector<std::vector<int>> days)
    : n_(n), days_(std::move(days)) {
    if (n_ < 1)
        throw std::invalid_argument("n must be positive");
    if (static_cast<int>(days_.size()) > n_)
        throw std::invalid_argument("more days than items (T > n)");
    std::vector<char> seen(static_cast<size_t>(n_) + 1);
    for (size_t t = 0; t < days_.size(); ++t) {
        const auto &d = days_[t];
        if (static_cast<int>(d.size()) != n_)
            throw std::invalid_argument("day " + std::to_string(t + 1) +
                                        " has wrong length");
        std::fill(seen.begin(), seen.end(), 0);
        for (int x : d) {
            if (x < 1 || x > n_)
                throw std::invalid_argument("day " + std::to_string(t + 1) +
                                            ": item " + std::to_string(x) +
                                            " out of range");
            if (seen[x]++)
                throw std::invalid_argument("day " + std::to_string(t + 1) +
                                            ": item " + std::to_string(x) +
                                            " assigned twice");
        }
    }
}

RepeatedAssignment
RepeatedAssignment::from_rows(int n, const std::vector<std::vector<int>> &rows) {
    if (static_cast<int>(rows.size()) != n)
        throw std::invalid_argument("expected " + std::to_string(n) + " rows");
    size_t t_count = rows.empty() ? 0 : rows[0].size();
    for (const auto &r : rows)
        if (r.size() != t_count)
            throw std::invalid_argument("ragged rows");
    std::vector<std::vector<int>> days(t_count, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (size_t t = 0; t < t_count; ++t)
            days[t][i] = rows[i][t];
    return RepeatedAssignment(n, std::move(days));
}

int RepeatedAssignment::item(int t, int player) const {
    if (t < 1 || t > num_days() || player < 1 || player > n_)
        throw std::out_of_range("item(t, player) index out of range");
    return days_[t - 1][player - 1];
}

const std::vector<int> &RepeatedAssignment::day(int t) const {
    if (t < 1 || t > num_days())
        throw std::out_of_range("day index out of range");
    return days_[t - 1];
}

std::vector<int> RepeatedAssignment::bundle(int player, int t) const {
    if (player < 1 || player > n_ || t < 1 || t > num_days())
        throw std::out_of_range("bundle index out of range");
    std::vector<int> b(t);
    for (int d = 1; d <= t; ++d)
        b[d - 1] = days_[d - 1][player - 1];
    std::sort(b.begin(), b.end());
    return b;
}

std::vector<std::vector<int>> RepeatedAssignment::rows() const {
    std::vector<std::vector<int>> r(n_, std::vector<int>(days_.size()));
    for (int i = 0; i < n_; ++i)
        for (size_t t = 0; t < days_.size(); ++t)
            r[i][t] = days_[t][i];
    return r;
}

int kth_best(const RepeatedAssignment &seq, int player, int t, int j) {
    if (j < 1 || j > t)
        throw std::out_of_range("kth_best: j out of range");
    return seq.bundle(player, t)[j - 1];
}

bool is_latin_square(const RepeatedAssignment &seq) {
    if (seq.num_days() != seq.n())
        return false;
    std::vector<char> seen(static_cast<size_t>(seq.n()) + 1);
    for (int i = 1; i <= seq.n(); ++i) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int t = 1; t <= seq.num_days(); ++t)
            if (seen[seq.item(t, i)]++)
                return false;
    }
    return true;
}

RankCountIndex::RankCountIndex(int n)
    : n_(n), counts_(n, std::vector<int>(static_cast<size_t>(n) + 1, 0)) {
    if (n < 1)
        throw std::invalid_argument("n must be positive");
}

void RankCountIndex::append(int player, int item) {
    if (player < 1 || player > n_ || item < 1 || item > n_)
        throw std::out_of_range("append: index out of range");
    auto &row = counts_[player - 1];
    for (int k = item; k <= n_; ++k)
        ++row[k];
}

void RankCountIndex::retract(int player, int item) {
    if (player < 1 || player > n_ || item < 1 || item > n_)
        throw std::out_of_range("retract: index out of range");
    auto &row = counts_[player - 1];
    for (int k = item; k <= n_; ++k)
        --row[k];
}

int RankCountIndex::kth_best(int player, int j) const {
    const auto &row = counts_[player - 1];
    if (j < 1 || j > row[n_])
        throw std::out_of_range("kth_best: j out of range");
    // smallest b with count >= j
    int lo = 1, hi = n_;
    while (lo < hi) {
        int mid = (lo + hi) / 2;
        if (row[mid] >= j)
            hi = mid;
        else
            lo = mid + 1;
    }
    return lo;
}

std::string to_string(const Violation &v) {
    std::ostringstream os;
    os << "player " << v.agent << ", day " << v.day;
    if (v.window_start != 1)
        os << " (window " << v.window_start << ".." << v.day << ")";
    os << ", j=" << v.index << ": Z[j]=" << v.actual << " > " << v.bound;
    return os.str();
}

} // namespace fairseq
