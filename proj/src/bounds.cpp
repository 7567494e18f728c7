#include "fairseq/bounds.hpp"

#include <array>
#include <stdexcept>

namespace fairseq {

namespace {

// Minimal excluded k per (residue j, parity of k); 0-th entry is even k.
// j=0 has a parity-free threshold.
constexpr std::array<std::array<int, 2>, 6> kThresholds = {{
    {2, 2},   // 6k
    {12, 11}, // 6k+1
    {4, 3},   // 6k+2
    {8, 9},   // 6k+3
    {4, 5},   // 6k+4
    {10, 9},  // 6k+5
}};

} // namespace

BoundVerdict balanced_impossible(int n) {
    if (n < 1)
        throw std::invalid_argument("n must be positive");
    BoundVerdict v;
    v.n = n;
    int k = n / 6;
    int j = n % 6;
    const char *parity = (k % 2 == 0) ? "even" : "odd";
    int threshold = kThresholds[static_cast<size_t>(j)][k % 2];
    if (k >= threshold) {
        v.impossible = true;
        v.reason = "n=6k+" + std::to_string(j) + ", k=" + std::to_string(k) +
                   " " + parity + ", k>=" + std::to_string(threshold);
    } else {
        v.reason = "unknown";
    }
    return v;
}

BoundVerdict weak_balanced_impossible(int n) {
    if (n < 1)
        throw std::invalid_argument("n must be positive");
    BoundVerdict v;
    v.n = n;
    if (n % 6 == 0 && n / 6 >= 19) {
        v.impossible = true;
        v.reason = "n=6k, k=" + std::to_string(n / 6) + ", k>=19";
    } else {
        v.reason = "unknown";
    }
    return v;
}

int table3_threshold(int j) {
    static constexpr std::array<int, 6> kTable = {2, 11, 3, 8, 4, 9};
    if (j < 0 || j > 5)
        throw std::invalid_argument("residue must be in 0..5");
    return kTable[static_cast<size_t>(j)];
}

} // namespace fairseq
