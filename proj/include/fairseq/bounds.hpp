#pragma once

#include <string>

namespace fairseq {

/// Closed-form impossibility verdict for a given n. `impossible == false`
/// means "unknown": non-existence could not be concluded, existence is
/// never asserted here.
struct BoundVerdict {
    int n = 0;
    bool impossible = false;
    std::string reason; // case tag: residue, parity, threshold applied
};

/// Decides whether no balanced sequence of length n can exist, via the
/// per-residue, parity-aware counting-argument thresholds (n = 6k + j):
///   j=0: k >= 2
///   j=1: k >= 12 (even k) / k >= 11 (odd k)
///   j=2: k >= 4  (even)   / k >= 3  (odd)
///   j=3: k >= 8  (even)   / k >= 9  (odd)
///   j=4: k >= 4  (even)   / k >= 5  (odd)
///   j=5: k >= 10 (even)   / k >= 9  (odd)
/// The parity cases are implemented individually; their per-residue union
/// must reproduce table3_threshold (tested, not assumed). Impossible for
/// every n > 61.
BoundVerdict balanced_impossible(int n);

/// No weakly-balanced sequence exists for n = 6k with k >= 19.
BoundVerdict weak_balanced_impossible(int n);

/// The published per-residue combined threshold on k (j in 0..5):
/// 2, 11, 3, 8, 4, 9.
int table3_threshold(int j);

} // namespace fairseq
