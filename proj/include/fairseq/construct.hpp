#pragma once

#include "fairseq/assignment.hpp"
#include "fairseq/proportionality.hpp"

#include <cstdint>
#include <optional>

namespace fairseq {

/// Builds a full n-day top-balanced sequence.
///
/// Day 1 is the identity. On each later day d, with m = ceil(n/d), the top
/// items go first to players still lacking any top-m item, then to players
/// lacking any top-(m-1) item, so that after day d every player holds a
/// top-m item and the holders of top-(m-1) items stay pairwise distinct.
/// Remaining items are filled deterministically (ascending rank to
/// ascending player index); a seed randomizes the arbitrary choices
/// instead. Fixed (n, seed) reproduces identical output.
RepeatedAssignment build_top_balanced(int n,
                                      std::optional<std::uint64_t> seed = {});

/// Value-greedy baseline: day 1 is the identity; every later day sorts the
/// players by ascending cumulative value (ties by player index) and gives
/// item r to the r-th poorest. Every prefix of the output is EF1 under v.
/// Throws std::invalid_argument if v is not strictly decreasing over n
/// items or T > n.
RepeatedAssignment build_value_greedy(int n, int t, const Valuation &v);

} // namespace fairseq
