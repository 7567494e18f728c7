#pragma once

#include "fairseq/assignment.hpp"

#include <boost/rational.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace fairseq {

using Rat = boost::rational<long long>;

/// Strictly decreasing item values v_1 > v_2 > ... > v_n, exact rationals.
struct Valuation {
    std::vector<Rat> values;

    explicit Valuation(std::vector<Rat> v);
    int n() const { return static_cast<int>(values.size()); }
    Rat value_of(const std::vector<int> &bundle) const;
};

struct PropVerdict {
    bool ok = true;
    int witness_k = 0; // smallest failing threshold when !ok

    explicit operator bool() const { return ok; }
};

/// Decides ordinal PROP-c for a t-item bundle out of n items per day.
///
/// Swap semantics: C is the bundle with its min(c, t) worst items replaced
/// by copies of item 1. The verdict is true iff for every threshold
/// k in [n-1]: |{x in C : x <= k}| >= ceil(t*k/n). This is equivalent to
/// v(C) >= v(Z_N^t)/n for every strictly decreasing valuation, because the
/// inequality is linear and translation-invariant, so it holds on the cone
/// v_1 >= ... >= v_n iff it holds on its extreme rays, the top-k indicator
/// valuations.
PropVerdict is_ordinal_prop_c(const std::vector<int> &bundle, int n, int t,
                              int c);

/// Independent brute-force oracle: tests v(C) >= v(Z_N^t)/n directly, in
/// exact rational arithmetic, over (i) all n-1 top-k indicator valuations
/// perturbed to strict decrease by -eps*(0,1,...,n-1) with eps small enough
/// not to flip any non-tight inequality, and (ii) `samples` random strictly
/// decreasing positive rational valuations. With add_only=true, C instead
/// keeps all t items and adds min(c, t) copies of item 1 (coincides with
/// swap semantics for non-negative valuations; random samples stay
/// positive, so the option is safe here).
PropVerdict prop_c_oracle(const std::vector<int> &bundle, int n, int t, int c,
                          int samples, std::uint64_t seed,
                          bool add_only = false);

struct PerpetualVerdict {
    bool ok = true;
    int agent = 0; // first failing player when !ok
    int day = 0;   // first failing day when !ok
    int witness_k = 0;

    explicit operator bool() const { return ok; }
};

/// Ordinal PROP-c for every player at every prefix day; failures reported
/// in (day, player) order.
PerpetualVerdict is_perpetually_prop_c(const RepeatedAssignment &seq, int c);

/// Thrown by build_prop1_certificate when the bundle misses even the
/// weak-balance bound for some j.
struct CertificateError : std::runtime_error {
    int j;
    int bound;
    int actual;
    CertificateError(int j_, int bound_, int actual_);
};

/// The constructive PROP1 witness: a dominance bijection between n clones
/// of each item of the adjusted bundle C (worst item swapped for a copy of
/// item 1) and the n*t items allocated through day t (t clones of each
/// item). grid[r-1][col-1] is the source item mapped onto the col-th clone
/// of item r; dominance means every cell is <= its row item.
struct PropCertificate {
    int n = 0;
    int t = 0;
    int agent = 0;
    std::vector<int> adjusted;           // C, sorted ascending, t items
    std::vector<std::vector<int>> grid;  // n rows, t columns

    /// Re-checks the bijection (each adjusted item appears exactly n times)
    /// and dominance (cell <= row item).
    bool verify() const;
    std::string to_csv() const;
};

/// Builds the certificate for the given player's bundle after `day`.
/// Requires Z[j] <= floor(j*n/t) + 1 for all j in [t-1] (the weak-balance
/// bound; balanced bundles satisfy it a fortiori). Throws CertificateError
/// naming the failing (j, bound) otherwise.
PropCertificate build_prop1_certificate(const RepeatedAssignment &seq,
                                        int agent, int day);

} // namespace fairseq
