#include "fairseq/proportionality.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace fairseq {

Valuation::Valuation(std::vector<Rat> v) : values(std::move(v)) {
    if (values.empty())
        throw std::invalid_argument("empty valuation");
    for (size_t j = 1; j < values.size(); ++j)
        if (!(values[j - 1] > values[j]))
            throw std::invalid_argument("valuation must be strictly decreasing");
}

Rat Valuation::value_of(const std::vector<int> &bundle) const {
    Rat sum(0);
    for (int x : bundle)
        sum += values.at(static_cast<size_t>(x) - 1);
    return sum;
}

namespace {

void validate_bundle(const std::vector<int> &bundle, int n, int t, int c) {
    if (static_cast<int>(bundle.size()) != t)
        throw std::invalid_argument("bundle size does not match t");
    if (t < 1 || t > n)
        throw std::invalid_argument("t out of range");
    if (c < 0)
        throw std::invalid_argument("c must be non-negative");
    for (int x : bundle)
        if (x < 1 || x > n)
            throw std::invalid_argument("bundle item out of range");
}

// Sorted bundle with the min(c, t) worst items swapped for copies of item 1.
std::vector<int> adjusted_bundle(const std::vector<int> &bundle, int t, int c) {
    std::vector<int> s(bundle);
    std::sort(s.begin(), s.end());
    int m = std::min(c, t);
    s.resize(static_cast<size_t>(t - m));
    s.insert(s.begin(), static_cast<size_t>(m), 1);
    return s;
}

inline long long ceil_div_ll(long long a, long long b) { return (a + b - 1) / b; }

} // namespace

PropVerdict is_ordinal_prop_c(const std::vector<int> &bundle, int n, int t,
                              int c) {
    validate_bundle(bundle, n, t, c);
    std::vector<int> adj = adjusted_bundle(bundle, t, c);
    size_t pos = 0;
    int cnt = 0;
    for (int k = 1; k <= n - 1; ++k) {
        while (pos < adj.size() && adj[pos] <= k) {
            ++pos;
            ++cnt;
        }
        if (cnt < ceil_div_ll(static_cast<long long>(t) * k, n))
            return {false, k};
    }
    return {};
}

PropVerdict prop_c_oracle(const std::vector<int> &bundle, int n, int t, int c,
                          int samples, std::uint64_t seed, bool add_only) {
    validate_bundle(bundle, n, t, c);
    std::vector<int> adj;
    if (add_only) {
        adj = bundle;
        adj.insert(adj.end(), static_cast<size_t>(std::min(c, t)), 1);
    } else {
        adj = adjusted_bundle(bundle, t, c);
    }

    // v(C) >= v(Z_N^t)/n  <=>  n*v(C) - t*sum(v) >= 0
    auto satisfied = [&](const std::vector<Rat> &v) {
        Rat lhs(0);
        for (int x : adj)
            lhs += v[static_cast<size_t>(x) - 1];
        lhs *= n;
        Rat total(0);
        for (const Rat &x : v)
            total += x;
        return lhs >= total * t;
    };

    // Top-k indicators, tilted by +eps*(n-j) to make them strictly
    // decreasing and non-negative. eps is small enough that any non-tight
    // integer inequality keeps its sign.
    const Rat eps(1, 8LL * n * n * t);
    std::vector<Rat> v(static_cast<size_t>(n));
    for (int k = 1; k <= n - 1; ++k) {
        for (int j = 1; j <= n; ++j)
            v[j - 1] = Rat(j <= k ? 1 : 0) + eps * (n - j);
        if (!satisfied(v))
            return {false, k};
    }

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long long> gap(1, 20);
    std::uniform_int_distribution<long long> denom(1, 50);
    for (int s = 0; s < samples; ++s) {
        long long d = denom(rng);
        long long acc = gap(rng);
        for (int j = n; j >= 1; --j) {
            v[j - 1] = Rat(acc, d);
            acc += gap(rng);
        }
        if (!satisfied(v))
            return {false, 0};
    }
    return {};
}

PerpetualVerdict is_perpetually_prop_c(const RepeatedAssignment &seq, int c) {
    for (int t = 1; t <= seq.num_days(); ++t) {
        for (int i = 1; i <= seq.n(); ++i) {
            PropVerdict pv = is_ordinal_prop_c(seq.bundle(i, t), seq.n(), t, c);
            if (!pv)
                return {false, i, t, pv.witness_k};
        }
    }
    return {};
}

CertificateError::CertificateError(int j_, int bound_, int actual_)
    : std::runtime_error("bundle is not weakly balanced: Z[" +
                         std::to_string(j_) + "]=" + std::to_string(actual_) +
                         " > " + std::to_string(bound_)),
      j(j_), bound(bound_), actual(actual_) {}

bool PropCertificate::verify() const {
    if (static_cast<int>(grid.size()) != n ||
        static_cast<int>(adjusted.size()) != t)
        return false;
    std::vector<int> uses(static_cast<size_t>(n) + 1, 0);
    for (int r = 1; r <= n; ++r) {
        if (static_cast<int>(grid[r - 1].size()) != t)
            return false;
        for (int x : grid[r - 1]) {
            if (x < 1 || x > r) // dominance: source never worse than image
                return false;
            ++uses[x];
        }
    }
    std::vector<int> want(static_cast<size_t>(n) + 1, 0);
    for (int x : adjusted)
        want[x] += n;
    return uses == want;
}

std::string PropCertificate::to_csv() const {
    std::ostringstream os;
    for (const auto &row : grid) {
        for (size_t col = 0; col < row.size(); ++col)
            os << (col ? "," : "") << row[col];
        os << "\n";
    }
    return os.str();
}

PropCertificate build_prop1_certificate(const RepeatedAssignment &seq,
                                        int agent, int day) {
    const int n = seq.n();
    const int t = day;
    std::vector<int> z = seq.bundle(agent, t);
    for (int j = 1; j <= t - 1; ++j) {
        int bound = static_cast<int>(static_cast<long long>(j) * n / t) + 1;
        if (z[j - 1] > bound)
            throw CertificateError(j, bound, z[j - 1]);
    }

    PropCertificate cert;
    cert.n = n;
    cert.t = t;
    cert.agent = agent;
    // C: drop the worst item, add a copy of item 1 (which sorts first).
    cert.adjusted.assign(1, 1);
    cert.adjusted.insert(cert.adjusted.end(), z.begin(), z.end() - 1);

    // Both multisets are laid out in sorted order and matched positionally:
    // target position m is the m-th cell of the n x t grid of t clones per
    // item; source position m is clone m of the sorted C (n clones each).
    // This is exactly the block mapping of the constructive proof.
    cert.grid.assign(static_cast<size_t>(n), std::vector<int>(t));
    for (int m = 1; m <= n * t; ++m) {
        int r = (m - 1) / t + 1;
        int col = (m - 1) % t + 1;
        cert.grid[r - 1][col - 1] = cert.adjusted[static_cast<size_t>((m - 1) / n)];
    }
    return cert;
}

} // namespace fairseq
