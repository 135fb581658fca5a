#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "hsvc/set_system.hpp"

// Structural analyzers: VC-dimension and dual VC-dimension by exhaustive
// shattering search, (alpha,beta) projection profiles, and the
// Sauer-Perles-Shelah consistency check.

namespace hsvc {

struct VcReport {
    int vc_dim = 0;
    std::vector<int> witness; // lexicographically smallest shattered subset of maximum size
    bool capped = false;      // search stopped at the cap while still finding shattered subsets
    bool approximate = false; // superset pruning was used; vc_dim is a lower bound
};

namespace detail {

// Per-element bitset over set ids (one column of the incidence matrix).
// Shattering checks on small subsets reduce to word operations over these.
struct Columns {
    int m = 0;
    std::size_t words = 1;
    std::vector<std::uint64_t> bits; // n * words

    const std::uint64_t* col(int e) const { return bits.data() + static_cast<std::size_t>(e) * words; }
};

inline Columns build_columns(const SetSystem& f)
{
    Columns c;
    c.m = f.set_count();
    c.words = static_cast<std::size_t>((c.m + 63) / 64);
    if (c.words == 0)
        c.words = 1;
    c.bits.assign(static_cast<std::size_t>(f.universe_size()) * c.words, 0);
    for (int i = 0; i < c.m; ++i)
        for (int e : f.set_at(i))
            c.bits[static_cast<std::size_t>(e) * c.words + static_cast<std::size_t>(i >> 6)] |= std::uint64_t{1} << (i & 63);
    return c;
}

// Does some set realize exactly the membership pattern `want` on `elems`?
inline bool pattern_nonempty(const Columns& c, const int* elems, int t, unsigned want)
{
    for (std::size_t w = 0; w < c.words; ++w) {
        std::uint64_t acc = ~std::uint64_t{0};
        if (w + 1 == c.words) {
            const int rem = c.m - static_cast<int>(w * 64);
            acc = rem >= 64 ? ~std::uint64_t{0} : (rem <= 0 ? 0 : ((std::uint64_t{1} << rem) - 1));
        }
        for (int j = 0; j < t; ++j) {
            const std::uint64_t col = c.col(elems[j])[w];
            acc &= (want >> j) & 1u ? col : ~col;
            if (!acc)
                break;
        }
        if (acc)
            return true;
    }
    return false;
}

inline bool shattered_via_columns(const Columns& c, const int* elems, int t)
{
    const unsigned total = 1u << t;
    for (unsigned want = 0; want < total; ++want)
        if (!pattern_nonempty(c, elems, t, want))
            return false;
    return true;
}

inline bool shattered_via_masks(const SetSystem& f, const std::vector<int>& elems)
{
    return is_shattered(f, elems);
}

inline bool subset_shattered(const SetSystem& f, const Columns& c, const std::vector<int>& elems)
{
    const int t = static_cast<int>(elems.size());
    if (t == 0)
        return f.set_count() > 0;
    if (t > 62 || static_cast<std::uint64_t>(f.set_count()) < (std::uint64_t{1} << t))
        return false;
    // Column route costs ~2^t * t * words; the mask route costs ~m * t.
    if (t <= 6 && (std::uint64_t{1} << t) * static_cast<std::uint64_t>(t) * c.words <= static_cast<std::uint64_t>(f.set_count()) * static_cast<std::uint64_t>(t) + 64)
        return shattered_via_columns(c, elems.data(), t);
    return shattered_via_masks(f, elems);
}

// Calls fn on every size-t subset of {0..n-1} in lexicographic order until fn
// returns true; reports whether a call returned true.
template <typename Fn>
inline bool for_each_combination(int n, int t, Fn&& fn)
{
    if (t > n)
        return false;
    std::vector<int> idx(static_cast<std::size_t>(t));
    for (int i = 0; i < t; ++i)
        idx[static_cast<std::size_t>(i)] = i;
    for (;;) {
        if (fn(static_cast<const std::vector<int>&>(idx)))
            return true;
        int i = t - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - t + i)
            --i;
        if (i < 0)
            return false;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < t; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

inline std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b)
{
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    return a > max - b ? max : a + b;
}

inline std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b)
{
    if (a == 0 || b == 0)
        return 0;
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    return a > max / b ? max : a * b;
}

inline std::uint64_t binomial_saturating(int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        r = saturating_mul(r, static_cast<std::uint64_t>(n - k + i));
        r /= static_cast<std::uint64_t>(i);
    }
    return r;
}

} // namespace detail

// Exact VC-dimension by increasing-size shattering search.  Shattering is
// downward closed, so the search stops at the first size with no shattered
// subset.  With `cap`, reports min(vc, cap) and marks the result capped when
// the search was cut off while still succeeding.  `approximate_prune`
// restricts level d+1 to supersets of the level-d witness; the result is then
// a lower bound and flagged approximate.
inline VcReport vc_dimension(const SetSystem& f, std::optional<int> cap = std::nullopt,
                             bool approximate_prune = false)
{
    detail::check(f.set_count() > 0, "vc_dimension: empty collection");
    const int n = f.universe_size();
    int limit = n;
    if (cap) {
        detail::check(*cap >= 0, "vc_dimension: cap must be non-negative");
        limit = std::min(limit, *cap);
    }
    const detail::Columns columns = detail::build_columns(f);

    VcReport report;
    report.approximate = approximate_prune;
    report.vc_dim = 0;
    report.witness = {};
    std::vector<int> probe;
    for (int d = 1; d <= limit; ++d) {
        bool found = false;
        std::vector<int> found_witness;
        if (approximate_prune && d > 1) {
            for (int e = 0; e < n && !found; ++e) {
                if (std::binary_search(report.witness.begin(), report.witness.end(), e))
                    continue;
                probe = report.witness;
                probe.insert(std::lower_bound(probe.begin(), probe.end(), e), e);
                if (detail::subset_shattered(f, columns, probe)) {
                    found = true;
                    found_witness = probe;
                }
            }
        } else {
            detail::for_each_combination(n, d, [&](const std::vector<int>& idx) {
                if (detail::subset_shattered(f, columns, idx)) {
                    found = true;
                    found_witness = idx;
                    return true;
                }
                return false;
            });
        }
        if (!found) {
            report.vc_dim = d - 1;
            return report;
        }
        report.vc_dim = d;
        report.witness = std::move(found_witness);
    }
    report.capped = cap.has_value() && limit < n;
    return report;
}

inline int dual_vc_dimension(const SetSystem& f, std::optional<int> cap = std::nullopt)
{
    return vc_dimension(dual(f), cap).vc_dim;
}

struct AlphaBetaProfile {
    int alpha = 0;
    long long beta = 0;
    std::vector<int> witness; // lexicographically smallest subset attaining beta
};

namespace detail {

inline long long projection_count(const SetSystem& f, const std::vector<int>& elems)
{
    const int t = static_cast<int>(elems.size());
    check(t <= 62, "projection_count: subset too large");
    std::vector<std::uint64_t> masks;
    masks.reserve(static_cast<std::size_t>(f.set_count()));
    for (int i = 0; i < f.set_count(); ++i) {
        std::uint64_t mask = 0;
        for (int j = 0; j < t; ++j)
            if (f.member(i, elems[static_cast<std::size_t>(j)]))
                mask |= std::uint64_t{1} << j;
        masks.push_back(mask);
    }
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    return static_cast<long long>(masks.size());
}

} // namespace detail

// beta = max |PR_F(A)| over |A| <= alpha.  Projection cardinality is monotone
// under subset inclusion, so scanning |A| = min(alpha, n) suffices.
inline AlphaBetaProfile alpha_beta_profile(const SetSystem& f, int alpha)
{
    detail::check(alpha >= 1, "alpha_beta_profile: alpha must be >= 1");
    detail::check(f.set_count() > 0, "alpha_beta_profile: empty collection");
    detail::check(alpha <= 62, "alpha_beta_profile: alpha too large");
    const int n = f.universe_size();
    const int t = std::min(alpha, n);

    AlphaBetaProfile profile;
    profile.alpha = alpha;
    profile.beta = 0;
    if (t == 0) {
        profile.beta = 1; // PR(empty) = {empty}
        return profile;
    }
    detail::for_each_combination(n, t, [&](const std::vector<int>& idx) {
        const long long count = detail::projection_count(f, idx);
        if (count > profile.beta) {
            profile.beta = count;
            profile.witness = idx;
        }
        return false;
    });
    return profile;
}

inline bool is_ab_system(const SetSystem& f, int alpha, long long beta)
{
    detail::check(alpha >= 1, "is_ab_system: alpha must be >= 1");
    detail::check(beta >= 1, "is_ab_system: beta must be >= 1");
    if (f.set_count() == 0)
        return true;
    return alpha_beta_profile(f, alpha).beta <= beta;
}

// |C| <= sum_{j=0..d} binom(|X|, j) with d the exact VC-dimension.  Always
// true for a correct implementation; a false return signals a bug.
inline bool sauer_shelah_check(const SetSystem& f)
{
    if (f.set_count() == 0)
        return true;
    const int d = vc_dimension(f).vc_dim;
    std::uint64_t bound = 0;
    for (int j = 0; j <= d; ++j)
        bound = detail::saturating_add(bound, detail::binomial_saturating(f.universe_size(), j));
    return static_cast<std::uint64_t>(f.set_count()) <= bound;
}

} // namespace hsvc
