#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

// Core set-system representation: a finite universe of elements 0..n-1 and a
// duplicate-free collection of subsets, stored in canonical form (each set
// strictly increasing, the collection sorted lexicographically).  All
// predicates here are pure functions over immutable inputs.

namespace hsvc {

class invalid_input : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class resource_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class internal_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

using ElementSet = std::vector<int>;

namespace detail {

inline void check(bool cond, const std::string& msg)
{
    if (!cond)
        throw invalid_input(msg);
}

inline void ensure(bool cond, const std::string& msg)
{
    if (!cond)
        throw internal_error(msg);
}

inline std::string join_ints(const std::vector<int>& v, char sep = ',')
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            out += sep;
        out += std::to_string(v[i]);
    }
    return out;
}

} // namespace detail

// Sorts and validates a list of element indices: indices must lie in
// [0, universe_size) and must not repeat.
inline ElementSet canonical_elements(std::vector<int> v, int universe_size, const char* what)
{
    std::sort(v.begin(), v.end());
    for (std::size_t i = 0; i < v.size(); ++i) {
        detail::check(v[i] >= 0 && v[i] < universe_size,
                      std::string(what) + ": element index " + std::to_string(v[i]) + " out of range [0," + std::to_string(universe_size) + ")");
        detail::check(i == 0 || v[i] != v[i - 1],
                      std::string(what) + ": repeated element " + std::to_string(v[i]));
    }
    return v;
}

class SetSystem {
public:
    SetSystem() = default;

    // Strict constructor: rejects duplicate sets.
    SetSystem(int universe_size, std::vector<std::vector<int>> raw_sets)
    {
        init(universe_size, std::move(raw_sets), false, nullptr);
    }

    // Lenient constructor: discards duplicate sets and reports how many were dropped.
    static SetSystem deduplicate(int universe_size, std::vector<std::vector<int>> raw_sets, int* dropped = nullptr)
    {
        SetSystem f;
        f.init(universe_size, std::move(raw_sets), true, dropped);
        return f;
    }

    int universe_size() const { return universe_size_; }
    int set_count() const { return static_cast<int>(sets_.size()); }
    const std::vector<ElementSet>& sets() const { return sets_; }

    const ElementSet& set_at(int id) const
    {
        detail::check(id >= 0 && id < set_count(), "set index " + std::to_string(id) + " out of range");
        return sets_[static_cast<std::size_t>(id)];
    }

    bool member(int set_id, int element) const
    {
        return (bits_[static_cast<std::size_t>(set_id) * words_ + static_cast<std::size_t>(element >> 6)] >> (element & 63)) & 1u;
    }

    // Position of a canonical set in the collection, or -1.
    int find_set(const ElementSet& canonical) const
    {
        auto it = std::lower_bound(sets_.begin(), sets_.end(), canonical);
        if (it != sets_.end() && *it == canonical)
            return static_cast<int>(it - sets_.begin());
        return -1;
    }

    // Canonical order puts the empty set first if present.
    bool contains_empty_set() const { return !sets_.empty() && sets_.front().empty(); }

    int element_degree(int element) const
    {
        detail::check(element >= 0 && element < universe_size_, "element index out of range");
        int d = 0;
        for (int i = 0; i < set_count(); ++i)
            d += member(i, element) ? 1 : 0;
        return d;
    }

    bool operator==(const SetSystem& other) const
    {
        return universe_size_ == other.universe_size_ && sets_ == other.sets_;
    }

    // Optional human-readable names; metadata only, ignored by comparisons.
    std::vector<std::string> element_labels;

private:
    void init(int universe_size, std::vector<std::vector<int>> raw_sets, bool lenient, int* dropped)
    {
        detail::check(universe_size >= 0, "universe size must be non-negative");
        universe_size_ = universe_size;
        sets_.reserve(raw_sets.size());
        for (auto& raw : raw_sets)
            sets_.push_back(canonical_elements(std::move(raw), universe_size_, "set"));
        std::sort(sets_.begin(), sets_.end());
        if (lenient) {
            auto last = std::unique(sets_.begin(), sets_.end());
            if (dropped)
                *dropped = static_cast<int>(sets_.end() - last);
            sets_.erase(last, sets_.end());
        } else {
            for (std::size_t i = 1; i < sets_.size(); ++i)
                detail::check(sets_[i] != sets_[i - 1],
                              "duplicate set {" + detail::join_ints(sets_[i]) + "}");
        }
        build_bits();
    }

    void build_bits()
    {
        words_ = static_cast<std::size_t>((universe_size_ + 63) / 64);
        if (words_ == 0)
            words_ = 1;
        bits_.assign(sets_.size() * words_, 0);
        for (std::size_t i = 0; i < sets_.size(); ++i)
            for (int e : sets_[i])
                bits_[i * words_ + static_cast<std::size_t>(e >> 6)] |= std::uint64_t{1} << (e & 63);
    }

    int universe_size_ = 0;
    std::size_t words_ = 1;
    std::vector<ElementSet> sets_;
    std::vector<std::uint64_t> bits_;
};

// Fixed-length 0/1 pattern, as realized by tuples of distinct elements.
class Pattern {
public:
    explicit Pattern(std::string_view bits)
    {
        detail::check(!bits.empty(), "pattern must have length >= 1");
        bits_.reserve(bits.size());
        for (char c : bits) {
            detail::check(c == '0' || c == '1', "pattern may contain only 0 and 1");
            bits_.push_back(c == '1');
        }
    }

    explicit Pattern(std::vector<bool> bits)
        : bits_(std::move(bits))
    {
        detail::check(!bits_.empty(), "pattern must have length >= 1");
    }

    int length() const { return static_cast<int>(bits_.size()); }
    bool bit(int i) const { return bits_[static_cast<std::size_t>(i)]; }

    std::string to_string() const
    {
        std::string s;
        for (bool b : bits_)
            s += b ? '1' : '0';
        return s;
    }

private:
    std::vector<bool> bits_;
};

struct HittingSet {
    ElementSet elements; // sorted element indices

    int size() const { return static_cast<int>(elements.size()); }
};

// PR_F(A) = { R cap A : R in C }, deduplicated, members canonical, family sorted.
inline std::vector<ElementSet> projection(const SetSystem& f, std::vector<int> a)
{
    ElementSet A = canonical_elements(std::move(a), f.universe_size(), "projection");
    std::vector<ElementSet> out;
    out.reserve(static_cast<std::size_t>(f.set_count()));
    ElementSet inter;
    for (const ElementSet& r : f.sets()) {
        inter.clear();
        std::set_intersection(r.begin(), r.end(), A.begin(), A.end(), std::back_inserter(inter));
        out.push_back(inter);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// A is shattered iff |PR_F(A)| = 2^|A|.
inline bool is_shattered(const SetSystem& f, std::vector<int> a)
{
    ElementSet A = canonical_elements(std::move(a), f.universe_size(), "is_shattered");
    const int t = static_cast<int>(A.size());
    const int m = f.set_count();
    // |PR(A)| <= m, so shattering needs m >= 2^t.
    if (t > 62 || (t >= 0 && static_cast<std::uint64_t>(m) < (std::uint64_t{1} << t)))
        return false;
    std::vector<std::uint64_t> masks;
    masks.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        std::uint64_t mask = 0;
        for (int j = 0; j < t; ++j)
            if (f.member(i, A[static_cast<std::size_t>(j)]))
                mask |= std::uint64_t{1} << j;
        masks.push_back(mask);
    }
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    return masks.size() == (std::uint64_t{1} << t);
}

// (b_1..b_t) realizes p_1..p_t iff some set R has R cap {b_1..b_t} = {b_i : p_i = 1}.
inline bool realizes_pattern(const SetSystem& f, const std::vector<int>& tuple, const Pattern& p)
{
    detail::check(static_cast<int>(tuple.size()) == p.length(),
                  "tuple length " + std::to_string(tuple.size()) + " does not match pattern length " + std::to_string(p.length()));
    canonical_elements(tuple, f.universe_size(), "realizes_pattern"); // validates range and distinctness
    const int t = static_cast<int>(tuple.size());
    for (int i = 0; i < f.set_count(); ++i) {
        bool match = true;
        for (int j = 0; j < t && match; ++j)
            match = f.member(i, tuple[static_cast<std::size_t>(j)]) == p.bit(j);
        if (match)
            return true;
    }
    return false;
}

// Transposed system: universe = sets of f, one dual set per element of f
// (the element's membership profile), duplicate profiles discarded.
inline SetSystem dual(const SetSystem& f)
{
    const int m = f.set_count();
    std::vector<std::vector<int>> rows;
    rows.reserve(static_cast<std::size_t>(f.universe_size()));
    for (int e = 0; e < f.universe_size(); ++e) {
        std::vector<int> profile;
        for (int i = 0; i < m; ++i)
            if (f.member(i, e))
                profile.push_back(i);
        rows.push_back(std::move(profile));
    }
    return SetSystem::deduplicate(m, std::move(rows));
}

// True iff every member of C intersects S.  The empty set defeats every S.
inline bool verify_hitting_set(const SetSystem& f, std::vector<int> s)
{
    ElementSet S = canonical_elements(std::move(s), f.universe_size(), "verify_hitting_set");
    for (const ElementSet& r : f.sets()) {
        ElementSet inter;
        bool hit = false;
        auto it = r.begin();
        for (int e : S) {
            it = std::lower_bound(it, r.end(), e);
            if (it != r.end() && *it == e) {
                hit = true;
                break;
            }
        }
        if (!hit)
            return false;
    }
    return true;
}

} // namespace hsvc
