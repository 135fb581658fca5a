#pragma once

// Independent brute-force oracles used to validate the library.  These
// deliberately reimplement everything from first principles (naive subset
// enumeration, set-of-sets projections, DP matching) and never call the
// library routine they are checking.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "hsvc/matching.hpp"
#include "hsvc/reductions.hpp"
#include "hsvc/set_system.hpp"

namespace oracle {

// ---- set-system primitives ------------------------------------------------

inline std::set<std::set<int>> naive_projection(const hsvc::SetSystem& f, const std::vector<int>& a)
{
    std::set<int> A(a.begin(), a.end());
    std::set<std::set<int>> out;
    for (const auto& r : f.sets()) {
        std::set<int> inter;
        for (int e : r)
            if (A.count(e))
                inter.insert(e);
        out.insert(inter);
    }
    return out;
}

inline bool naive_shattered(const hsvc::SetSystem& f, const std::vector<int>& a)
{
    const std::size_t want = std::size_t{1} << a.size();
    return naive_projection(f, a).size() == want;
}

// Largest shattered subset by scanning all 2^n subsets (n <= ~16).
inline int naive_vc_dimension(const hsvc::SetSystem& f)
{
    const int n = f.universe_size();
    int best = -1;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
        std::vector<int> subset;
        for (int e = 0; e < n; ++e)
            if (mask >> e & 1)
                subset.push_back(e);
        if (static_cast<int>(subset.size()) <= best)
            continue;
        if (naive_shattered(f, subset))
            best = static_cast<int>(subset.size());
    }
    return best;
}

// Lexicographically smallest shattered subset of maximum size.
inline std::vector<int> naive_vc_witness(const hsvc::SetSystem& f)
{
    const int n = f.universe_size();
    const int d = naive_vc_dimension(f);
    std::vector<std::vector<int>> candidates;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
        std::vector<int> subset;
        for (int e = 0; e < n; ++e)
            if (mask >> e & 1)
                subset.push_back(e);
        if (static_cast<int>(subset.size()) == d && naive_shattered(f, subset))
            candidates.push_back(subset);
    }
    return *std::min_element(candidates.begin(), candidates.end());
}

inline bool naive_verify_hitting(const hsvc::SetSystem& f, const std::vector<int>& s)
{
    std::set<int> S(s.begin(), s.end());
    for (const auto& r : f.sets()) {
        bool hit = false;
        for (int e : r)
            if (S.count(e))
                hit = true;
        if (!hit)
            return false;
    }
    return true;
}

// Minimum hitting set size by full subset enumeration (n <= ~16); -1 when no
// hitting set exists (empty member).
inline int naive_min_hitting_size(const hsvc::SetSystem& f)
{
    const int n = f.universe_size();
    int best = -1;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
        std::vector<int> subset;
        for (int e = 0; e < n; ++e)
            if (mask >> e & 1)
                subset.push_back(e);
        if (naive_verify_hitting(f, subset))
            if (best == -1 || static_cast<int>(subset.size()) < best)
                best = static_cast<int>(subset.size());
    }
    return best;
}

// ---- hitting set decision by exhaustive branching --------------------------

// Decides whether a hitting set of size <= budget exists, by branching over
// the elements of a smallest unhit set.  Complete: every hitting set meets
// the chosen set.  Used where plain subset enumeration is hopeless.
struct BranchDecider {
    const hsvc::SetSystem& f;
    long long nodes = 0;
    long long node_cap;

    BranchDecider(const hsvc::SetSystem& system, long long cap = 200'000'000)
        : f(system)
        , node_cap(cap)
    {
    }

    bool decide(int budget)
    {
        if (f.contains_empty_set())
            return false;
        std::vector<char> hit(static_cast<std::size_t>(f.set_count()), 0);
        return recurse(hit, budget);
    }

    bool recurse(std::vector<char>& hit, int budget)
    {
        if (++nodes > node_cap)
            throw hsvc::resource_error("branch decider node cap exceeded");
        int pick = -1;
        std::size_t pick_size = 0;
        for (int s = 0; s < f.set_count(); ++s) {
            if (hit[static_cast<std::size_t>(s)])
                continue;
            const std::size_t size = f.set_at(s).size();
            if (pick == -1 || size < pick_size) {
                pick = s;
                pick_size = size;
            }
        }
        if (pick == -1)
            return true;
        if (budget == 0 || pick_size == 0)
            return false;
        for (int e : f.set_at(pick)) {
            std::vector<int> flipped;
            for (int s = 0; s < f.set_count(); ++s)
                if (!hit[static_cast<std::size_t>(s)] && f.member(s, e)) {
                    hit[static_cast<std::size_t>(s)] = 1;
                    flipped.push_back(s);
                }
            if (recurse(hit, budget - 1))
                return true;
            for (int s : flipped)
                hit[static_cast<std::size_t>(s)] = 0;
        }
        return false;
    }
};

inline bool hitting_set_of_size_exists(const hsvc::SetSystem& f, int budget)
{
    BranchDecider decider(f);
    return decider.decide(budget);
}

// ---- graphs ----------------------------------------------------------------

// Maximum matching size by DP over vertex subsets (n <= ~20).
inline int naive_max_matching(const hsvc::SimpleGraph& g)
{
    const int n = g.vertex_count();
    std::vector<int> memo(std::size_t{1} << n, -1);
    memo[0] = 0;
    auto rec = [&](auto&& self, std::uint32_t alive) -> int {
        if (memo[alive] != -1)
            return memo[alive];
        int v = -1;
        for (int i = 0; i < n; ++i)
            if (alive >> i & 1) {
                v = i;
                break;
            }
        int best = self(self, alive & ~(std::uint32_t{1} << v)); // leave v unmatched
        for (auto [w, id] : g.neighbors(v))
            if (alive >> w & 1)
                best = std::max(best, 1 + self(self, alive & ~(std::uint32_t{1} << v) & ~(std::uint32_t{1} << w)));
        memo[alive] = best;
        return best;
    };
    return rec(rec, (std::uint32_t{1} << n) - 1);
}

// Minimum vertex cover size by branching on an uncovered edge.
inline int naive_min_vertex_cover(const hsvc::SimpleGraph& g)
{
    std::vector<char> removed(static_cast<std::size_t>(g.vertex_count()), 0);
    auto rec = [&](auto&& self) -> int {
        int eu = -1, ev = -1;
        for (auto [u, v] : g.edges())
            if (!removed[static_cast<std::size_t>(u)] && !removed[static_cast<std::size_t>(v)]) {
                eu = u;
                ev = v;
                break;
            }
        if (eu == -1)
            return 0;
        removed[static_cast<std::size_t>(eu)] = 1;
        const int with_u = 1 + self(self);
        removed[static_cast<std::size_t>(eu)] = 0;
        removed[static_cast<std::size_t>(ev)] = 1;
        const int with_v = 1 + self(self);
        removed[static_cast<std::size_t>(ev)] = 0;
        return std::min(with_u, with_v);
    };
    return rec(rec);
}

inline bool has_triangle(const hsvc::SimpleGraph& g)
{
    for (auto [u, v] : g.edges())
        for (int w = 0; w < g.vertex_count(); ++w)
            if (w != u && w != v && g.edge_id(u, w) != -1 && g.edge_id(v, w) != -1)
                return true;
    return false;
}

// ---- partitioned subgraph isomorphism --------------------------------------

// Exhaustive embedding search over one host vertex per part.
inline bool psi_embedding_exists(const hsvc::PsiInstance& inst)
{
    const int k = inst.pattern.vertex_count();
    const auto parts = inst.part_vertices();
    std::vector<int> choice(static_cast<std::size_t>(k), -1);
    auto rec = [&](auto&& self, int i) -> bool {
        if (i == k) {
            for (auto [a, b] : inst.pattern.edges())
                if (inst.host.edge_id(choice[static_cast<std::size_t>(a)], choice[static_cast<std::size_t>(b)]) == -1)
                    return false;
            return true;
        }
        if (parts[static_cast<std::size_t>(i)].empty())
            return false;
        for (int u : parts[static_cast<std::size_t>(i)]) {
            choice[static_cast<std::size_t>(i)] = u;
            if (self(self, i + 1))
                return true;
        }
        return false;
    };
    return rec(rec, 0);
}

inline std::optional<std::vector<int>> psi_find_embedding(const hsvc::PsiInstance& inst)
{
    const int k = inst.pattern.vertex_count();
    const auto parts = inst.part_vertices();
    std::vector<int> choice(static_cast<std::size_t>(k), -1);
    std::optional<std::vector<int>> found;
    auto rec = [&](auto&& self, int i) -> bool {
        if (i == k) {
            for (auto [a, b] : inst.pattern.edges())
                if (inst.host.edge_id(choice[static_cast<std::size_t>(a)], choice[static_cast<std::size_t>(b)]) == -1)
                    return false;
            found = choice;
            return true;
        }
        if (parts[static_cast<std::size_t>(i)].empty())
            return false;
        for (int u : parts[static_cast<std::size_t>(i)]) {
            choice[static_cast<std::size_t>(i)] = u;
            if (self(self, i + 1))
                return true;
        }
        return false;
    };
    rec(rec, 0);
    return found;
}

} // namespace oracle
