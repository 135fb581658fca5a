#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "hsvc/matching.hpp"
#include "hsvc/set_system.hpp"
#include "hsvc/vc.hpp"

// Exact Hitting Set solvers: a brute-force oracle, the two VC-dimension-1
// procedures, the (3,5)-system algorithm (preprocessing steps 0-5 followed by
// a minimum edge cover), a dispatcher, and a greedy baseline.

namespace hsvc {

enum class SolveStatus {
    Solved,
    NoSolution,
    NotApplicable,
};

inline const char* to_string(SolveStatus s)
{
    switch (s) {
    case SolveStatus::Solved: return "solved";
    case SolveStatus::NoSolution: return "no_solution";
    case SolveStatus::NotApplicable: return "not_applicable";
    }
    return "unknown";
}

// One applied preprocessing step.  `elements` and `sets` list the original
// indices deleted by the step; replaying all entries against the input
// reproduces the fixpoint system.
struct TraceEntry {
    int step = 0;
    std::vector<int> elements;
    std::vector<int> sets;
    std::string detail; // rendered suffix for the "step <id> <detail>" line
};

struct SolveResult {
    SolveStatus status = SolveStatus::NotApplicable;
    std::optional<HittingSet> solution;
    std::vector<TraceEntry> trace;
    std::string algorithm;
    bool exact = true;
    std::string failure; // guard violation or search-limit description
};

struct PreprocessState {
    SetSystem current;
    std::vector<int> element_map;      // current element index -> original element index
    std::vector<int> set_map;          // current set index -> original set index
    std::vector<int> forced;           // original elements committed to the solution
    std::vector<int> removed_elements; // original elements deleted from the universe
    std::vector<int> removed_sets;     // original sets deleted from the collection
    std::vector<TraceEntry> trace;
};

struct PreprocessResult {
    PreprocessState state;
    bool early_answer = false; // a component was closed by the step-1 bounded search
};

struct PreprocessOptions {
    bool guard = true;                     // verify the (3,5) property before running
    bool check_35_after_each_step = false; // assert the property after every mutation
};

inline std::string format_trace(const std::vector<TraceEntry>& trace)
{
    std::string out;
    for (const TraceEntry& e : trace) {
        out += "step " + std::to_string(e.step);
        if (!e.detail.empty()) {
            out += ' ';
            out += e.detail;
        }
        out += '\n';
    }
    return out;
}

// True iff every set containing y also contains x (pattern 01 not realized
// on (x, y)).  Vacuously true when y occurs in no set.
inline bool dominates(const SetSystem& f, int x, int y)
{
    detail::check(x != y, "dominates: x and y must differ");
    detail::check(x >= 0 && x < f.universe_size() && y >= 0 && y < f.universe_size(),
                  "dominates: element index out of range");
    for (int i = 0; i < f.set_count(); ++i)
        if (f.member(i, y) && !f.member(i, x))
            return false;
    return true;
}

// Minimum hitting set by increasing-size subset enumeration.  The reference
// oracle for all other solvers; exponential, so guarded by a universe bound.
inline SolveResult brute_force_min_hitting_set(const SetSystem& f,
                                               std::optional<int> size_cap = std::nullopt,
                                               int oracle_bound = 20,
                                               bool override_bound = false)
{
    SolveResult result;
    result.algorithm = "brute";
    const int n = f.universe_size();
    if (n > oracle_bound && !override_bound)
        throw resource_error("brute force oracle: universe size " + std::to_string(n) + " exceeds bound " + std::to_string(oracle_bound));
    if (n > 62)
        throw resource_error("brute force oracle: universe size " + std::to_string(n) + " exceeds 62");
    if (f.contains_empty_set()) {
        result.status = SolveStatus::NoSolution;
        return result;
    }
    std::vector<std::uint64_t> set_masks;
    set_masks.reserve(static_cast<std::size_t>(f.set_count()));
    for (const ElementSet& r : f.sets()) {
        std::uint64_t mask = 0;
        for (int e : r)
            mask |= std::uint64_t{1} << e;
        set_masks.push_back(mask);
    }
    int limit = n;
    if (size_cap) {
        detail::check(*size_cap >= 0, "size cap must be non-negative");
        limit = std::min(limit, *size_cap);
    }
    for (int s = 0; s <= limit; ++s) {
        std::optional<std::vector<int>> found;
        detail::for_each_combination(n, s, [&](const std::vector<int>& idx) {
            std::uint64_t candidate = 0;
            for (int e : idx)
                candidate |= std::uint64_t{1} << e;
            for (std::uint64_t mask : set_masks)
                if (!(mask & candidate))
                    return false;
            found = idx;
            return true;
        });
        if (found) {
            result.status = SolveStatus::Solved;
            result.solution = HittingSet{std::move(*found)};
            return result;
        }
    }
    result.status = SolveStatus::NotApplicable;
    result.failure = "no hitting set of size <= " + std::to_string(limit);
    return result;
}

namespace detail {

// Mutable working copy of a set system, indexed by original element/set ids.
// Alive elements keep their original membership, so predicates can consult
// the original incidence; member lists shrink as elements are deleted.
struct Working {
    const SetSystem* original = nullptr;
    std::vector<char> elem_alive;
    std::vector<char> set_alive;
    std::vector<ElementSet> members;

    explicit Working(const SetSystem& f)
        : original(&f)
        , elem_alive(static_cast<std::size_t>(f.universe_size()), 1)
        , set_alive(static_cast<std::size_t>(f.set_count()), 1)
        , members(f.sets())
    {
    }

    bool contains(int set_id, int element) const
    {
        return set_alive[static_cast<std::size_t>(set_id)] && elem_alive[static_cast<std::size_t>(element)]
            && original->member(set_id, element);
    }

    void kill_set(int set_id) { set_alive[static_cast<std::size_t>(set_id)] = 0; }

    // Deletes y from the universe and from every alive set; merges sets that
    // become identical, keeping the smaller id.  Returns ids of merged-away sets.
    std::vector<int> erase_element(int y)
    {
        elem_alive[static_cast<std::size_t>(y)] = 0;
        std::vector<int> shrunk;
        for (std::size_t s = 0; s < members.size(); ++s) {
            if (!set_alive[s])
                continue;
            auto& m = members[s];
            auto it = std::lower_bound(m.begin(), m.end(), y);
            if (it != m.end() && *it == y) {
                m.erase(it);
                shrunk.push_back(static_cast<int>(s));
            }
        }
        std::vector<int> collapsed;
        for (int s : shrunk) {
            if (!set_alive[static_cast<std::size_t>(s)])
                continue;
            for (std::size_t t = 0; t < members.size(); ++t) {
                if (static_cast<int>(t) == s || !set_alive[t])
                    continue;
                if (members[t] == members[static_cast<std::size_t>(s)]) {
                    const int victim = std::max(s, static_cast<int>(t));
                    kill_set(victim);
                    collapsed.push_back(victim);
                }
            }
        }
        std::sort(collapsed.begin(), collapsed.end());
        return collapsed;
    }

    // Alive sets containing x, ascending.
    std::vector<int> sets_containing(int x) const
    {
        std::vector<int> out;
        for (std::size_t s = 0; s < members.size(); ++s)
            if (set_alive[s] && original->member(static_cast<int>(s), x))
                out.push_back(static_cast<int>(s));
        return out;
    }

    SetSystem materialize(std::vector<int>* element_map, std::vector<int>* set_map) const
    {
        std::vector<int> emap;
        for (int e = 0; e < original->universe_size(); ++e)
            if (elem_alive[static_cast<std::size_t>(e)])
                emap.push_back(e);
        std::vector<int> reindex(static_cast<std::size_t>(original->universe_size()), -1);
        for (std::size_t i = 0; i < emap.size(); ++i)
            reindex[static_cast<std::size_t>(emap[i])] = static_cast<int>(i);
        std::vector<std::vector<int>> dense_sets;
        std::vector<int> alive_ids;
        for (std::size_t s = 0; s < members.size(); ++s) {
            if (!set_alive[s])
                continue;
            std::vector<int> remapped;
            remapped.reserve(members[s].size());
            for (int e : members[s])
                remapped.push_back(reindex[static_cast<std::size_t>(e)]);
            dense_sets.push_back(std::move(remapped));
            alive_ids.push_back(static_cast<int>(s));
        }
        SetSystem current(static_cast<int>(emap.size()), dense_sets);
        if (set_map) {
            set_map->assign(dense_sets.size(), -1);
            for (std::size_t i = 0; i < dense_sets.size(); ++i) {
                std::vector<int> canon = dense_sets[i];
                std::sort(canon.begin(), canon.end());
                (*set_map)[static_cast<std::size_t>(current.find_set(canon))] = alive_ids[i];
            }
        }
        if (element_map)
            *element_map = std::move(emap);
        return current;
    }

    std::string dump() const
    {
        std::string out = "universe:";
        for (std::size_t e = 0; e < elem_alive.size(); ++e)
            if (elem_alive[e])
                out += ' ' + std::to_string(e);
        out += "; sets:";
        for (std::size_t s = 0; s < members.size(); ++s)
            if (set_alive[s])
                out += " {" + join_ints(members[s]) + "}";
        return out;
    }
};

// The (3,5) preprocessing engine.  Scopes are element/set id lists; step 0
// recursion partitions the scope along incidence-graph components.
struct PreprocessEngine {
    Working work;
    std::vector<int> forced;
    std::vector<int> removed_elements;
    std::vector<int> removed_sets;
    std::vector<TraceEntry> trace;
    bool early_answer = false;
    bool check_35 = false;

    explicit PreprocessEngine(const SetSystem& f, bool check)
        : work(f)
        , check_35(check)
    {
    }

    std::vector<int> alive_sets(const std::vector<int>& scope_sets) const
    {
        std::vector<int> out;
        for (int s : scope_sets)
            if (work.set_alive[static_cast<std::size_t>(s)])
                out.push_back(s);
        return out;
    }

    std::vector<int> alive_elems(const std::vector<int>& scope_elems) const
    {
        std::vector<int> out;
        for (int e : scope_elems)
            if (work.elem_alive[static_cast<std::size_t>(e)])
                out.push_back(e);
        return out;
    }

    void assert_35_if_requested()
    {
        if (!check_35)
            return;
        SetSystem current = work.materialize(nullptr, nullptr);
        if (!is_ab_system(current, 3, 5))
            throw internal_error("(3,5) property lost after a preprocessing step; system: " + work.dump());
    }

    void delete_scope(const std::vector<int>& elems, const std::vector<int>& sets,
                      const std::vector<int>& keep_as_forced)
    {
        for (int s : sets) {
            work.kill_set(s);
            removed_sets.push_back(s);
        }
        for (int e : elems) {
            work.elem_alive[static_cast<std::size_t>(e)] = 0;
            if (std::find(keep_as_forced.begin(), keep_as_forced.end(), e) == keep_as_forced.end())
                removed_elements.push_back(e);
        }
    }

    // Exhaustive search over scope subsets of size <= max_size; returns the
    // lexicographically first minimum hitting set of the scope, if any.
    std::optional<std::vector<int>> bounded_search(const std::vector<int>& elems,
                                                   const std::vector<int>& sets, int max_size)
    {
        const int n = static_cast<int>(elems.size());
        for (int size = 0; size <= std::min(max_size, n); ++size) {
            std::optional<std::vector<int>> found;
            for_each_combination(n, size, [&](const std::vector<int>& idx) {
                std::vector<int> candidate;
                candidate.reserve(idx.size());
                for (int i : idx)
                    candidate.push_back(elems[static_cast<std::size_t>(i)]);
                for (int s : sets) {
                    bool hit = false;
                    for (int e : candidate)
                        if (work.original->member(s, e)) {
                            hit = true;
                            break;
                        }
                    if (!hit)
                        return false;
                }
                found = candidate;
                return true;
            });
            if (found)
                return found;
        }
        return std::nullopt;
    }

    // Incidence-graph components among the scope's alive sets; each component
    // is (element ids, set ids), ordered by smallest set id.
    std::vector<std::pair<std::vector<int>, std::vector<int>>>
    components(const std::vector<int>& elems, const std::vector<int>& sets) const
    {
        std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
        std::vector<char> set_seen(work.members.size(), 0);
        std::vector<char> elem_seen(work.elem_alive.size(), 0);
        for (int s0 : sets) {
            if (set_seen[static_cast<std::size_t>(s0)])
                continue;
            std::vector<int> comp_sets, comp_elems, stack = {s0};
            set_seen[static_cast<std::size_t>(s0)] = 1;
            while (!stack.empty()) {
                const int s = stack.back();
                stack.pop_back();
                comp_sets.push_back(s);
                for (int e : work.members[static_cast<std::size_t>(s)]) {
                    if (elem_seen[static_cast<std::size_t>(e)])
                        continue;
                    elem_seen[static_cast<std::size_t>(e)] = 1;
                    comp_elems.push_back(e);
                    for (int t : sets) {
                        if (set_seen[static_cast<std::size_t>(t)])
                            continue;
                        if (work.original->member(t, e)) {
                            set_seen[static_cast<std::size_t>(t)] = 1;
                            stack.push_back(t);
                        }
                    }
                }
            }
            std::sort(comp_sets.begin(), comp_sets.end());
            std::sort(comp_elems.begin(), comp_elems.end());
            out.emplace_back(std::move(comp_elems), std::move(comp_sets));
        }
        // Elements in no alive set join the first component so that step 2
        // can discard them as dominated.
        if (!out.empty()) {
            for (int e : elems) {
                if (!elem_seen[static_cast<std::size_t>(e)]) {
                    out.front().first.push_back(e);
                    elem_seen[static_cast<std::size_t>(e)] = 1;
                }
            }
            std::sort(out.front().first.begin(), out.front().first.end());
        }
        return out;
    }

    bool triple_realizes_000(int x, int y, int z, const std::vector<int>& sets) const
    {
        for (int s : sets) {
            if (!work.original->member(s, x) && !work.original->member(s, y) && !work.original->member(s, z))
                return true;
        }
        return false;
    }

    int degree(int e, const std::vector<int>& sets) const
    {
        int d = 0;
        for (int s : sets)
            d += work.original->member(s, e) ? 1 : 0;
        return d;
    }

    void close_scope_with_answer(const std::vector<int>& elems, const std::vector<int>& sets,
                                 const std::vector<int>& answer, const std::string& detail_text)
    {
        TraceEntry entry;
        entry.step = 1;
        entry.elements = elems;
        entry.sets = sets;
        entry.detail = detail_text;
        trace.push_back(std::move(entry));
        for (int e : answer)
            forced.push_back(e);
        delete_scope(elems, sets, answer);
        early_answer = true;
    }

    void run(std::vector<int> scope_elems, std::vector<int> scope_sets)
    {
        for (;;) {
            const std::vector<int> sets = alive_sets(scope_sets);
            if (sets.empty())
                return;
            const std::vector<int> elems = alive_elems(scope_elems);

            // step 0: decompose along incidence components and recurse
            auto comps = components(elems, sets);
            if (comps.size() > 1) {
                TraceEntry entry;
                entry.step = 0;
                entry.detail = "components=" + std::to_string(comps.size());
                trace.push_back(std::move(entry));
                for (auto& [comp_elems, comp_sets] : comps)
                    run(comp_elems, comp_sets);
                return;
            }

            // step 1: a triple on which pattern 000 is not realized caps the
            // optimum at 3; close the component by bounded search
            if (elems.size() >= 3) {
                bool applied = false;
                for (std::size_t a = 0; a < elems.size() && !applied; ++a)
                    for (std::size_t b = a + 1; b < elems.size() && !applied; ++b)
                        for (std::size_t c = b + 1; c < elems.size() && !applied; ++c) {
                            if (triple_realizes_000(elems[a], elems[b], elems[c], sets))
                                continue;
                            auto answer = bounded_search(elems, sets, 3);
                            ensure(answer.has_value(), "step 1: bounded search failed on a 000-free triple");
                            close_scope_with_answer(elems, sets, *answer,
                                                    "triple=" + join_ints({elems[a] + 1, elems[b] + 1, elems[c] + 1})
                                                        + " chose=" + join_ints_plus_one(*answer));
                            applied = true;
                        }
                if (applied) {
                    assert_35_if_requested();
                    continue;
                }
            }

            // step 2: delete a dominated element
            if (apply_domination(elems, sets)) {
                assert_35_if_requested();
                continue;
            }

            // step 3: delete a superset
            if (apply_superset_removal(sets)) {
                assert_35_if_requested();
                continue;
            }

            // step 4: a singleton set forces its element
            if (apply_singleton(sets)) {
                assert_35_if_requested();
                continue;
            }

            // step 5: an element in three or more sets is forced (only
            // reachable when steps 0-4 are inapplicable)
            if (apply_high_degree(elems, sets)) {
                assert_35_if_requested();
                continue;
            }

            // small-universe fallback: with fewer than 3 elements no triple
            // exists, solve the remainder directly
            if (elems.size() < 3) {
                auto answer = bounded_search(elems, sets, 2);
                ensure(answer.has_value(), "small-universe fallback found no hitting set");
                close_scope_with_answer(elems, sets, *answer,
                                        "small-universe fallback chose=" + join_ints_plus_one(*answer));
                assert_35_if_requested();
                continue;
            }

            // fixpoint: Edge Cover shape is guaranteed here
            for (int e : elems) {
                const int d = degree(e, sets);
                ensure(d == 2, "fixpoint violation: element " + std::to_string(e) + " has degree "
                                   + std::to_string(d) + "; system: " + work.dump());
            }
            for (std::size_t i = 0; i < sets.size(); ++i)
                for (std::size_t j = i + 1; j < sets.size(); ++j) {
                    const auto& a = work.members[static_cast<std::size_t>(sets[i])];
                    const auto& b = work.members[static_cast<std::size_t>(sets[j])];
                    ElementSet inter;
                    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(inter));
                    ensure(inter.size() <= 1, "fixpoint violation: sets " + std::to_string(sets[i]) + " and "
                                                  + std::to_string(sets[j]) + " share " + std::to_string(inter.size())
                                                  + " elements; system: " + work.dump());
                }
            return;
        }
    }

    static std::string join_ints_plus_one(const std::vector<int>& v)
    {
        std::vector<int> shifted;
        shifted.reserve(v.size());
        for (int x : v)
            shifted.push_back(x + 1);
        return join_ints(shifted);
    }

    bool apply_domination(const std::vector<int>& elems, const std::vector<int>& sets)
    {
        for (int x : elems) {
            for (int y : elems) {
                if (x == y)
                    continue;
                bool dominated = true;
                for (int s : sets)
                    if (work.original->member(s, y) && !work.original->member(s, x)) {
                        dominated = false;
                        break;
                    }
                if (!dominated)
                    continue;
                bool mutual = true;
                for (int s : sets)
                    if (work.original->member(s, x) && !work.original->member(s, y)) {
                        mutual = false;
                        break;
                    }
                const int victim = mutual ? std::max(x, y) : y;
                const int keeper = victim == x ? y : x;
                TraceEntry entry;
                entry.step = 2;
                entry.elements = {victim};
                entry.sets = work.erase_element(victim);
                for (int s : entry.sets)
                    removed_sets.push_back(s);
                removed_elements.push_back(victim);
                entry.detail = "removed=" + std::to_string(victim + 1) + " dominated_by=" + std::to_string(keeper + 1);
                if (!entry.sets.empty())
                    entry.detail += " collapsed=" + join_ints_plus_one(entry.sets);
                trace.push_back(std::move(entry));
                return true;
            }
        }
        return false;
    }

    bool apply_superset_removal(const std::vector<int>& sets)
    {
        for (int i : sets) {
            if (!work.set_alive[static_cast<std::size_t>(i)])
                continue;
            for (int j : sets) {
                if (i == j || !work.set_alive[static_cast<std::size_t>(j)])
                    continue;
                const auto& a = work.members[static_cast<std::size_t>(i)];
                const auto& b = work.members[static_cast<std::size_t>(j)];
                if (a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end())) {
                    work.kill_set(j);
                    removed_sets.push_back(j);
                    TraceEntry entry;
                    entry.step = 3;
                    entry.sets = {j};
                    entry.detail = "removed_set=" + std::to_string(j + 1) + " superset_of=" + std::to_string(i + 1);
                    trace.push_back(std::move(entry));
                    return true;
                }
            }
        }
        return false;
    }

    bool force(int x, int step, const std::string& reason)
    {
        const std::vector<int> dying = work.sets_containing(x);
        forced.push_back(x);
        for (int s : dying) {
            work.kill_set(s);
            removed_sets.push_back(s);
        }
        work.elem_alive[static_cast<std::size_t>(x)] = 0;
        TraceEntry entry;
        entry.step = step;
        entry.elements = {x};
        entry.sets = dying;
        entry.detail = "forced=" + std::to_string(x + 1) + ' ' + reason + " removed_sets=" + join_ints_plus_one(dying);
        trace.push_back(std::move(entry));
        return true;
    }

    bool apply_singleton(const std::vector<int>& sets)
    {
        for (int s : sets) {
            if (!work.set_alive[static_cast<std::size_t>(s)])
                continue;
            if (work.members[static_cast<std::size_t>(s)].size() == 1)
                return force(work.members[static_cast<std::size_t>(s)][0], 4,
                             "singleton_set=" + std::to_string(s + 1));
        }
        return false;
    }

    bool apply_high_degree(const std::vector<int>& elems, const std::vector<int>& sets)
    {
        for (int e : elems) {
            const int d = degree(e, sets);
            if (d >= 3)
                return force(e, 5, "degree=" + std::to_string(d));
        }
        return false;
    }
};

} // namespace detail

inline PreprocessResult preprocess_35(const SetSystem& f, const PreprocessOptions& options = {})
{
    detail::check(!f.contains_empty_set(), "preprocess_35: collection contains the empty set");
    if (options.guard && f.set_count() > 0 && !is_ab_system(f, 3, 5)) {
        const AlphaBetaProfile profile = alpha_beta_profile(f, 3);
        throw invalid_input("preprocess_35: not a (3,5)-system; projection on {"
                            + detail::join_ints(profile.witness) + "} has " + std::to_string(profile.beta)
                            + " members");
    }
    detail::PreprocessEngine engine(f, options.check_35_after_each_step);
    std::vector<int> all_elems(static_cast<std::size_t>(f.universe_size()));
    for (int e = 0; e < f.universe_size(); ++e)
        all_elems[static_cast<std::size_t>(e)] = e;
    std::vector<int> all_sets(static_cast<std::size_t>(f.set_count()));
    for (int s = 0; s < f.set_count(); ++s)
        all_sets[static_cast<std::size_t>(s)] = s;
    engine.run(std::move(all_elems), std::move(all_sets));

    PreprocessResult result;
    result.early_answer = engine.early_answer;
    result.state.current = engine.work.materialize(&result.state.element_map, &result.state.set_map);
    result.state.forced = std::move(engine.forced);
    result.state.removed_elements = std::move(engine.removed_elements);
    result.state.removed_sets = std::move(engine.removed_sets);
    result.state.trace = std::move(engine.trace);
    return result;
}

namespace detail {

inline HittingSet sorted_hitting_set(std::vector<int> elements)
{
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    return HittingSet{std::move(elements)};
}

inline void verify_or_fail(const SetSystem& f, const HittingSet& hs, const char* who)
{
    ensure(verify_hitting_set(f, hs.elements),
           std::string(who) + ": produced a non-hitting solution {" + join_ints(hs.elements) + "}");
}

} // namespace detail

// Theorem-2 solver for (3,5)-systems: preprocess to the Edge Cover shape and
// finish with a minimum edge cover on the set-adjacency graph.
inline SolveResult solve_35(const SetSystem& f, const PreprocessOptions& options = {})
{
    SolveResult result;
    result.algorithm = "sys35";
    if (f.contains_empty_set()) {
        result.status = SolveStatus::NoSolution;
        return result;
    }
    if (options.guard && f.set_count() > 0 && !is_ab_system(f, 3, 5)) {
        const AlphaBetaProfile profile = alpha_beta_profile(f, 3);
        result.status = SolveStatus::NotApplicable;
        result.failure = "(3,5) property fails: projection on {" + detail::join_ints(profile.witness)
            + "} has " + std::to_string(profile.beta) + " members";
        return result;
    }
    PreprocessOptions inner = options;
    inner.guard = false; // already checked
    PreprocessResult pre = preprocess_35(f, inner);
    result.trace = pre.state.trace;

    std::vector<int> solution = pre.state.forced;
    const SetSystem& current = pre.state.current;
    if (current.set_count() > 0) {
        // Fixpoint shape: vertices are the remaining sets, edges the
        // remaining elements (each in exactly two sets).
        std::vector<std::pair<int, int>> edges;
        edges.reserve(static_cast<std::size_t>(current.universe_size()));
        for (int e = 0; e < current.universe_size(); ++e) {
            int first = -1, second = -1;
            for (int s = 0; s < current.set_count(); ++s) {
                if (!current.member(s, e))
                    continue;
                (first == -1 ? first : second) = s;
            }
            detail::ensure(first != -1 && second != -1, "edge cover finish: element degree is not 2");
            edges.emplace_back(first, second);
        }
        std::vector<int> cover;
        try {
            cover = min_edge_cover(SimpleGraph(current.set_count(), std::move(edges)));
        } catch (const no_cover_error& e) {
            throw internal_error(std::string("edge cover finish: ") + e.what());
        }
        for (int edge : cover)
            solution.push_back(pre.state.element_map[static_cast<std::size_t>(edge)]);
    }
    result.status = SolveStatus::Solved;
    result.solution = detail::sorted_hitting_set(std::move(solution));
    detail::verify_or_fail(f, *result.solution, "solve_35");
    return result;
}

// Theorem-4 solver for VC-dimension 1: either some pair hits everything and a
// size <= 2 search is exact, or repeated deletion of dominated elements
// reduces every set to a singleton.
inline SolveResult solve_vc1(const SetSystem& f, bool guard = true)
{
    SolveResult result;
    result.algorithm = "vc1";
    if (f.set_count() == 0) {
        result.status = SolveStatus::Solved;
        result.solution = HittingSet{};
        return result;
    }
    if (f.contains_empty_set()) {
        result.status = SolveStatus::NoSolution;
        return result;
    }
    if (guard) {
        const VcReport report = vc_dimension(f, 2);
        if (report.vc_dim > 1) {
            result.status = SolveStatus::NotApplicable;
            result.failure = "VC-dimension exceeds 1: shattered pair {" + detail::join_ints(report.witness) + "}";
            return result;
        }
    }
    const int n = f.universe_size();
    // (a) if a subset of size <= 2 hits everything, the smallest one is optimal
    for (int s = 0; s <= std::min(2, n); ++s) {
        std::optional<std::vector<int>> found;
        detail::for_each_combination(n, s, [&](const std::vector<int>& idx) {
            if (verify_hitting_set(f, idx)) {
                found = idx;
                return true;
            }
            return false;
        });
        if (found) {
            result.status = SolveStatus::Solved;
            result.solution = HittingSet{std::move(*found)};
            return result;
        }
    }
    // (b) no pair hits everything: inside any set, one of two co-occurring
    // elements dominates the other
    detail::Working work(f);
    for (;;) {
        int target = -1;
        for (std::size_t s = 0; s < work.members.size(); ++s)
            if (work.set_alive[s] && work.members[s].size() >= 2) {
                target = static_cast<int>(s);
                break;
            }
        if (target == -1)
            break;
        const int x = work.members[static_cast<std::size_t>(target)][0];
        const int y = work.members[static_cast<std::size_t>(target)][1];
        auto dominated_in_current = [&](int dominator, int dominee) {
            for (std::size_t s = 0; s < work.members.size(); ++s)
                if (work.set_alive[s] && work.original->member(static_cast<int>(s), dominee)
                    && !work.original->member(static_cast<int>(s), dominator))
                    return false;
            return true;
        };
        int victim;
        int keeper;
        if (dominated_in_current(x, y)) {
            victim = y; // on mutual domination this removes the larger index
            keeper = x;
        } else if (dominated_in_current(y, x)) {
            victim = x;
            keeper = y;
        } else {
            throw internal_error("solve_vc1: co-occurring pair {" + std::to_string(x) + "," + std::to_string(y)
                                 + "} has no domination; VC-dimension 1 violated");
        }
        TraceEntry entry;
        entry.step = 2;
        entry.elements = {victim};
        entry.sets = work.erase_element(victim);
        entry.detail = "removed=" + std::to_string(victim + 1) + " dominated_by=" + std::to_string(keeper + 1);
        result.trace.push_back(std::move(entry));
    }
    std::vector<int> solution;
    for (std::size_t s = 0; s < work.members.size(); ++s)
        if (work.set_alive[s]) {
            detail::ensure(work.members[s].size() == 1, "solve_vc1: non-singleton set after domination removal");
            solution.push_back(work.members[s][0]);
        }
    result.status = SolveStatus::Solved;
    result.solution = detail::sorted_hitting_set(std::move(solution));
    detail::verify_or_fail(f, *result.solution, "solve_vc1");
    return result;
}

// Theorem-4 solver for dual VC-dimension 1: after discarding supersets the
// sets are pairwise disjoint (pick one element each) or the optimum is <= 2.
inline SolveResult solve_dual_vc1(const SetSystem& f, bool guard = true)
{
    SolveResult result;
    result.algorithm = "dual_vc1";
    if (f.set_count() == 0) {
        result.status = SolveStatus::Solved;
        result.solution = HittingSet{};
        return result;
    }
    if (f.contains_empty_set()) {
        result.status = SolveStatus::NoSolution;
        return result;
    }
    if (guard) {
        const SetSystem d = dual(f);
        const VcReport report = vc_dimension(d, 2);
        if (report.vc_dim > 1) {
            result.status = SolveStatus::NotApplicable;
            result.failure = "dual VC-dimension exceeds 1: shattered set pair {" + detail::join_ints(report.witness) + "}";
            return result;
        }
    }
    const int m = f.set_count();
    std::vector<int> minimal;
    for (int i = 0; i < m; ++i) {
        bool keep = true;
        for (int j = 0; j < m && keep; ++j) {
            if (i == j)
                continue;
            const auto& a = f.set_at(j);
            const auto& b = f.set_at(i);
            if (a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end()))
                keep = false;
        }
        if (keep)
            minimal.push_back(i);
        else {
            TraceEntry entry;
            entry.step = 3;
            entry.sets = {i};
            entry.detail = "removed_set=" + std::to_string(i + 1) + " superset";
            result.trace.push_back(std::move(entry));
        }
    }
    bool disjoint = true;
    for (std::size_t i = 0; i < minimal.size() && disjoint; ++i)
        for (std::size_t j = i + 1; j < minimal.size() && disjoint; ++j) {
            const auto& a = f.set_at(minimal[i]);
            const auto& b = f.set_at(minimal[j]);
            ElementSet inter;
            std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(inter));
            disjoint = inter.empty();
        }
    if (disjoint) {
        std::vector<int> solution;
        for (int i : minimal)
            solution.push_back(f.set_at(i).front());
        result.status = SolveStatus::Solved;
        result.solution = detail::sorted_hitting_set(std::move(solution));
        detail::verify_or_fail(f, *result.solution, "solve_dual_vc1");
        return result;
    }
    for (int s = 1; s <= 2; ++s) {
        std::optional<std::vector<int>> found;
        detail::for_each_combination(f.universe_size(), s, [&](const std::vector<int>& idx) {
            if (verify_hitting_set(f, idx)) {
                found = idx;
                return true;
            }
            return false;
        });
        if (found) {
            result.status = SolveStatus::Solved;
            result.solution = HittingSet{std::move(*found)};
            return result;
        }
    }
    throw internal_error("solve_dual_vc1: intersecting antichain without a hitting set of size <= 2; "
                         "dual VC-dimension 1 violated");
}

// Greedy baseline: repeatedly pick the element covering the most unhit sets,
// ties broken by smallest index.  Valid but not necessarily optimal.
inline SolveResult greedy_hitting_set(const SetSystem& f)
{
    SolveResult result;
    result.algorithm = "greedy";
    result.exact = false;
    if (f.contains_empty_set()) {
        result.status = SolveStatus::NoSolution;
        return result;
    }
    std::vector<char> hit(static_cast<std::size_t>(f.set_count()), 0);
    int remaining = f.set_count();
    std::vector<int> solution;
    while (remaining > 0) {
        int best = -1, best_cover = 0;
        for (int e = 0; e < f.universe_size(); ++e) {
            int cover = 0;
            for (int s = 0; s < f.set_count(); ++s)
                if (!hit[static_cast<std::size_t>(s)] && f.member(s, e))
                    ++cover;
            if (cover > best_cover) {
                best_cover = cover;
                best = e;
            }
        }
        detail::ensure(best != -1, "greedy_hitting_set: no element covers an unhit set");
        solution.push_back(best);
        for (int s = 0; s < f.set_count(); ++s)
            if (!hit[static_cast<std::size_t>(s)] && f.member(s, best)) {
                hit[static_cast<std::size_t>(s)] = 1;
                --remaining;
            }
    }
    result.status = SolveStatus::Solved;
    result.solution = detail::sorted_hitting_set(std::move(solution));
    return result;
}

// Dispatcher: vc1 -> dual_vc1 -> (3,5) -> brute force within the oracle
// bound -> greedy (flagged non-optimal).
inline SolveResult solve_auto(const SetSystem& f, int oracle_bound = 20)
{
    if (f.contains_empty_set()) {
        SolveResult result;
        result.algorithm = "auto";
        result.status = SolveStatus::NoSolution;
        return result;
    }
    if (f.set_count() == 0) {
        SolveResult result;
        result.algorithm = "auto";
        result.status = SolveStatus::Solved;
        result.solution = HittingSet{};
        return result;
    }
    if (vc_dimension(f, 2).vc_dim <= 1)
        return solve_vc1(f, false);
    if (vc_dimension(dual(f), 2).vc_dim <= 1)
        return solve_dual_vc1(f, false);
    if (is_ab_system(f, 3, 5)) {
        PreprocessOptions options;
        options.guard = false;
        return solve_35(f, options);
    }
    if (f.universe_size() <= oracle_bound)
        return brute_force_min_hitting_set(f, std::nullopt, oracle_bound);
    return greedy_hitting_set(f);
}

} // namespace hsvc
