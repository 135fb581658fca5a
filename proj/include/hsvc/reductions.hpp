#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hsvc/matching.hpp"
#include "hsvc/set_system.hpp"
#include "hsvc/vc.hpp"

// Certified instance generators: the Partitioned Subgraph Isomorphism to
// Hitting Set construction (with VC-dimension and dual VC-dimension 2),
// solution round-trips, the triangle-free Vertex Cover route to
// (3,6)-systems, and B_k-system detection.

namespace hsvc {

// Host graph with a vertex partition, plus a pattern graph on the part ids.
// A solution picks one host vertex per part so that every pattern edge is
// realized by a host edge.
struct PsiInstance {
    SimpleGraph host;
    std::vector<int> part_of; // host vertex -> part id in [0, pattern.vertex_count())
    SimpleGraph pattern;

    void validate() const
    {
        detail::check(static_cast<int>(part_of.size()) == host.vertex_count(),
                      "partition must assign every host vertex");
        const int t = pattern.vertex_count();
        for (int v = 0; v < host.vertex_count(); ++v)
            detail::check(part_of[static_cast<std::size_t>(v)] >= 0 && part_of[static_cast<std::size_t>(v)] < t,
                          "part id of host vertex " + std::to_string(v) + " out of range");
    }

    std::vector<std::vector<int>> part_vertices() const
    {
        std::vector<std::vector<int>> parts(static_cast<std::size_t>(pattern.vertex_count()));
        for (int v = 0; v < host.vertex_count(); ++v)
            parts[static_cast<std::size_t>(part_of[static_cast<std::size_t>(v)])].push_back(v);
        return parts; // ascending within each part by construction
    }
};

// One ground set X_i^l (is_y = false) or Y_ij^l (is_y = true, directed ij).
struct GroundSetRef {
    bool is_y = false;
    int i = -1;
    int j = -1; // -1 for X ground sets
    int level = 0;

    bool operator==(const GroundSetRef&) const = default;
};

struct LayoutElement {
    GroundSetRef ground;
    int u = -1; // host vertex (x elements) or first endpoint (y elements)
    int v = -1; // second endpoint for y elements, -1 otherwise
};

// 'A', 'B', 'C', 'P' (the primed C variant), 'D', or 'E' for the empty
// ground-set marker.
struct LayoutSetTag {
    char kind = '?';
    int i = -1, j = -1, u = -1, v = -1, level = 0;
    bool is_y_ground = false; // for kind 'E'
};

struct ReductionLayout {
    std::vector<std::pair<GroundSetRef, std::vector<int>>> ground_sets; // elements in order
    std::vector<LayoutElement> elements;                               // per universe index
    std::vector<std::pair<LayoutSetTag, int>> set_index;               // tag -> collection position
    std::vector<std::pair<int, int>> isolated_parts;                   // pattern vertex -> chosen host vertex
    int budget = 0;       // k' = number of ground sets as constructed
    int paper_budget = 0; // the closed-form 9k count reported alongside
};

struct PsiReduction {
    SetSystem system;
    ReductionLayout layout;
};

// Pads an instance until the pattern has as many edges as vertices.  Extra
// isolated vertices absorb k > t; a 4-clique plus an isolated vertex raises
// k - t by one per application.  Both gadgets are always embeddable.
inline PsiInstance normalize_psi(const PsiInstance& input)
{
    input.validate();
    int t = input.pattern.vertex_count();
    int k = input.pattern.edge_count();
    std::vector<std::pair<int, int>> pattern_edges = input.pattern.edges();
    std::vector<std::pair<int, int>> host_edges = input.host.edges();
    std::vector<int> part_of = input.part_of;
    int host_n = input.host.vertex_count();

    while (k > t) {
        part_of.push_back(t); // one singleton part holding one isolated host vertex
        ++host_n;
        ++t;
    }
    while (k < t) {
        const int base_part = t;
        const int base_host = host_n;
        for (int a = 0; a < 4; ++a)
            for (int b = a + 1; b < 4; ++b) {
                pattern_edges.emplace_back(base_part + a, base_part + b);
                host_edges.emplace_back(base_host + a, base_host + b);
            }
        for (int a = 0; a < 5; ++a)
            part_of.push_back(base_part + a);
        host_n += 5;
        t += 5;
        k += 6;
    }
    PsiInstance out;
    out.host = SimpleGraph(host_n, std::move(host_edges));
    out.part_of = std::move(part_of);
    out.pattern = SimpleGraph(t, std::move(pattern_edges));
    out.validate();
    return out;
}

namespace detail {

struct PsiIndex {
    int k = 0;
    std::vector<std::vector<int>> parts;                    // V_i ascending
    std::vector<std::vector<int>> neighbors;                // undirected pattern neighbors, ascending
    std::vector<std::pair<int, int>> directed_edges;        // all (i, j) with {i,j} in F, lex order
    std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> host_pairs; // E_ij lex
};

inline PsiIndex build_psi_index(const PsiInstance& inst)
{
    PsiIndex idx;
    idx.k = inst.pattern.vertex_count();
    idx.parts = inst.part_vertices();
    idx.neighbors.assign(static_cast<std::size_t>(idx.k), {});
    for (auto [i, j] : inst.pattern.edges()) {
        idx.neighbors[static_cast<std::size_t>(i)].push_back(j);
        idx.neighbors[static_cast<std::size_t>(j)].push_back(i);
    }
    for (auto& nb : idx.neighbors)
        std::sort(nb.begin(), nb.end());
    for (int i = 0; i < idx.k; ++i)
        for (int j : idx.neighbors[static_cast<std::size_t>(i)])
            idx.directed_edges.emplace_back(i, j);
    std::sort(idx.directed_edges.begin(), idx.directed_edges.end());
    for (auto [i, j] : idx.directed_edges) {
        std::vector<std::pair<int, int>> pairs;
        for (int u : idx.parts[static_cast<std::size_t>(i)])
            for (int v : idx.parts[static_cast<std::size_t>(j)])
                if (inst.host.edge_id(u, v) != -1)
                    pairs.emplace_back(u, v);
        std::sort(pairs.begin(), pairs.end());
        idx.host_pairs[{i, j}] = std::move(pairs);
    }
    return idx;
}

} // namespace detail

// The hardness construction: elements x_{i,u}^l (i a pattern vertex, u in
// V_i, l in [2 deg(i)]) and y_{ij,uv}^l (ij a directed pattern edge, uv in
// E_ij, l in [5]); sets A/B chain equal choices across levels cyclically,
// C/C' tie the chosen host vertex to the chosen host edge, D ties the two
// orientations of each pattern edge together.  A hitting set of size k'
// (one element per ground set) exists iff the pattern embeds.
inline PsiReduction psi_to_hitting_set(const PsiInstance& inst)
{
    inst.validate();
    const int k = inst.pattern.vertex_count();
    detail::check(inst.pattern.edge_count() == k,
                  "psi_to_hitting_set: instance not normalized (t = " + std::to_string(k)
                      + ", k = " + std::to_string(inst.pattern.edge_count()) + ")");
    const detail::PsiIndex idx = detail::build_psi_index(inst);

    for (int i = 0; i < k; ++i)
        if (idx.neighbors[static_cast<std::size_t>(i)].empty())
            detail::check(!idx.parts[static_cast<std::size_t>(i)].empty(),
                          "psi_to_hitting_set: isolated pattern vertex " + std::to_string(i)
                              + " has an empty part; the construction cannot encode it");

    ReductionLayout layout;
    layout.paper_budget = 9 * k;

    // Ground sets and universe, in canonical order.
    std::map<std::pair<int, int>, int> x_ground_pos;            // (i, level) -> position
    std::map<std::pair<std::pair<int, int>, int>, int> y_ground_pos; // ((i,j), level) -> position
    auto x_label = [](int i, int u, int l) {
        return "x(" + std::to_string(i + 1) + "," + std::to_string(u + 1) + ")^" + std::to_string(l);
    };
    auto y_label = [](int i, int j, int u, int v, int l) {
        return "y(" + std::to_string(i + 1) + std::to_string(j + 1) + "," + std::to_string(u + 1)
            + std::to_string(v + 1) + ")^" + std::to_string(l);
    };
    std::vector<std::string> labels;
    for (int i = 0; i < k; ++i) {
        const int levels = 2 * static_cast<int>(idx.neighbors[static_cast<std::size_t>(i)].size());
        for (int l = 1; l <= levels; ++l) {
            GroundSetRef ref{false, i, -1, l};
            x_ground_pos[{i, l}] = static_cast<int>(layout.ground_sets.size());
            std::vector<int> ids;
            for (int u : idx.parts[static_cast<std::size_t>(i)]) {
                ids.push_back(static_cast<int>(layout.elements.size()));
                layout.elements.push_back({ref, u, -1});
                labels.push_back(x_label(i, u, l));
            }
            layout.ground_sets.emplace_back(ref, std::move(ids));
        }
    }
    for (auto [i, j] : idx.directed_edges) {
        for (int l = 1; l <= 5; ++l) {
            GroundSetRef ref{true, i, j, l};
            y_ground_pos[{{i, j}, l}] = static_cast<int>(layout.ground_sets.size());
            std::vector<int> ids;
            for (auto [u, v] : idx.host_pairs.at({i, j})) {
                ids.push_back(static_cast<int>(layout.elements.size()));
                layout.elements.push_back({ref, u, v});
                labels.push_back(y_label(i, j, u, v, l));
            }
            layout.ground_sets.emplace_back(ref, std::move(ids));
        }
    }
    layout.budget = static_cast<int>(layout.ground_sets.size());
    const int universe = static_cast<int>(layout.elements.size());

    auto x_id = [&](int i, int u, int l) {
        const auto& gs = layout.ground_sets[static_cast<std::size_t>(x_ground_pos.at({i, l}))];
        for (int id : gs.second)
            if (layout.elements[static_cast<std::size_t>(id)].u == u)
                return id;
        throw internal_error("x element lookup failed");
    };
    auto y_id = [&](int i, int j, int u, int v, int l) {
        const auto& gs = layout.ground_sets[static_cast<std::size_t>(y_ground_pos.at({{i, j}, l}))];
        for (int id : gs.second)
            if (layout.elements[static_cast<std::size_t>(id)].u == u && layout.elements[static_cast<std::size_t>(id)].v == v)
                return id;
        throw internal_error("y element lookup failed");
    };

    std::vector<std::vector<int>> raw_sets;
    std::vector<LayoutSetTag> raw_tags;
    auto add_set = [&](LayoutSetTag tag, std::vector<int> members) {
        raw_tags.push_back(tag);
        raw_sets.push_back(std::move(members));
    };

    // A sets: cyclic interval pairs over the levels of X_i.
    for (int i = 0; i < k; ++i) {
        const int levels = 2 * static_cast<int>(idx.neighbors[static_cast<std::size_t>(i)].size());
        for (int l = 1; l <= levels; ++l) {
            const int next = l == levels ? 1 : l + 1;
            for (int u : idx.parts[static_cast<std::size_t>(i)]) {
                std::vector<int> members;
                for (int v : idx.parts[static_cast<std::size_t>(i)])
                    members.push_back(v < u ? x_id(i, v, l) : x_id(i, v, next));
                add_set({'A', i, -1, u, -1, l}, std::move(members));
            }
        }
    }
    // B sets: cyclic interval pairs over the levels of Y_ij.
    for (auto [i, j] : idx.directed_edges) {
        const auto& pairs = idx.host_pairs.at({i, j});
        for (int l = 1; l <= 5; ++l) {
            const int next = l == 5 ? 1 : l + 1;
            for (auto [u, v] : pairs) {
                std::vector<int> members;
                for (auto [w, z] : pairs)
                    members.push_back(std::make_pair(w, z) < std::make_pair(u, v) ? y_id(i, j, w, z, l)
                                                                                  : y_id(i, j, w, z, next));
                add_set({'B', i, j, u, v, l}, std::move(members));
            }
        }
    }
    // C / C' sets: if ij is the d-th pattern edge at i, levels 2d-1 and 2d of
    // X_i are linked to levels 1 and 2 of Y_ij.
    for (auto [i, j] : idx.directed_edges) {
        const auto& nb = idx.neighbors[static_cast<std::size_t>(i)];
        const int d = static_cast<int>(std::lower_bound(nb.begin(), nb.end(), j) - nb.begin()) + 1;
        const auto& pairs = idx.host_pairs.at({i, j});
        for (int u : idx.parts[static_cast<std::size_t>(i)]) {
            std::vector<int> c_members, cp_members;
            for (int v : idx.parts[static_cast<std::size_t>(i)]) {
                if (v < u)
                    c_members.push_back(x_id(i, v, 2 * d - 1));
                if (v > u)
                    cp_members.push_back(x_id(i, v, 2 * d));
            }
            for (auto [w, z] : pairs) {
                if (w >= u)
                    c_members.push_back(y_id(i, j, w, z, 1));
                if (w <= u)
                    cp_members.push_back(y_id(i, j, w, z, 2));
            }
            add_set({'C', i, j, u, -1, 0}, std::move(c_members));
            add_set({'P', i, j, u, -1, 0}, std::move(cp_members));
        }
    }
    // D sets: for i < j, encode e_ij != uv or e_ji = vu.
    for (auto [i, j] : idx.directed_edges) {
        if (i >= j)
            continue;
        const auto& pairs = idx.host_pairs.at({i, j});
        for (auto [u, v] : pairs) {
            std::vector<int> members;
            for (auto [w, z] : pairs) {
                if (std::make_pair(w, z) < std::make_pair(u, v))
                    members.push_back(y_id(i, j, w, z, 3));
                if (std::make_pair(w, z) > std::make_pair(u, v))
                    members.push_back(y_id(i, j, w, z, 5));
            }
            members.push_back(y_id(j, i, v, u, 4));
            add_set({'D', i, j, u, v, 0}, std::move(members));
        }
    }
    // Empty ground sets surface as the empty set, which makes the instance
    // unsolvable, matching the absence of any embedding.
    for (const auto& [ref, ids] : layout.ground_sets) {
        if (!ids.empty())
            continue;
        LayoutSetTag tag;
        tag.kind = 'E';
        tag.is_y_ground = ref.is_y;
        tag.i = ref.i;
        tag.j = ref.j;
        tag.level = ref.level;
        add_set(tag, {});
    }

    PsiReduction out;
    out.system = SetSystem::deduplicate(universe, raw_sets);
    out.system.element_labels = std::move(labels);
    for (std::size_t r = 0; r < raw_sets.size(); ++r) {
        std::vector<int> canon = raw_sets[r];
        std::sort(canon.begin(), canon.end());
        const int pos = out.system.find_set(canon);
        detail::ensure(pos >= 0, "constructed set missing after deduplication");
        layout.set_index.emplace_back(raw_tags[r], pos);
    }
    for (int i = 0; i < k; ++i)
        if (idx.neighbors[static_cast<std::size_t>(i)].empty())
            layout.isolated_parts.emplace_back(i, idx.parts[static_cast<std::size_t>(i)].front());
    out.layout = std::move(layout);
    return out;
}

// Builds the size-k' hitting set that a partition-respecting embedding
// induces: x_{i,u_i}^l for every level and y_{ij,u_i u_j}^l likewise.
inline HittingSet embedding_to_solution(const PsiInstance& inst, const PsiReduction& red,
                                        const std::vector<int>& assignment)
{
    inst.validate();
    const int k = inst.pattern.vertex_count();
    detail::check(static_cast<int>(assignment.size()) == k, "assignment must name one host vertex per part");
    for (int i = 0; i < k; ++i) {
        const int u = assignment[static_cast<std::size_t>(i)];
        detail::check(u >= 0 && u < inst.host.vertex_count() && inst.part_of[static_cast<std::size_t>(u)] == i,
                      "assignment: host vertex " + std::to_string(u) + " does not lie in part " + std::to_string(i));
    }
    for (auto [i, j] : inst.pattern.edges())
        detail::check(inst.host.edge_id(assignment[static_cast<std::size_t>(i)], assignment[static_cast<std::size_t>(j)]) != -1,
                      "assignment violates pattern edge (" + std::to_string(i + 1) + "," + std::to_string(j + 1)
                          + "): no host edge between the chosen vertices");

    std::vector<int> solution;
    for (const auto& [ref, ids] : red.layout.ground_sets) {
        int found = -1;
        for (int id : ids) {
            const LayoutElement& el = red.layout.elements[static_cast<std::size_t>(id)];
            if (!ref.is_y && el.u == assignment[static_cast<std::size_t>(ref.i)])
                found = id;
            if (ref.is_y && el.u == assignment[static_cast<std::size_t>(ref.i)]
                && el.v == assignment[static_cast<std::size_t>(ref.j)])
                found = id;
            if (found != -1)
                break;
        }
        detail::ensure(found != -1, "embedding misses ground set; instance and reduction disagree");
        solution.push_back(found);
    }
    std::sort(solution.begin(), solution.end());
    HittingSet hs{std::move(solution)};
    detail::ensure(verify_hitting_set(red.system, hs.elements),
                   "embedding-induced selection is not a hitting set");
    return hs;
}

// Reads the embedding back out of a size-k' hitting set: the choices agree
// across all levels of every ground set, the chosen host edges start at the
// chosen host vertices, and the two orientations pick reversed pairs.
inline std::vector<int> extract_embedding(const PsiReduction& red, const HittingSet& hs)
{
    detail::check(hs.size() == red.layout.budget,
                  "solution size " + std::to_string(hs.size()) + " does not equal the budget "
                      + std::to_string(red.layout.budget));
    detail::check(verify_hitting_set(red.system, hs.elements), "solution is not a hitting set");

    int k = 0;
    for (const auto& [ref, ids] : red.layout.ground_sets)
        k = std::max(k, std::max(ref.i, ref.j) + 1);
    for (auto [i, u] : red.layout.isolated_parts)
        k = std::max(k, i + 1);

    std::vector<int> chosen_vertex(static_cast<std::size_t>(k), -1);
    std::map<std::pair<int, int>, std::pair<int, int>> chosen_edge;
    for (const auto& [ref, ids] : red.layout.ground_sets) {
        int pick = -1;
        for (int id : ids)
            if (std::binary_search(hs.elements.begin(), hs.elements.end(), id)) {
                detail::ensure(pick == -1, "hitting set picks two elements of one ground set");
                pick = id;
            }
        detail::ensure(pick != -1, "hitting set misses a ground set");
        const LayoutElement& el = red.layout.elements[static_cast<std::size_t>(pick)];
        if (!ref.is_y) {
            int& u = chosen_vertex[static_cast<std::size_t>(ref.i)];
            detail::ensure(u == -1 || u == el.u,
                           "levels of part " + std::to_string(ref.i) + " disagree on the chosen vertex");
            u = el.u;
        } else {
            auto key = std::make_pair(ref.i, ref.j);
            auto it = chosen_edge.find(key);
            detail::ensure(it == chosen_edge.end() || it->second == std::make_pair(el.u, el.v),
                           "levels of a pattern edge disagree on the chosen host edge");
            chosen_edge[key] = {el.u, el.v};
        }
    }
    for (auto& [key, uv] : chosen_edge) {
        detail::ensure(chosen_vertex[static_cast<std::size_t>(key.first)] == uv.first,
                       "chosen host edge does not start at the chosen vertex of its part");
        auto rev = chosen_edge.find({key.second, key.first});
        detail::ensure(rev != chosen_edge.end() && rev->second == std::make_pair(uv.second, uv.first),
                       "the two orientations of a pattern edge picked different host edges");
    }
    for (auto [i, u] : red.layout.isolated_parts)
        chosen_vertex[static_cast<std::size_t>(i)] = u;
    for (int i = 0; i < k; ++i)
        detail::ensure(chosen_vertex[static_cast<std::size_t>(i)] != -1,
                       "no choice recovered for pattern vertex " + std::to_string(i));
    return chosen_vertex;
}

// Capped shattering checks on a generated instance; both values must be 2.
inline std::pair<int, int> verify_reduction_vc(const SetSystem& f, int cap = 3, int max_universe = 512)
{
    if (f.universe_size() > max_universe)
        throw resource_error("verify_reduction_vc: universe size " + std::to_string(f.universe_size())
                             + " exceeds " + std::to_string(max_universe));
    return {vc_dimension(f, cap).vc_dim, dual_vc_dimension(f, cap)};
}

// Replaces every edge uv by a path u-a-b-v on two fresh vertices.  The output
// is triangle-free and its minimum vertex cover is the input's plus |E|.
inline std::pair<SimpleGraph, int> split_edges_triangle_free(const SimpleGraph& g)
{
    const int n = g.vertex_count();
    const int m = g.edge_count();
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(3 * m));
    for (int e = 0; e < m; ++e) {
        const auto [u, v] = g.edges()[static_cast<std::size_t>(e)];
        const int a = n + 2 * e;
        const int b = n + 2 * e + 1;
        edges.emplace_back(u, a);
        edges.emplace_back(a, b);
        edges.emplace_back(b, v);
    }
    return {SimpleGraph(n + 2 * m, std::move(edges)), m};
}

// Vertex Cover as Hitting Set: universe = vertices, one 2-element set per edge.
inline SetSystem vertex_cover_system(const SimpleGraph& g)
{
    std::vector<std::vector<int>> sets;
    sets.reserve(static_cast<std::size_t>(g.edge_count()));
    for (auto [u, v] : g.edges())
        sets.push_back({u, v});
    return SetSystem(g.vertex_count(), std::move(sets));
}

// Searches for a size-k subset Y inducing a B_k-system: PR(Y) contains every
// (k-1)-subset of Y and no projection S with 0 < |S| <= k-2.  Both properties
// are checked (they are equivalent only under the preprocessing fixpoint).
inline std::optional<std::vector<int>> find_bk_system(const SetSystem& f, int k)
{
    detail::check(k >= 4, "find_bk_system: k must be at least 4");
    const int n = f.universe_size();
    if (k > n || k > 62)
        return std::nullopt;
    std::optional<std::vector<int>> found;
    detail::for_each_combination(n, k, [&](const std::vector<int>& idx) {
        std::vector<std::uint64_t> masks;
        masks.reserve(static_cast<std::size_t>(f.set_count()));
        for (int s = 0; s < f.set_count(); ++s) {
            std::uint64_t mask = 0;
            for (int b = 0; b < k; ++b)
                if (f.member(s, idx[static_cast<std::size_t>(b)]))
                    mask |= std::uint64_t{1} << b;
            masks.push_back(mask);
        }
        std::sort(masks.begin(), masks.end());
        masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
        for (std::uint64_t mask : masks) {
            const int pop = static_cast<int>(__builtin_popcountll(mask));
            if (pop > 0 && pop <= k - 2)
                return false;
        }
        const std::uint64_t full = (std::uint64_t{1} << k) - 1;
        for (int b = 0; b < k; ++b)
            if (!std::binary_search(masks.begin(), masks.end(), full ^ (std::uint64_t{1} << b)))
                return false;
        found = idx;
        return true;
    });
    return found;
}

} // namespace hsvc
