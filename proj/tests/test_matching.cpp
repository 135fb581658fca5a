#include "doctest.h"

#include <random>
#include <set>

#include "hsvc/matching.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace hsvc;

namespace {

bool is_valid_matching(const SimpleGraph& g, const Matching& m)
{
    std::set<int> used;
    for (int id : m.edge_ids) {
        const auto [u, v] = g.edges()[static_cast<std::size_t>(id)];
        if (used.count(u) || used.count(v))
            return false;
        used.insert(u);
        used.insert(v);
    }
    return true;
}

} // namespace

TEST_CASE("graph validation")
{
    CHECK_THROWS_AS(SimpleGraph(2, {{0, 0}}), invalid_input);
    CHECK_THROWS_AS(SimpleGraph(2, {{0, 1}, {1, 0}}), invalid_input);
    CHECK_THROWS_AS(SimpleGraph(2, {{0, 2}}), invalid_input);
    SimpleGraph g(3, {{2, 0}});
    CHECK(g.edges()[0] == std::pair<int, int>{0, 2});
    CHECK(g.edge_id(2, 0) == 0);
    CHECK(g.edge_id(0, 1) == -1);
}

TEST_CASE("max_matching on the spec examples")
{
    SimpleGraph path4(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(max_matching(path4).size() == 2);

    SimpleGraph triangle(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(max_matching(triangle).size() == 1);

    SimpleGraph petersen(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                              {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
    CHECK(max_matching(petersen).size() == 5);
    CHECK(oracle::naive_max_matching(petersen) == 5);
}

TEST_CASE("max_matching agrees with the DP enumerator exhaustively on small graphs")
{
    for (int n = 0; n <= 5; ++n) {
        std::vector<std::pair<int, int>> all_pairs;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                all_pairs.emplace_back(u, v);
        const int pairs = static_cast<int>(all_pairs.size());
        for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << pairs); ++mask) {
            std::vector<std::pair<int, int>> edges;
            for (int i = 0; i < pairs; ++i)
                if (mask >> i & 1)
                    edges.push_back(all_pairs[static_cast<std::size_t>(i)]);
            SimpleGraph g(n, std::move(edges));
            Matching m = max_matching(g);
            CHECK(is_valid_matching(g, m));
            CHECK(m.size() == oracle::naive_max_matching(g));
        }
    }
}

TEST_CASE("max_matching agrees with the DP enumerator on random graphs")
{
    std::mt19937 rng(32001);
    std::uniform_int_distribution<int> n_dist(6, 12);
    std::uniform_real_distribution<double> p_dist(0.1, 0.8);
    for (int it = 0; it < 200; ++it) {
        SimpleGraph g = gen::random_graph(rng, n_dist(rng), p_dist(rng));
        Matching m = max_matching(g);
        CHECK(is_valid_matching(g, m));
        CHECK(m.size() == oracle::naive_max_matching(g));
    }
}

TEST_CASE("max_matching output is deterministic")
{
    std::mt19937 rng(32002);
    SimpleGraph g = gen::random_graph(rng, 10, 0.5);
    CHECK(max_matching(g).edge_ids == max_matching(g).edge_ids);
}

TEST_CASE("min_edge_cover on the spec examples")
{
    SimpleGraph one(2, {{0, 1}});
    CHECK(min_edge_cover(one) == std::vector<int>{0});

    SimpleGraph triangle(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(min_edge_cover(triangle).size() == 2);

    SimpleGraph star(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    CHECK(min_edge_cover(star).size() == 4);
}

TEST_CASE("min_edge_cover rejects isolated vertices with the vertex id")
{
    SimpleGraph g(3, {{0, 1}});
    try {
        min_edge_cover(g);
        FAIL("expected no_cover_error");
    } catch (const no_cover_error& e) {
        CHECK(e.vertex == 2);
    }
}

TEST_CASE("min_edge_cover covers every vertex and matches the Gallai identity")
{
    std::mt19937 rng(32003);
    std::uniform_int_distribution<int> n_dist(2, 11);
    for (int it = 0; it < 200; ++it) {
        SimpleGraph g = gen::random_graph(rng, n_dist(rng), 0.5, true);
        const std::vector<int> cover = min_edge_cover(g);
        std::vector<char> covered(static_cast<std::size_t>(g.vertex_count()), 0);
        for (int id : cover) {
            covered[static_cast<std::size_t>(g.edges()[static_cast<std::size_t>(id)].first)] = 1;
            covered[static_cast<std::size_t>(g.edges()[static_cast<std::size_t>(id)].second)] = 1;
        }
        for (int v = 0; v < g.vertex_count(); ++v)
            CHECK(covered[static_cast<std::size_t>(v)]);
        CHECK(static_cast<int>(cover.size()) == g.vertex_count() - max_matching(g).size());
    }
}
