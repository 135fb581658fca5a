#include "doctest.h"

#include <random>

#include "hsvc/io.hpp"
#include "generators.hpp"

using namespace hsvc;

TEST_CASE("parse_hypergraph on the spec examples")
{
    SetSystem f = parse_hypergraph("p hs 3 2\ns 1 2\ns 2 3\n");
    CHECK(f.universe_size() == 3);
    CHECK(f.sets() == std::vector<ElementSet>{{0, 1}, {1, 2}});

    SetSystem empty = parse_hypergraph("p hs 2 1\ns\n");
    CHECK(empty.contains_empty_set());

    try {
        parse_hypergraph("p hs 2 2\ns 1\ns 1\n");
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.line_number == 3);
    }
}

TEST_CASE("parse_hypergraph diagnostics")
{
    CHECK_THROWS_AS(parse_hypergraph(""), parse_error);
    CHECK_THROWS_AS(parse_hypergraph("p cnf 3 2\n"), parse_error);
    CHECK_THROWS_WITH_AS(parse_hypergraph("p hs 2 1\ns 3\n"), doctest::Contains("out of range"), parse_error);
    CHECK_THROWS_WITH_AS(parse_hypergraph("p hs 2 1\ns 1 1\n"), doctest::Contains("repeated"), parse_error);
    CHECK_THROWS_AS(parse_hypergraph("p hs 2 2\ns 1\n"), parse_error);          // too few lines
    CHECK_THROWS_AS(parse_hypergraph("p hs 2 1\ns 1\ns 2\n"), parse_error);     // too many lines
    CHECK_THROWS_AS(parse_hypergraph("p hs 2 1\nx 1\n"), parse_error);          // unknown line kind
    // comments and blank lines are fine anywhere
    SetSystem f = parse_hypergraph("c header\n\np hs 2 1\nc mid\ns 2\nc tail\n");
    CHECK(f.sets() == std::vector<ElementSet>{{1}});
}

TEST_CASE("hypergraph serialization round trips and is byte stable")
{
    std::mt19937 rng(62001);
    for (int it = 0; it < 100; ++it) {
        SetSystem f = gen::random_system(rng, 9, 9, 0.35, true);
        const std::string text = serialize_hypergraph(f);
        SetSystem parsed = parse_hypergraph(text);
        CHECK(parsed == f);
        CHECK(serialize_hypergraph(parsed) == text);
    }
}

TEST_CASE("psi parsing and serialization")
{
    const std::string text = "p psi 3 2 3 3\n"
                             "v 1 1\nv 2 2\nv 3 3\n"
                             "e 1 2\ne 2 3\n"
                             "f 1 2\nf 2 3\nf 1 3\n";
    PsiInstance inst = parse_psi(text);
    CHECK(inst.host.vertex_count() == 3);
    CHECK(inst.pattern.edge_count() == 3);
    CHECK(serialize_psi(inst) == text);

    CHECK_THROWS_WITH_AS(parse_psi("p psi 2 0 1 0\nv 1 1\n"),
                         doctest::Contains("vertex 2"), parse_error);
    CHECK_THROWS_WITH_AS(parse_psi("p psi 1 0 1 0\nv 1 2\n"),
                         doctest::Contains("out of range"), parse_error);
    CHECK_THROWS_AS(parse_psi("p psi 1 0 1 0\nv 1 1\nv 1 1\n"), parse_error);
}

TEST_CASE("graph parsing and serialization")
{
    SimpleGraph g = parse_graph("p graph 4 2\ne 1 2\ne 3 4\n");
    CHECK(g.vertex_count() == 4);
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {2, 3}});
    CHECK(serialize_graph(g) == "p graph 4 2\ne 1 2\ne 3 4\n");
    CHECK_THROWS_AS(parse_graph("p graph 2 1\ne 1 1\n"), parse_error);
    CHECK_THROWS_AS(parse_graph("p graph 2 1\n"), parse_error);
}

TEST_CASE("layout serialization round trips")
{
    PsiInstance inst;
    inst.host = SimpleGraph(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    inst.part_of = {0, 0, 1, 2};
    inst.pattern = SimpleGraph(3, {{0, 1}, {1, 2}, {0, 2}});
    PsiReduction red = psi_to_hitting_set(inst);

    const std::string text = serialize_layout(red.layout);
    ReductionLayout parsed = parse_layout(text);
    CHECK(parsed.budget == red.layout.budget);
    CHECK(parsed.paper_budget == red.layout.paper_budget);
    CHECK(parsed.ground_sets.size() == red.layout.ground_sets.size());
    CHECK(parsed.set_index.size() == red.layout.set_index.size());
    CHECK(serialize_layout(parsed) == text);

    // the parsed layout drives extraction identically
    HittingSet hs = embedding_to_solution(inst, red, {0, 2, 3});
    CHECK(extract_embedding({red.system, parsed}, hs) == std::vector<int>{0, 2, 3});
}
