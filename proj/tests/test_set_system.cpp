#include "doctest.h"

#include <map>
#include <random>
#include <set>

#include "hsvc/set_system.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace hsvc;

TEST_CASE("construction canonicalizes and validates")
{
    SetSystem f(3, {{2, 0}, {1}});
    CHECK(f.universe_size() == 3);
    CHECK(f.set_count() == 2);
    CHECK(f.sets()[0] == ElementSet{0, 2});
    CHECK(f.sets()[1] == ElementSet{1});
    CHECK(f.member(0, 2));
    CHECK(!f.member(1, 2));

    CHECK_THROWS_AS(SetSystem(2, {{0, 3}}), invalid_input);
    CHECK_THROWS_AS(SetSystem(2, {{0, 0}}), invalid_input);
    CHECK_THROWS_AS(SetSystem(2, {{0, 1}, {1, 0}}), invalid_input); // duplicate after canonicalization

    int dropped = -1;
    SetSystem lenient = SetSystem::deduplicate(2, {{0, 1}, {1, 0}, {1}}, &dropped);
    CHECK(dropped == 1);
    CHECK(lenient.set_count() == 2);

    // the empty set is representable
    SetSystem with_empty(2, {{}, {0}});
    CHECK(with_empty.contains_empty_set());
    CHECK(!f.contains_empty_set());
}

TEST_CASE("projection matches the spec examples")
{
    SetSystem f1(3, {{0, 1}, {1, 2}});
    CHECK(projection(f1, {1}) == std::vector<ElementSet>{{1}});

    SetSystem full(2, {{}, {0}, {1}, {0, 1}});
    CHECK(projection(full, {0, 1}) == std::vector<ElementSet>{{}, {0}, {0, 1}, {1}});

    SetSystem tri(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(projection(tri, {0, 1}) == std::vector<ElementSet>{{0}, {0, 1}, {1}});

    CHECK_THROWS_AS(projection(f1, {5}), invalid_input);
}

TEST_CASE("projection cardinality is monotone under inclusion")
{
    std::mt19937 rng(12001);
    std::uniform_real_distribution<double> density(0.15, 0.5);
    for (int it = 0; it < 200; ++it) {
        SetSystem f = gen::random_system(rng, 8, 8, density(rng), true);
        const int n = f.universe_size();
        std::vector<int> b;
        std::bernoulli_distribution coin(0.5);
        for (int e = 0; e < n; ++e)
            if (coin(rng))
                b.push_back(e);
        std::vector<int> a;
        for (int e : b)
            if (coin(rng))
                a.push_back(e);
        CHECK(projection(f, a).size() <= projection(f, b).size());
    }
}

TEST_CASE("is_shattered on the spec examples")
{
    SetSystem f1(3, {{0, 1}, {1, 2}});
    CHECK(is_shattered(f1, {})); // PR(empty) = {empty} whenever C is non-empty

    SetSystem edges(4, {{0, 2}, {0, 1}, {2, 3}, {1, 3}});
    CHECK(is_shattered(edges, {0, 2}));

    CHECK(!is_shattered(f1, {0, 2}));
}

TEST_CASE("is_shattered agrees with realizing every pattern")
{
    std::mt19937 rng(12002);
    for (int it = 0; it < 150; ++it) {
        SetSystem f = gen::random_system(rng, 7, 9, 0.35, true);
        std::uniform_int_distribution<int> size_dist(0, std::min(3, f.universe_size()));
        const int t = size_dist(rng);
        std::vector<int> pool(static_cast<std::size_t>(f.universe_size()));
        for (int e = 0; e < f.universe_size(); ++e)
            pool[static_cast<std::size_t>(e)] = e;
        std::shuffle(pool.begin(), pool.end(), rng);
        std::vector<int> tuple(pool.begin(), pool.begin() + t);
        bool all = true;
        for (unsigned mask = 0; mask < (1u << t); ++mask) {
            std::vector<bool> bits;
            for (int i = 0; i < t; ++i)
                bits.push_back(mask >> i & 1);
            if (t == 0)
                break;
            if (!realizes_pattern(f, tuple, Pattern(bits)))
                all = false;
        }
        if (t > 0)
            CHECK(is_shattered(f, tuple) == all);
    }
}

TEST_CASE("realizes_pattern on the spec examples")
{
    SetSystem one(2, {{0, 1}});
    CHECK(realizes_pattern(one, {0, 1}, Pattern("11")));
    CHECK(!realizes_pattern(one, {0, 1}, Pattern("10")));

    SetSystem tri(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(!realizes_pattern(tri, {0, 1, 2}, Pattern("000")));

    CHECK_THROWS_AS(realizes_pattern(one, {0}, Pattern("11")), invalid_input);
    CHECK_THROWS_AS(realizes_pattern(one, {0, 0}, Pattern("11")), invalid_input);
    CHECK_THROWS_AS(Pattern(""), invalid_input);
    CHECK_THROWS_AS(Pattern("102"), invalid_input);
}

TEST_CASE("dual on the spec examples")
{
    SetSystem f1(2, {{0}, {1}});
    SetSystem d1 = dual(f1);
    CHECK(d1.universe_size() == 2);
    CHECK(d1.sets() == std::vector<ElementSet>{{0}, {1}});

    // two elements with identical membership collapse to one dual set
    SetSystem f2(3, {{0, 1}, {0, 1, 2}});
    SetSystem d2 = dual(f2);
    CHECK(d2.set_count() == 2); // profiles of 0 and 1 coincide

    SetSystem f3(3, {{0, 1}, {1, 2}});
    SetSystem d3 = dual(f3);
    CHECK(d3.universe_size() == 2);
    CHECK(d3.sets() == std::vector<ElementSet>{{0}, {0, 1}, {1}});
}

namespace {

// Independent model of dual(dual(F)): collapse duplicate element profiles,
// index the distinct profiles in lexicographic order, rewrite every set over
// those classes.
SetSystem expected_double_dual(const SetSystem& f)
{
    std::vector<std::vector<int>> profile(static_cast<std::size_t>(f.universe_size()));
    for (int e = 0; e < f.universe_size(); ++e)
        for (int s = 0; s < f.set_count(); ++s)
            if (f.member(s, e))
                profile[static_cast<std::size_t>(e)].push_back(s);
    std::set<std::vector<int>> distinct(profile.begin(), profile.end());
    std::map<std::vector<int>, int> klass;
    int next = 0;
    for (const auto& p : distinct)
        klass[p] = next++;
    std::vector<std::vector<int>> sets;
    for (int s = 0; s < f.set_count(); ++s) {
        std::set<int> members;
        for (int e : f.set_at(s))
            members.insert(klass[profile[static_cast<std::size_t>(e)]]);
        sets.emplace_back(members.begin(), members.end());
    }
    return SetSystem::deduplicate(static_cast<int>(distinct.size()), std::move(sets));
}

} // namespace

TEST_CASE("dual is an involution up to duplicate-profile collapse")
{
    std::mt19937 rng(12003);
    for (int it = 0; it < 300; ++it) {
        SetSystem f = gen::random_system(rng, 7, 8, 0.3, true);
        CHECK(dual(dual(f)) == expected_double_dual(f));
    }
}

TEST_CASE("verify_hitting_set on the spec examples")
{
    SetSystem f1(3, {{0, 1}, {1, 2}});
    CHECK(verify_hitting_set(f1, {1}));

    SetSystem with_empty(2, {{}, {0}});
    CHECK(!verify_hitting_set(with_empty, {0, 1}));

    SetSystem tri(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(!verify_hitting_set(tri, {0}));
}

TEST_CASE("verify_hitting_set agrees with direct enumeration")
{
    std::mt19937 rng(12004);
    for (int it = 0; it < 400; ++it) {
        SetSystem f = gen::random_system(rng, 6, 10, 0.35, true);
        std::vector<int> s;
        std::bernoulli_distribution coin(0.4);
        for (int e = 0; e < f.universe_size(); ++e)
            if (coin(rng))
                s.push_back(e);
        CHECK(verify_hitting_set(f, s) == oracle::naive_verify_hitting(f, s));
    }
}
