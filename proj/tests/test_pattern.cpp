#include "doctest.h"

#include <set>

#include "fhit/pattern.hpp"
#include "test_helpers.hpp"

using namespace fhit;
using namespace fhit_test;

namespace {

// naive all-injective-maps enumerator, the independent reference
long long naive_copy_count(const Graph& g, const Graph& f) {
    std::vector<int> map(f.n(), -1);
    std::vector<bool> used(g.n(), false);
    long long count = 0;
    std::function<void(int)> rec = [&](int a) {
        if (a == f.n()) {
            ++count;
            return;
        }
        for (int v = 0; v < g.n(); ++v) {
            if (used[v]) continue;
            bool ok = true;
            for (int b = 0; b < a && ok; ++b)
                if (f.has_edge(a, b) && !g.has_edge(v, map[b])) ok = false;
            if (!ok) continue;
            map[a] = v;
            used[v] = true;
            rec(a + 1);
            used[v] = false;
        }
    };
    rec(0);
    return count;
}

std::set<VSet> distinct_vertex_sets(const std::vector<FCopy>& copies) {
    std::set<VSet> out;
    for (const auto& c : copies) out.insert(c.vertex_set());
    return out;
}

}  // namespace

TEST_CASE("presets") {
    CHECK(pattern_graph_from_preset("k2").m() == 1);
    CHECK(pattern_graph_from_preset("p3").n() == 3);
    CHECK(pattern_graph_from_preset("c4").m() == 4);
    CHECK(pattern_graph_from_preset("k4").m() == 6);
    CHECK(pattern_graph_from_preset("star2").n() == 4);  // K_{1,3}
    CHECK(pattern_graph_from_preset("star2").degree(0) == 3);
    CHECK(pattern_graph_from_preset("2k2").n() == 4);
    CHECK(pattern_graph_from_preset("2k2").m() == 2);
    CHECK_THROWS_AS(pattern_graph_from_preset("zzz"), input_error);

    auto coc3 = family_from_spec("coc3");  // all trees on 3 nodes: just P3
    CHECK(coc3.size() == 1);
    CHECK(coc3.gamma() == 3);
    auto coc4 = family_from_spec("coc4");  // P4 and the claw
    CHECK(coc4.size() == 2);

    auto dup = family_from_spec("k3,c3");  // K3 == C3, deduplicated
    CHECK(dup.size() == 1);

    CHECK_FALSE(family_from_spec("2k2").all_connected());
    CHECK(family_from_spec("k2,p3").all_connected());
}

TEST_CASE("enumerate copies on named examples") {
    auto k2 = family_from_spec("k2");
    auto copies = enumerate_copies(clique(3), k2);
    CHECK(copies.size() == 6);
    CHECK(distinct_vertex_sets(copies).size() == 3);

    auto p3 = family_from_spec("p3");
    auto pc = enumerate_copies(path(3), p3);
    CHECK(pc.size() == 2);
    CHECK(distinct_vertex_sets(pc).size() == 1);

    auto cc = enumerate_copies(cycle(4), p3);
    CHECK(cc.size() == 8);
    CHECK(distinct_vertex_sets(cc).size() == 4);

    for (const auto& c : cc) CHECK(copy_is_valid(cycle(4), p3, c));
}

TEST_CASE("enumerate matches the naive enumerator") {
    Rng rng(31);
    std::vector<PatternFamily> fams;
    fams.push_back(family_from_spec("k2"));
    fams.push_back(family_from_spec("p3"));
    fams.push_back(family_from_spec("k3"));
    fams.push_back(family_from_spec("p4"));
    fams.push_back(family_from_spec("c4"));
    fams.push_back(family_from_spec("star2"));
    for (int t = 0; t < 40; ++t) {
        Graph g = random_graph(rng.uniform_int(1, 8), rng.uniform01(), rng);
        for (const auto& fam : fams) {
            auto copies = enumerate_copies(g, fam);
            long long expect = 0;
            for (const auto& p : fam.patterns()) expect += naive_copy_count(g, p.graph);
            CHECK(static_cast<long long>(copies.size()) == expect);
            for (const auto& c : copies) CHECK(copy_is_valid(g, fam, c));
            // deterministic and sorted
            auto again = enumerate_copies(g, fam);
            CHECK(copies.size() == again.size());
        }
    }
}

TEST_CASE("family freeness") {
    CHECK(is_family_free(cycle(5), family_from_spec("k3")));
    CHECK_FALSE(is_family_free(clique(3), family_from_spec("k3")));
    CHECK_FALSE(is_family_free(grid(3, 3), family_from_spec("c4")));
}

TEST_CASE("constrained copy search") {
    auto k2 = family_from_spec("k2");
    auto r = find_constrained_copy(clique(3), k2, {0}, {}, {});
    REQUIRE(r.has_value());
    CHECK(set_contains(r->vertex_set(), 0));

    // P3 a-b-c, forbidden middle: both edges use it
    auto none = find_constrained_copy(path(3), k2, {}, {1}, {});
    CHECK_FALSE(none.has_value());

    // K4, K3 pattern, required {0}, blocker {0,1}: triangle {0,2,3}
    auto k3 = family_from_spec("k3");
    auto t = find_constrained_copy(clique(4), k3, {0}, {}, {{0, 1}});
    REQUIRE(t.has_value());
    CHECK(t->vertex_set() == VSet{0, 2, 3});

    // brute force cross-check over random graphs
    Rng rng(77);
    for (int it = 0; it < 50; ++it) {
        Graph g = random_graph(rng.uniform_int(3, 7), rng.uniform01(), rng);
        VSet req, forb;
        for (int v = 0; v < g.n(); ++v) {
            double x = rng.uniform01();
            if (x < 0.2) req.push_back(v);
            else if (x < 0.4) forb.push_back(v);
        }
        if (req.size() > 3) req.resize(1);
        std::vector<VSet> blockers;
        if (g.n() >= 2) blockers.push_back({0, 1});
        auto got = find_constrained_copy(g, k3, req, forb, blockers);
        bool exists = false;
        for (const auto& c : enumerate_copies(g, k3)) {
            VSet vs = c.vertex_set();
            if (!is_subset(req, vs)) continue;
            if (sets_intersect(vs, forb)) continue;
            bool blocked = false;
            for (const auto& b : blockers)
                if (is_subset(b, vs)) blocked = true;
            if (!blocked) { exists = true; break; }
        }
        CHECK(got.has_value() == exists);
        if (got) {
            VSet vs = got->vertex_set();
            CHECK(is_subset(req, vs));
            CHECK_FALSE(sets_intersect(vs, forb));
            for (const auto& b : blockers) CHECK_FALSE(is_subset(b, vs));
            CHECK(copy_is_valid(g, k3, *got));
        }
    }
}

TEST_CASE("plus construction shape") {
    auto fam = family_from_spec("k2");
    auto plus = plus_construction(path(3), fam);
    CHECK(plus.graph.n() == 4);
    CHECK(plus.graph.m() == 5);
    CHECK(plus.apex == 3);
    CHECK(plus.family.all_connected());

    // F = 2K1 has no edges; F+ is the star K_{1,2} = P3
    Pattern p;
    p.graph = Graph(2);
    p.name = "2k1";
    auto fam2 = PatternFamily({p});
    auto plus2 = plus_construction(Graph(2), fam2);
    CHECK(graphs_isomorphic(plus2.family.pattern(0).graph, path(3)));
}

TEST_CASE("isomorphism utilities") {
    CHECK(graphs_isomorphic(cycle(3), clique(3)));
    CHECK_FALSE(graphs_isomorphic(path(4), star(3)));
    CHECK(canonical_signature(cycle(3)) == canonical_signature(clique(3)));
}
