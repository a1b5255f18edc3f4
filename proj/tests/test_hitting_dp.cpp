#include "doctest.h"

#include <cmath>
#include <sstream>

#include "fhit/hitting_dp.hpp"
#include "test_helpers.hpp"

using namespace fhit;
using namespace fhit_test;

namespace {

// brute-force minimum-weight hitting set by subset enumeration
struct BruteResult {
    bool feasible = false;
    double weight = 0;
};

BruteResult brute_hitting(const HittingInstance& inst) {
    VSet universe;
    for (const auto& s : inst.collection) universe = set_union(universe, s);
    BruteResult best;
    int n = static_cast<int>(universe.size());
    if (inst.has_empty_set) return best;
    for (long long mask = 0; mask < (1LL << n); ++mask) {
        VSet s;
        for (int i = 0; i < n; ++i)
            if (mask & (1LL << i)) s.push_back(universe[i]);
        if (static_cast<long long>(s.size()) > inst.k) continue;
        bool hits = true;
        for (const auto& x : inst.collection)
            if (!sets_intersect(s, x)) { hits = false; break; }
        if (!hits) continue;
        double w = 0;
        for (int v : s) w += inst.weight_of(v);
        if (!best.feasible || w < best.weight) {
            best.feasible = true;
            best.weight = w;
        }
    }
    return best;
}

std::optional<HittingSolution> run_dp(const HittingInstance& inst, TdMode mode = TdMode::Heuristic) {
    if (inst.collection.empty()) return min_weight_hitting_set(inst, TreeDecomposition{});
    auto gg = gaifman_graph(inst.collection);
    auto td = tree_decomposition(gg.graph, mode);
    return min_weight_hitting_set(inst, td);
}

}  // namespace

TEST_CASE("gaifman graph") {
    auto gg = gaifman_graph({{1, 2}, {2, 3}});
    CHECK(gg.graph.n() == 3);
    CHECK(gg.graph.m() == 2);  // path 1-2-3
    CHECK(gg.graph.has_edge(gg.local_of[1], gg.local_of[2]));
    CHECK_FALSE(gg.graph.has_edge(gg.local_of[1], gg.local_of[3]));

    auto k3 = gaifman_graph({{1, 2, 3}});
    CHECK(k3.graph.m() == 3);

    auto disj = gaifman_graph({{0, 1}, {5, 6}});
    CHECK(disj.graph.m() == 2);
    CHECK(connected_components(disj.graph).size() == 2);

    // every edge back-references a covering set
    for (auto [e, si] : disj.edge_cover) {
        VSet orig{disj.vertices[e.first], disj.vertices[e.second]};
        CHECK(is_subset(orig, disj.vertices));
        CHECK(is_subset(normalized(orig), normalized(VSet(disj.vertices))));
        CHECK(si >= 0);
    }
}

TEST_CASE("tree decomposition basics") {
    // trees have width 1
    auto td = tree_decomposition(path(6), TdMode::Heuristic);
    CHECK(td.width() == 1);
    CHECK(td.valid_for(path(6)));
    // K5 has width 4
    CHECK(tree_decomposition(clique(5), TdMode::Heuristic).width() == 4);
    // 3x3 grid: exact width 3
    CHECK(treewidth_exact(grid(3, 3)) == 3);
    auto tde = tree_decomposition(grid(3, 3), TdMode::Exact);
    CHECK(tde.width() == 3);
    CHECK(tde.valid_for(grid(3, 3)));
    CHECK_THROWS_AS(tree_decomposition(clique(19), TdMode::Exact), capability_error);
}

TEST_CASE("heuristic decomposition always valid, never below exact") {
    Rng rng(2024);
    for (int t = 0; t < 40; ++t) {
        Graph g = random_graph(rng.uniform_int(1, 11), rng.uniform01(), rng);
        auto td = tree_decomposition(g, TdMode::Heuristic);
        std::string why;
        CHECK(td.valid_for(g, &why));
        CHECK(td.width() >= treewidth_exact(g));
        CHECK(tree_decomposition(g, TdMode::Exact).width() == treewidth_exact(g));
    }
}

TEST_CASE("greedy hit approximation") {
    CHECK(greedy_hit_approx({{1}, {2}}) == VSet{1, 2});
    auto r = greedy_hit_approx({{1, 2}, {1, 3}});
    CHECK(r == VSet{1, 2});  // input order
    CHECK(sets_intersect(r, {1, 3}));
    CHECK(greedy_hit_approx({}).empty());

    // gamma * OPT bound against the exact oracle
    Rng rng(31337);
    for (int t = 0; t < 200; ++t) {
        int universe = rng.uniform_int(2, 10);
        int count = rng.uniform_int(1, 8);
        std::vector<VSet> sets;
        int gamma = rng.uniform_int(1, 4);
        for (int i = 0; i < count; ++i) {
            VSet s;
            int size = rng.uniform_int(1, std::min(gamma, universe));
            while (static_cast<int>(s.size()) < size)
                s = normalized(set_union(s, {rng.uniform_int(0, universe - 1)}));
            sets.push_back(s);
        }
        auto hit = greedy_hit_approx(sets);
        for (const auto& s : sets) CHECK(sets_intersect(hit, s));
        auto inst = HittingInstance::make(sets, {}, universe);
        auto opt = brute_hitting(inst);
        REQUIRE(opt.feasible);
        CHECK(static_cast<double>(hit.size()) <= gamma * opt.weight);
    }
}

TEST_CASE("min weight hitting set examples") {
    auto inst1 = HittingInstance::make({{1, 2}, {2, 3}}, {}, 1);
    auto r1 = run_dp(inst1);
    REQUIRE(r1.has_value());
    CHECK(r1->vertices == VSet{2});
    CHECK(r1->weight == 1.0);

    auto inst2 = HittingInstance::make({{1, 2}}, {}, 0);
    CHECK_FALSE(run_dp(inst2).has_value());

    auto inst3 = HittingInstance::make({{1, 2}, {2, 3}}, {{2, 5.0}, {1, 1.0}, {3, 1.0}}, 2);
    auto r3 = run_dp(inst3);
    REQUIRE(r3.has_value());
    CHECK(r3->vertices == VSet{1, 3});
    CHECK(r3->weight == 2.0);

    // empty collection: hit by the empty set
    auto inst4 = HittingInstance::make({}, {}, 0);
    auto r4 = run_dp(inst4);
    REQUIRE(r4.has_value());
    CHECK(r4->vertices.empty());
    CHECK(r4->weight == 0.0);

    // empty set inside the collection: infeasible, flagged at construction
    auto inst5 = HittingInstance::make({{1}, {}}, {}, 3);
    CHECK(inst5.has_empty_set);
    CHECK_FALSE(run_dp(inst5).has_value());
}

TEST_CASE("DP equals brute force on random instances") {
    Rng rng(909);
    int checked = 0;
    for (int t = 0; t < 300; ++t) {
        int universe = rng.uniform_int(1, 16);
        int count = rng.uniform_int(0, 12);
        std::vector<VSet> sets;
        for (int i = 0; i < count; ++i) {
            VSet s;
            int size = rng.uniform_int(1, std::min(4, universe));
            while (static_cast<int>(s.size()) < size)
                s = normalized(set_union(s, {rng.uniform_int(0, universe - 1)}));
            sets.push_back(s);
        }
        std::vector<std::pair<int, double>> weights;
        if (rng.uniform01() < 0.5)
            for (int v = 0; v < universe; ++v)
                weights.emplace_back(v, static_cast<double>(rng.uniform_int(1, 10)));
        long long k = rng.uniform_int(0, 5);
        auto inst = HittingInstance::make(sets, weights, k);
        auto brute = brute_hitting(inst);
        auto dp = run_dp(inst);
        CHECK(dp.has_value() == brute.feasible);
        if (dp) {
            CHECK(dp->weight == brute.weight);
            CHECK(static_cast<long long>(dp->vertices.size()) <= k);
            for (const auto& s : inst.collection) CHECK(sets_intersect(dp->vertices, s));
            double w = 0;
            for (int v : dp->vertices) w += inst.weight_of(v);
            CHECK(w == dp->weight);
        }
        ++checked;
    }
    CHECK(checked == 300);
}

TEST_CASE("k-tight instances") {
    // exactly k disjoint sets force |S| = k
    Rng rng(11);
    for (int k = 1; k <= 4; ++k) {
        std::vector<VSet> sets;
        for (int i = 0; i < k; ++i) sets.push_back({2 * i, 2 * i + 1});
        auto inst = HittingInstance::make(sets, {}, k);
        auto dp = run_dp(inst);
        REQUIRE(dp.has_value());
        CHECK(static_cast<long long>(dp->vertices.size()) == k);
        auto tight = HittingInstance::make(sets, {}, k - 1);
        CHECK_FALSE(run_dp(tight).has_value());
    }
    (void)rng;
}

TEST_CASE("sentinel reduction preserves answers") {
    // S hits X  <=>  S dominates all sentinels in H, checked exhaustively
    Rng rng(616);
    for (int t = 0; t < 40; ++t) {
        int universe = rng.uniform_int(1, 10);
        int count = rng.uniform_int(1, 5);
        std::vector<VSet> sets;
        for (int i = 0; i < count; ++i) {
            VSet s;
            int size = rng.uniform_int(1, std::min(3, universe));
            while (static_cast<int>(s.size()) < size)
                s = normalized(set_union(s, {rng.uniform_int(0, universe - 1)}));
            sets.push_back(s);
        }
        auto gg = gaifman_graph(sets);
        int p = gg.graph.n();
        auto edges = gg.graph.edges();
        for (int i = 0; i < count; ++i)
            for (int v : sets[i]) edges.emplace_back(gg.local_of[v], p + i);
        Graph h = Graph::from_edges(p + count, edges);
        for (long long mask = 0; mask < (1LL << p); ++mask) {
            VSet local;
            for (int i = 0; i < p; ++i)
                if (mask & (1LL << i)) local.push_back(i);
            bool hits = true;
            for (const auto& s : sets) {
                VSet loc;
                for (int v : s) loc.push_back(gg.local_of[v]);
                if (!sets_intersect(local, normalized(loc))) hits = false;
            }
            bool dominates = true;
            for (int i = 0; i < count; ++i) {
                bool dom = false;
                for (int v : local)
                    if (h.has_edge(v, p + i)) dom = true;
                if (!dom) dominates = false;
            }
            CHECK(hits == dominates);
        }
    }
}

TEST_CASE("instance file round trip") {
    auto inst = HittingInstance::make({{1, 2}, {4}}, {{1, 2.5}, {4, 1.0}}, 3);
    std::istringstream in(instance_to_text(inst));
    auto back = parse_instance(in);
    CHECK(back.collection == inst.collection);
    CHECK(back.k == inst.k);
    CHECK(back.weight_of(1) == 2.5);
    CHECK(instance_to_text(back) == instance_to_text(inst));
}
