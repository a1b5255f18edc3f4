#include "doctest.h"

#include "fhit/sunflower.hpp"
#include "test_helpers.hpp"

using namespace fhit;
using namespace fhit_test;

namespace {

// brute force: does any r-subset of the system form a sunflower?
bool sunflower_exists(const SetSystem& sys, int r) {
    int n = static_cast<int>(sys.sets.size());
    std::vector<int> pick;
    std::function<bool(int)> rec = [&](int from) -> bool {
        if (static_cast<int>(pick.size()) == r) {
            VSet core = sys.sets[pick[0]];
            for (int i : pick) core = set_intersection(core, sys.sets[i]);
            Sunflower sf{core, pick};
            return sunflower_is_valid(sys, sf);
        }
        for (int i = from; i < n; ++i) {
            pick.push_back(i);
            if (rec(i + 1)) return true;
            pick.pop_back();
        }
        return false;
    };
    return rec(0);
}

SetSystem random_distinct_system(int universe, int p, int count, Rng& rng) {
    SetSystem sys;
    sys.universe = universe;
    std::vector<VSet> seen;
    int guard = 0;
    while (static_cast<int>(sys.sets.size()) < count && guard++ < 100000) {
        int size = rng.uniform_int(1, p);
        VSet s;
        while (static_cast<int>(s.size()) < size) {
            int v = rng.uniform_int(0, universe - 1);
            if (!set_contains(normalized(s), v)) s.push_back(v);
            s = normalized(s);
        }
        if (std::find(sys.sets.begin(), sys.sets.end(), s) == sys.sets.end())
            sys.sets.push_back(s);
    }
    return sys;
}

}  // namespace

TEST_CASE("find sunflower examples") {
    SetSystem sys{5, {{1, 2}, {1, 3}, {1, 4}}};
    auto sf = find_sunflower(sys, 3);
    REQUIRE(sf.has_value());
    CHECK(sf->core == VSet{1});
    CHECK(sunflower_is_valid(sys, *sf));

    SetSystem disj{4, {{1}, {2}, {3}}};
    auto sf2 = find_sunflower(disj, 3);
    REQUIRE(sf2.has_value());
    CHECK(sf2->core.empty());

    SetSystem tri{3, {{0, 1}, {1, 2}, {2, 0}}};
    CHECK_FALSE(find_sunflower(tri, 3).has_value());
    CHECK_FALSE(sunflower_exists(tri, 3));  // truly none
}

TEST_CASE("sunflower threshold guarantee") {
    // |A| > (r-1)^p * p! always yields a sunflower of size r
    Rng rng(4242);
    int found = 0;
    for (int t = 0; t < 200; ++t) {
        int p = rng.uniform_int(1, 3);
        int r = rng.uniform_int(2, 4);
        long long need = sunflower_threshold(r, p) + 1;
        int universe = rng.uniform_int(6, 14);
        // a universe can hold at most C(universe, <=p) distinct sets
        long long space = 0;
        for (const auto& s : small_subsets(universe, p))
            if (!s.empty()) ++space;
        if (space < need) { --t; continue; }
        auto sys = random_distinct_system(universe, p, static_cast<int>(need), rng);
        REQUIRE(static_cast<long long>(sys.sets.size()) == need);
        auto sf = find_sunflower(sys, r);
        REQUIRE(sf.has_value());
        CHECK(static_cast<int>(sf->members.size()) == r);
        CHECK(sunflower_is_valid(sys, *sf));
        ++found;
    }
    CHECK(found == 200);
}

TEST_CASE("find sunflower agrees with brute force when it answers") {
    Rng rng(1234);
    for (int t = 0; t < 80; ++t) {
        auto sys = random_distinct_system(rng.uniform_int(4, 8), rng.uniform_int(1, 3),
                                          rng.uniform_int(1, 7), rng);
        int r = rng.uniform_int(1, 4);
        auto sf = find_sunflower(sys, r);
        if (sf) {
            CHECK(static_cast<int>(sf->members.size()) == r);
            CHECK(sunflower_is_valid(sys, *sf));
            CHECK(sunflower_exists(sys, r));
        }
    }
}

TEST_CASE("maximal sunflower with core") {
    // star edges, core = center
    SetSystem star_edges{5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}};
    CHECK(maximal_sunflower_with_core(star_edges, {0}).size() == 4);

    SetSystem no_super{4, {{1, 2}}};
    CHECK(maximal_sunflower_with_core(no_super, {3}).empty());

    // triangle edge-sets with core {0}: both {0,1} and {0,2} qualify
    SetSystem tri{3, {{0, 1}, {1, 2}, {0, 2}}};
    auto got = maximal_sunflower_with_core(tri, {0});
    CHECK(got == std::vector<int>{0, 2});

    // maximality: no remaining set extends the chosen family
    Rng rng(555);
    for (int t = 0; t < 60; ++t) {
        auto sys = random_distinct_system(rng.uniform_int(4, 9), 3, rng.uniform_int(1, 10), rng);
        VSet core;
        if (rng.uniform01() < 0.7) core.push_back(rng.uniform_int(0, sys.universe - 1));
        auto picked = maximal_sunflower_with_core(sys, core);
        VSet petals;
        for (int i : picked) {
            CHECK(is_subset(core, sys.sets[i]));
            VSet petal = set_minus(sys.sets[i], core);
            CHECK_FALSE(sets_intersect(petal, petals));
            petals = set_union(petals, petal);
        }
        for (int i = 0; i < static_cast<int>(sys.sets.size()); ++i) {
            if (std::find(picked.begin(), picked.end(), i) != picked.end()) continue;
            if (!is_subset(core, sys.sets[i])) continue;
            // any unpicked superset of the core must collide with a chosen petal
            CHECK(sets_intersect(set_minus(sys.sets[i], core), petals));
        }
    }
}
