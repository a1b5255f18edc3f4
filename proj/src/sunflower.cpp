#include "fhit/sunflower.hpp"

#include <map>
#include <numeric>

namespace fhit {

bool sunflower_is_valid(const SetSystem& sys, const Sunflower& sf) {
    for (int i : sf.members)
        if (i < 0 || i >= static_cast<int>(sys.sets.size())) return false;
    for (std::size_t a = 0; a < sf.members.size(); ++a) {
        if (!is_subset(sf.core, sys.sets[sf.members[a]])) return false;
        for (std::size_t b = a + 1; b < sf.members.size(); ++b) {
            if (set_intersection(sys.sets[sf.members[a]], sys.sets[sf.members[b]]) != sf.core)
                return false;
        }
    }
    if (sf.members.size() == 1 && sf.core != sys.sets[sf.members[0]]) return false;
    return true;
}

long long sunflower_threshold(int r, int p) {
    return sat_mul(sat_pow(r - 1, p), sat_factorial(p));
}

namespace {

// ordering used by every greedy scan: smallest set first, stable in input order
std::vector<int> size_sorted_indices(const std::vector<VSet>& sets) {
    std::vector<int> idx(sets.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](int a, int b) { return sets[a].size() < sets[b].size(); });
    return idx;
}

std::optional<Sunflower> find_rec(const std::vector<VSet>& sets,
                                  const std::vector<int>& live, int r) {
    if (r == 1) {
        Sunflower sf;
        sf.members = {live.front()};
        sf.core = sets[live.front()];
        return sf;
    }
    // greedy maximal disjoint subfamily, smallest sets first
    std::vector<int> order;
    {
        std::vector<int> by_size = live;
        std::stable_sort(by_size.begin(), by_size.end(),
                         [&](int a, int b) { return sets[a].size() < sets[b].size(); });
        order = by_size;
    }
    std::vector<int> disjoint;
    VSet taken;
    for (int i : order) {
        if (!sets_intersect(sets[i], taken)) {
            disjoint.push_back(i);
            taken = set_union(taken, sets[i]);
        }
        if (static_cast<int>(disjoint.size()) == r) break;
    }
    if (static_cast<int>(disjoint.size()) >= r) {
        Sunflower sf;
        sf.members.assign(disjoint.begin(), disjoint.begin() + r);
        sf.core = sets[sf.members[0]];
        for (int i : sf.members) sf.core = set_intersection(sf.core, sets[i]);
        return sf;
    }
    // pick the most frequent element (smallest id on ties) and recurse on the
    // sets containing it, with the element removed
    std::map<int, int> freq;
    for (int i : live)
        for (int x : sets[i]) ++freq[x];
    if (freq.empty()) return std::nullopt;
    int best_x = -1, best_c = -1;
    for (auto [x, c] : freq)
        if (c > best_c) { best_x = x; best_c = c; }
    std::vector<VSet> sub_sets = sets;
    std::vector<int> sub_live;
    for (int i : live)
        if (set_contains(sets[i], best_x)) {
            sub_sets[i] = set_minus(sets[i], {best_x});
            sub_live.push_back(i);
        }
    auto sub = find_rec(sub_sets, sub_live, r);
    if (!sub) return std::nullopt;
    sub->core = set_union(sub->core, {best_x});
    return sub;
}

}  // namespace

std::optional<Sunflower> find_sunflower(const SetSystem& sys, int r) {
    if (r < 1) throw contract_error("sunflower size must be >= 1");
    if (static_cast<int>(sys.sets.size()) < r) return std::nullopt;
    std::vector<int> live(sys.sets.size());
    std::iota(live.begin(), live.end(), 0);
    auto sf = find_rec(sys.sets, live, r);
    if (sf) {
        std::sort(sf->members.begin(), sf->members.end());
        // recompute the exact core of the chosen members
        sf->core = sys.sets[sf->members[0]];
        for (int i : sf->members) sf->core = set_intersection(sf->core, sys.sets[i]);
        if (!sunflower_is_valid(sys, *sf)) return std::nullopt;
    }
    return sf;
}

std::vector<int> maximal_sunflower_with_core(const SetSystem& sys, const VSet& core) {
    std::vector<int> chosen;
    VSet petals_taken;
    for (int i : size_sorted_indices(sys.sets)) {
        const VSet& s = sys.sets[i];
        if (!is_subset(core, s)) continue;
        VSet petal = set_minus(s, core);
        if (sets_intersect(petal, petals_taken)) continue;
        // an empty petal means the set equals the core; several such copies
        // collapse to one distinct set in a set system
        chosen.push_back(i);
        petals_taken = set_union(petals_taken, petal);
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

}  // namespace fhit
