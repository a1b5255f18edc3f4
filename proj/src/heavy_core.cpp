#include "fhit/heavy_core.hpp"

#include <map>
#include <set>

namespace fhit {

int StandardTriple::image_of(int v) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
    if (it == vertices.end() || *it != v) return -1;
    return image[it - vertices.begin()];
}

bool triple_precedes(const StandardTriple& a, const StandardTriple& b) {
    if (a.pattern != b.pattern) return false;
    if (a.vertices.size() >= b.vertices.size()) return false;
    for (std::size_t i = 0; i < a.vertices.size(); ++i)
        if (b.image_of(a.vertices[i]) != a.image[i]) return false;
    return is_subset(a.vertices, b.vertices);
}

StandardTriple restrict_copy_to(const FCopy& c, const VSet& x) {
    StandardTriple t;
    t.pattern = c.pattern;
    t.vertices = x;
    t.image.reserve(x.size());
    for (int v : x) {
        auto it = std::find(c.vertex_of_pattern.begin(), c.vertex_of_pattern.end(), v);
        if (it == c.vertex_of_pattern.end())
            throw contract_error("restriction outside the copy's vertex set");
        t.image.push_back(static_cast<int>(it - c.vertex_of_pattern.begin()));
    }
    return t;
}

StandardTriple triple_of_copy(const FCopy& c, int /*unused*/) {
    return restrict_copy_to(c, c.vertex_set());
}

long long witness_size_required(int gamma, std::size_t core_size, long long delta) {
    return sat_mul(sat_pow(gamma, static_cast<int>(core_size)), delta);
}

namespace {

bool copy_matches_triple(const FCopy& c, const StandardTriple& t) {
    if (c.pattern != t.pattern) return false;
    for (std::size_t i = 0; i < t.vertices.size(); ++i) {
        int img = t.image[i];
        if (img < 0 || img >= static_cast<int>(c.vertex_of_pattern.size())) return false;
        if (c.vertex_of_pattern[img] != t.vertices[i]) return false;
    }
    return true;
}

// exact search: can `need` pairwise-disjoint petals be picked? small inputs only
bool exact_pack(const std::vector<VSet>& petals, std::size_t idx, long long need,
                VSet& taken, std::vector<int>& picked, long long& nodes) {
    if (need <= 0) return true;
    if (petals.size() - idx < static_cast<std::size_t>(need)) return false;
    if (++nodes > 2'000'000) return false;
    for (std::size_t i = idx; i < petals.size(); ++i) {
        if (sets_intersect(petals[i], taken)) continue;
        VSet saved = taken;
        taken = set_union(taken, petals[i]);
        picked.push_back(static_cast<int>(i));
        if (exact_pack(petals, i + 1, need - 1, taken, picked, nodes)) return true;
        picked.pop_back();
        taken = saved;
    }
    return false;
}

}  // namespace

bool witness_is_valid(const Graph& g, const PatternFamily& fam, const StandardTriple& t,
                      const HeavyCoreWitness& w) {
    if (static_cast<long long>(w.copies.size()) != w.delta) return false;
    VSet petals_seen;
    bool any_identical = false, any_distinct = false;
    for (const auto& c : w.copies) {
        if (!copy_is_valid(g, fam, c)) return false;
        if (!copy_matches_triple(c, t)) return false;  // X inside V(H), pi agrees with f
        VSet petal = set_minus(c.vertex_set(), t.vertices);
        if (petal.empty()) {
            any_identical = true;
            continue;
        }
        any_distinct = true;
        if (sets_intersect(petal, petals_seen)) return false;
        petals_seen = set_union(petals_seen, petal);
    }
    // identical copies are allowed only as the all-identical full-triple witness
    if (any_identical && any_distinct) return false;
    return true;
}

namespace {

std::optional<HeavyCoreWitness> witness_from_candidates(
    const Graph& g, const PatternFamily& fam, const StandardTriple& t, long long delta,
    const std::vector<const FCopy*>& candidates) {
    long long need = witness_size_required(fam.gamma(), t.vertices.size(), delta);
    HeavyCoreWitness w;
    w.delta = need;
    if (candidates.empty()) return std::nullopt;

    // a full copy (empty petal) repeats into a witness of any size
    if (static_cast<int>(t.vertices.size()) == fam.pattern(t.pattern).graph.n()) {
        w.copies.assign(static_cast<std::size_t>(need), *candidates.front());
        return w;
    }

    // space prune: petals are disjoint and each has gamma' - |X| >= 1 vertices
    int petal_size = fam.pattern(t.pattern).graph.n() - static_cast<int>(t.vertices.size());
    if (static_cast<long long>(g.n()) - static_cast<long long>(t.vertices.size()) <
        need * petal_size)
        return std::nullopt;

    // distinct petals, lexicographic for determinism
    std::map<VSet, const FCopy*> by_petal;
    for (const FCopy* c : candidates) {
        VSet petal = set_minus(c->vertex_set(), t.vertices);
        by_petal.emplace(petal, c);
    }
    std::vector<VSet> petals;
    std::vector<const FCopy*> petal_copy;
    for (auto& [p, c] : by_petal) {
        petals.push_back(p);
        petal_copy.push_back(c);
    }
    if (static_cast<long long>(petals.size()) < need) return std::nullopt;

    // greedy first
    std::vector<int> picked;
    VSet taken;
    for (std::size_t i = 0; i < petals.size() && static_cast<long long>(picked.size()) < need; ++i)
        if (!sets_intersect(petals[i], taken)) {
            picked.push_back(static_cast<int>(i));
            taken = set_union(taken, petals[i]);
        }
    if (static_cast<long long>(picked.size()) < need) {
        // greedy maximal packings are not maximum; fall back to exact search
        picked.clear();
        taken.clear();
        long long nodes = 0;
        if (!exact_pack(petals, 0, need, taken, picked, nodes)) return std::nullopt;
    }
    for (int i : picked) w.copies.push_back(*petal_copy[i]);
    return w;
}

}  // namespace

std::optional<HeavyCoreWitness> witness_search(const Graph& g, const PatternFamily& fam,
                                               const StandardTriple& t, long long delta,
                                               const std::vector<FCopy>& copies) {
    if (delta < 1) throw contract_error("delta must be >= 1");
    std::vector<const FCopy*> candidates;
    for (const auto& c : copies)
        if (copy_matches_triple(c, t)) candidates.push_back(&c);
    return witness_from_candidates(g, fam, t, delta, candidates);
}

HeavyCoreTable enumerate_heavy_cores(const Graph& g, const PatternFamily& fam, long long delta) {
    if (delta < 1) throw contract_error("delta must be >= 1");
    HeavyCoreTable table;
    table.graph = &g;
    table.delta = delta;
    table.gamma = fam.gamma();
    table.family_size = fam.size();
    table.copies = enumerate_copies(g, fam);
    table.sets_by_pattern.assign(fam.size(), {});
    for (int pi = 0; pi < fam.size(); ++pi) {
        std::set<VSet> distinct;
        for (const auto& c : table.copies)
            if (c.pattern == pi) distinct.insert(c.vertex_set());
        table.sets_by_pattern[pi].assign(distinct.begin(), distinct.end());
    }

    // candidate triples are exactly the restrictions of copies to subsets of
    // their vertex sets; the generating copies are exactly the matching ones
    std::map<StandardTriple, std::vector<int>> candidates;
    for (int ci = 0; ci < static_cast<int>(table.copies.size()); ++ci) {
        const auto& c = table.copies[ci];
        VSet vs = c.vertex_set();
        int n = static_cast<int>(vs.size());
        for (int mask = 0; mask < (1 << n); ++mask) {
            VSet x;
            for (int b = 0; b < n; ++b)
                if (mask & (1 << b)) x.push_back(vs[b]);
            candidates[restrict_copy_to(c, x)].push_back(ci);
        }
    }
    for (const auto& [t, copy_ids] : candidates) {
        std::vector<const FCopy*> cand;
        cand.reserve(copy_ids.size());
        for (int ci : copy_ids) cand.push_back(&table.copies[ci]);
        auto w = witness_from_candidates(g, fam, t, delta, cand);
        if (w) {
            table.cores.push_back(t);
            table.core_copies.push_back(copy_ids);
        }
    }
    // cores come out of the map sorted by triple order already
    table.predecessors.assign(table.cores.size(), {});
    for (std::size_t i = 0; i < table.cores.size(); ++i)
        for (std::size_t j = 0; j < table.cores.size(); ++j)
            if (i != j && triple_precedes(table.cores[j], table.cores[i]))
                table.predecessors[i].push_back(static_cast<int>(j));
    return table;
}

CoreStatus classify(const HeavyCoreTable& table, int core_index, const VSet& u) {
    if (core_index < 0 || core_index >= static_cast<int>(table.cores.size()))
        throw contract_error("core index out of range");
    const StandardTriple& t = table.cores[core_index];
    CoreStatus st;

    st.u_minimal = !is_subset(t.vertices, u);
    if (st.u_minimal)
        for (int j : table.predecessors[core_index])
            if (!is_subset(table.cores[j].vertices, u)) { st.u_minimal = false; break; }

    // a copy is U-redundant when another copy of the same pattern sits
    // strictly inside it outside U (and is not fully inside U)
    auto copy_redundant = [&](const VSet& copy_set) {
        VSet outside = set_minus(copy_set, u);
        for (const auto& other : table.sets_by_pattern[t.pattern]) {
            VSet other_out = set_minus(other, u);
            if (other_out.empty()) continue;
            if (is_proper_subset(other_out, outside)) return true;
        }
        return false;
    };
    st.u_redundant = true;
    const auto& matching = table.core_copies[core_index];
    for (int ci : matching)
        if (!copy_redundant(table.copies[ci].vertex_set())) { st.u_redundant = false; break; }
    if (matching.empty()) st.u_redundant = false;
    st.u_active = st.u_minimal && !st.u_redundant;
    return st;
}

std::vector<VSet> config_sets(const PatternFamily& fam, const StandardTriple& t,
                              const HeavyCoreWitness& w) {
    const Graph& f = fam.pattern(t.pattern).graph;
    // connected components of F - f(X)
    VSet fx(t.image.begin(), t.image.end());
    fx = normalized(fx);
    VSet rest;
    for (int a = 0; a < f.n(); ++a)
        if (!set_contains(fx, a)) rest.push_back(a);
    auto sub = induced_subgraph(f, rest);
    auto comps_local = connected_components(sub.graph);
    std::vector<VSet> comps;
    for (const auto& cl : comps_local) {
        VSet c;
        for (int v : cl) c.push_back(sub.old_of_new[v]);
        comps.push_back(normalized(c));
    }
    int gamma = fam.gamma();

    // V_{i,j} = pi_j^{-1}(C_i), deduplicated per component
    std::vector<std::vector<VSet>> proj(comps.size());
    for (std::size_t i = 0; i < comps.size(); ++i) {
        std::set<VSet> distinct;
        for (const auto& c : w.copies) {
            VSet s;
            for (int a : comps[i]) s.push_back(c.vertex_of_pattern[a]);
            distinct.insert(normalized(s));
        }
        proj[i].assign(distinct.begin(), distinct.end());
    }

    // per component: all unions of at most gamma projections
    std::vector<std::set<VSet>> unions(comps.size());
    for (std::size_t i = 0; i < comps.size(); ++i) {
        std::set<VSet> acc{{VSet{}}};
        for (int round = 0; round < gamma; ++round) {
            std::set<VSet> next = acc;
            for (const auto& base : acc)
                for (const auto& p : proj[i]) next.insert(set_union(base, p));
            if (next == acc) break;
            acc = std::move(next);
        }
        unions[i] = std::move(acc);
    }

    std::set<VSet> result{{VSet{}}};
    for (std::size_t i = 0; i < comps.size(); ++i) {
        std::set<VSet> next;
        for (const auto& base : result)
            for (const auto& u : unions[i]) next.insert(set_union(base, u));
        result = std::move(next);
    }
    return {result.begin(), result.end()};
}

}  // namespace fhit
