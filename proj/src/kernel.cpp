#include "fhit/kernel.hpp"

#include <set>
#include <sstream>

#include "fhit/sunflower.hpp"

namespace fhit {

long long default_degree_threshold(const Graph& g, const PatternFamily& fam, long long k) {
    long long d = degeneracy(g);
    return sat_add(sat_mul(k + fam.gamma(), std::max(1LL, d)), 1);
}

namespace {

// distinct vertex sets of copies inside g0[K]
std::vector<VSet> pattern_sets_within(const Graph& g0, const PatternFamily& fam, const VSet& kept) {
    auto sub = induced_subgraph(g0, kept);
    std::set<VSet> sets;
    for (const auto& c : enumerate_copies(sub.graph, fam)) {
        VSet orig;
        for (int v : c.vertex_of_pattern) orig.push_back(sub.old_of_new[v]);
        sets.insert(normalized(orig));
    }
    return {sets.begin(), sets.end()};
}

}  // namespace

KernelResult kernelize(const Graph& g, const PatternFamily& fam, long long k,
                       long long degree_threshold) {
    if (k < 0) throw contract_error("kernelize needs k >= 0");
    if (degree_threshold < 1) throw contract_error("degree threshold must be >= 1");
    int gamma = fam.gamma();
    KernelResult kr;
    kr.size_bound = sat_mul(sat_factorial(gamma),
                            sat_mul(sat_pow(gamma, gamma + 1), sat_pow(k + 1, gamma)));
    kr.round_bound = sat_mul(sat_factorial(gamma),
                             sat_mul(sat_pow(gamma, gamma), sat_pow(k + 1, gamma)));

    // lines 1-3: smallest-last ordering, cut at the first back-degree violation
    auto ord = smallest_last_ordering(g);
    auto bd = back_degrees(g, ord);
    int cut = g.n();  // prefix length
    for (int i = 0; i < g.n(); ++i)
        if (bd[i] >= degree_threshold) { cut = i + 1; break; }
    VSet prefix(ord.perm.begin(), ord.perm.begin() + cut);
    prefix = normalized(prefix);
    bool truncated = cut < g.n();
    if (truncated) {
        // sound only when the prefix provably has no budget-k hitting set:
        // a clique of more than k + gamma vertices survives any k deletions
        auto pre = induced_subgraph(g, prefix);
        auto cb = clique_number_bounded(pre.graph, static_cast<int>(std::min<long long>(
                                                       k + gamma + 1, pre.graph.n() + 1)));
        bool infeasible_certified =
            k + gamma + 1 <= pre.graph.n() && cb.saturated;
        if (!infeasible_certified) {
            truncated = false;
            prefix.clear();
            for (int v = 0; v < g.n(); ++v) prefix.push_back(v);
        }
    }
    auto g0view = induced_subgraph(g, prefix);
    kr.g0 = g0view.graph;
    kr.g0_vertices = prefix;
    kr.truncated = truncated;

    // lines 4-9: grow K around constrained copies, collect big-sunflower cores
    VSet kept;                 // K, g0 ids
    std::vector<VSet> cores;   // X collection, g0 ids
    while (true) {
        // find V in V_F(G0) with V not inside K and no X in cores inside V,
        // by scanning feasible pairs (F, I = V cap K)
        std::optional<FCopy> found;
        int found_pattern = -1;
        std::vector<VSet> kept_subsets;  // candidate intersections I
        {
            // subsets of K of size < gamma, small-first for determinism
            std::vector<VSet> frontier{{}};
            kept_subsets.push_back({});
            for (int size = 1; size < gamma; ++size) {
                std::vector<VSet> next;
                for (const auto& s : frontier) {
                    for (std::size_t vi = 0; vi < kept.size(); ++vi) {
                        if (!s.empty() && kept[vi] <= s.back()) continue;
                        VSet t = s;
                        t.push_back(kept[vi]);
                        kept_subsets.push_back(t);
                        next.push_back(std::move(t));
                    }
                }
                frontier = std::move(next);
            }
        }
        for (int pi = 0; pi < fam.size() && !found; ++pi) {
            PatternFamily single({fam.pattern(pi)});
            int pat_n = fam.pattern(pi).graph.n();
            for (const auto& inter : kept_subsets) {
                if (static_cast<int>(inter.size()) > pat_n - 1) continue;
                bool blocked = false;
                for (const auto& x : cores)
                    if (is_subset(x, inter)) { blocked = true; break; }
                if (blocked) continue;
                VSet forb = set_minus(kept, inter);
                auto got = find_constrained_copy(kr.g0, single, inter, forb, {});
                if (got) {
                    found = got;
                    found_pattern = pi;
                    break;
                }
            }
        }
        if (!found) break;
        (void)found_pattern;
        VSet v_set = found->vertex_set();
        kr.rounds.push_back(v_set);
        kept = set_union(kept, v_set);

        // lines 7-9: for X inside K with |X| < gamma, keep cores of maximal
        // sunflowers in V_F(G0[K]) larger than k. Only subsets of member sets
        // can head a sunflower.
        auto sets_in_kept = pattern_sets_within(kr.g0, fam, kept);
        SetSystem sys{kr.g0.n(), sets_in_kept};
        std::set<VSet> candidates;
        for (const auto& s : sets_in_kept) {
            // all proper-size subsets of s
            int sn = static_cast<int>(s.size());
            for (int mask = 0; mask < (1 << sn); ++mask) {
                VSet x;
                for (int b = 0; b < sn; ++b)
                    if (mask & (1 << b)) x.push_back(s[b]);
                if (static_cast<int>(x.size()) < gamma) candidates.insert(x);
            }
        }
        for (const auto& x : candidates) {
            if (std::find(cores.begin(), cores.end(), x) != cores.end()) continue;
            auto flower = maximal_sunflower_with_core(sys, x);
            if (static_cast<long long>(flower.size()) > k) cores.push_back(x);
        }
        std::sort(cores.begin(), cores.end());
    }

    kr.kept = kept;
    kr.cores = cores;
    auto gp = induced_subgraph(kr.g0, kept);
    kr.gprime = gp.graph;
    kr.gprime_vertices.clear();
    for (int v : kept) kr.gprime_vertices.push_back(kr.g0_vertices[v]);
    return kr;
}

std::string kernel_trace(const KernelResult& kr) {
    std::ostringstream os;
    auto emit_set = [&](const char* tag, const VSet& s) {
        os << tag;
        for (int v : s) os << " " << kr.g0_vertices[v];
        os << "\n";
    };
    os << "truncated " << (kr.truncated ? 1 : 0) << "\n";
    os << "g0_n " << kr.g0.n() << "\n";
    os << "rounds " << kr.rounds.size() << "\n";
    for (const auto& r : kr.rounds) emit_set("round", r);
    emit_set("kept", kr.kept);
    for (const auto& x : kr.cores) emit_set("core", x);
    os << "gprime_n " << kr.gprime.n() << "\n";
    os << "size_bound " << kr.size_bound << "\n";
    return os.str();
}

}  // namespace fhit
