#include "fhit/branching.hpp"

#include <cmath>
#include <istream>
#include <set>
#include <sstream>

#include "fhit/hitting_dp.hpp"
#include "fhit/wcol.hpp"

namespace fhit {

long long default_theta_yes(int family_size, int gamma, long long delta, long long k) {
    long long base = sat_mul(sat_pow(sat_mul(sat_pow(gamma, 2 * gamma + 1), delta), gamma),
                             sat_factorial(gamma));
    return sat_mul(sat_mul(family_size, base), k);
}

long long default_theta_no(int family_size, int gamma, long long delta, long long k, int wcol) {
    if (delta <= gamma + wcol) return k;
    long long num = sat_mul(
        sat_mul(sat_mul(gamma, family_size),
                sat_mul(sat_pow(sat_mul(2, sat_mul(sat_pow(gamma, gamma), gamma + wcol)), gamma),
                        sat_factorial(gamma))),
        wcol);
    long long den = delta - gamma - wcol;
    long long ratio = (num + den - 1) / den;
    return sat_mul(ratio, k);
}

namespace {

struct Generator {
    const Graph& g;
    const PatternFamily& fam;
    long long k;
    long long delta;
    const HeavyCoreTable& table;
    BranchBudgets budgets;
    BranchStats* stats;
    std::set<std::vector<VSet>> seen;  // canonical collections
    std::vector<Collection> out;

    // canonical distinct sets of X values among cores, for safe budgets
    static long long distinct_core_sets(const HeavyCoreTable& table) {
        std::set<VSet> xs;
        for (const auto& t : table.cores) xs.insert(t.vertices);
        return static_cast<long long>(xs.size());
    }

    void branch(const VSet& u, const std::vector<VSet>& chosen, long long d_yes, long long d_no,
                std::string& path) {
        ++stats->tree_nodes;
        if (d_yes < 0 || d_no < 0) {
            ++stats->budget_kills;
            return;
        }
        stats->max_yes_used = std::max(stats->max_yes_used, budgets.theta_yes - d_yes);
        stats->max_no_used = std::max(stats->max_no_used, budgets.theta_no - d_no);

        // lexicographically smallest U-active core whose X is not yet chosen
        int pick = -1;
        for (int i = 0; i < static_cast<int>(table.cores.size()); ++i) {
            const auto& x = table.cores[i].vertices;
            if (x.empty()) continue;  // never U-minimal
            if (std::find(chosen.begin(), chosen.end(), x) != chosen.end()) continue;
            auto st = classify(table, i, u);
            if (st.u_active) { pick = i; break; }
        }
        if (pick == -1) {
            auto sub = induced_subgraph(g, u);
            if (!is_family_free(sub.graph, fam)) return;
            std::vector<VSet> residual;
            for (const auto& x : chosen) residual.push_back(set_minus(x, u));
            auto hit = greedy_hit_approx(residual);
            if (static_cast<long long>(hit.size()) > sat_mul(fam.gamma(), k)) return;
            std::set<VSet> dedup(residual.begin(), residual.end());
            for (const auto& s : dedup)
                if (s.empty()) return;  // unhittable leftover; collection is dead
            std::vector<VSet> canon(dedup.begin(), dedup.end());
            if (seen.insert(canon).second) {
                Collection col;
                col.sets = canon;
                col.final_u = u;
                col.branch_path = path;
                out.push_back(std::move(col));
            }
            return;
        }

        const StandardTriple& t = table.cores[pick];
        // yes branch
        {
            auto chosen2 = chosen;
            chosen2.push_back(t.vertices);
            std::size_t mark = path.size();
            path += "Y" + set_to_string(t.vertices) + ";";
            branch(u, chosen2, d_yes - 1, d_no, path);
            path.resize(mark);
        }
        // no branches, one per petal-union guess
        auto w = witness_search(g, fam, t, delta, table.copies);
        if (!w) throw contract_error("active core lost its witness");
        auto guesses = config_sets(fam, t, *w);
        for (const auto& p : guesses) {
            VSet u2 = set_union(u, set_union(t.vertices, p));
            std::size_t mark = path.size();
            path += "N" + set_to_string(t.vertices) + "+" + set_to_string(p) + ";";
            branch(u2, chosen, d_yes, d_no - 1, path);
            path.resize(mark);
        }
    }

    static std::string set_to_string(const VSet& s) {
        std::string r = "{";
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (i) r += ",";
            r += std::to_string(s[i]);
        }
        return r + "}";
    }
};

}  // namespace

CollectionBundle generate_collections(const Graph& g, const PatternFamily& fam, long long k,
                                      long long delta,
                                      std::optional<long long> theta_yes_override,
                                      std::optional<long long> theta_no_override) {
    if (!fam.all_connected())
        throw contract_error("generate_collections needs connected patterns; "
                             "apply plus_construction first");
    if (k < 0 || delta < 1) throw contract_error("generate_collections needs k >= 0, delta >= 1");

    CollectionBundle bundle;
    auto table = enumerate_heavy_cores(g, fam, delta);
    int gamma = fam.gamma();
    auto sigma = choose_ordering(g, 2 * gamma, OrderingMode::Greedy);
    int wc = g.n() == 0 ? 0 : wcol_under(g, sigma, 2 * gamma);
    bundle.stats.wcol_2gamma = wc;
    bundle.stats.facts_not_guaranteed = !(delta > gamma + wc);
    bundle.stats.heavy_core_count = static_cast<long long>(table.cores.size());
    bundle.stats.copy_count = static_cast<long long>(table.copies.size());

    long long clamp_hi = sat_mul(sat_mul(3, std::max(1LL, k)),
                                 std::max<long long>(1, static_cast<long long>(table.cores.size())));
    auto clamp = [&](long long v) { return std::min(std::max(v, 0LL), clamp_hi); };
    bundle.budgets.theta_yes = theta_yes_override
                                   ? *theta_yes_override
                                   : clamp(default_theta_yes(fam.size(), gamma, delta, k));
    bundle.budgets.theta_no = theta_no_override
                                  ? *theta_no_override
                                  : clamp(default_theta_no(fam.size(), gamma, delta, k, wc));

    auto run = [&](BranchBudgets budgets) {
        Generator gen{g, fam, k, delta, table, budgets, &bundle.stats, {}, {}};
        std::string path;
        gen.branch({}, {}, budgets.theta_yes, budgets.theta_no, path);
        return std::move(gen.out);
    };
    bundle.stats.tree_nodes = 0;
    bundle.stats.budget_kills = 0;
    bundle.collections = run(bundle.budgets);

    // The paper's budget theorems need delta > gamma + wcol_2gamma. Outside
    // that regime a pruned branch could hide the only collection some hitting
    // set would match, so any kill forces a rerun with budgets that cannot
    // prune: yes-decisions are bounded by the number of distinct core sets,
    // no-decisions by n (each one grows U).
    if (bundle.stats.budget_kills > 0 && bundle.stats.facts_not_guaranteed) {
        bundle.stats.fallback_rerun = true;
        BranchBudgets safe;
        safe.theta_yes = Generator::distinct_core_sets(table);
        safe.theta_no = g.n();
        bundle.budgets = safe;
        bundle.stats.tree_nodes = 0;
        bundle.stats.budget_kills = 0;
        bundle.stats.max_yes_used = 0;
        bundle.stats.max_no_used = 0;
        bundle.collections = run(safe);
    }
    return bundle;
}

namespace {

struct CliqueBrancher {
    const Graph& g;
    long long k;
    long long tau;
    int gamma;
    CliqueReduceResult result;
    std::set<VSet> seen;

    void branch(const VSet& v) {
        ++result.tree_nodes;
        auto rest = set_minus(all_vertices(), v);
        auto sub = induced_subgraph(g, rest);
        int cap = static_cast<int>(std::min<long long>(tau + gamma + 1, sub.graph.n() + 1));
        auto cb = clique_number_bounded(sub.graph, cap);
        bool small_omega = !(cb.saturated && static_cast<long long>(cap) == tau + gamma + 1);
        if (small_omega) {
            // omega(G - V) <= tau + gamma; emit V (size bound must hold too)
            if (static_cast<long long>(v.size()) <= k && seen.insert(v).second)
                result.sets.push_back(v);
            return;
        }
        if (static_cast<long long>(v.size()) >= k) return;
        // witness clique of size tau+gamma+1; any tau+gamma of it works
        VSet h(cb.witness.begin(), cb.witness.begin() + (tau + gamma));
        VSet h_orig;
        for (int x : h) h_orig.push_back(sub.old_of_new[x]);
        h_orig = normalized(h_orig);
        int hn = static_cast<int>(h_orig.size());
        for (int mask = 1; mask < (1 << hn); ++mask) {
            VSet vp;
            for (int b = 0; b < hn; ++b)
                if (mask & (1 << b)) vp.push_back(h_orig[b]);
            if (static_cast<long long>(vp.size()) <= tau) continue;
            branch(set_union(v, vp));
        }
    }

    VSet all_vertices() const {
        VSet a(g.n());
        for (int i = 0; i < g.n(); ++i) a[i] = i;
        return a;
    }
};

}  // namespace

CliqueReduceResult clique_reduce(const Graph& g, const PatternFamily& fam, long long k,
                                 long long tau) {
    if (tau < 1) throw contract_error("clique_reduce needs tau >= 1");
    if (k < 0) throw contract_error("clique_reduce needs k >= 0");
    CliqueBrancher br{g, k, tau, fam.gamma(), {}, {}};
    br.branch({});
    return br.result;
}

ReduceConfig default_reduce_config(long long k) {
    ReduceConfig cfg;
    cfg.delta = std::max<long long>(2, static_cast<long long>(std::ceil(std::cbrt(
                                           static_cast<double>(std::max<long long>(k, 0))))));
    cfg.tau = std::max<long long>(1, static_cast<long long>(std::ceil(std::sqrt(
                                         static_cast<double>(std::max<long long>(k, 0))))));
    return cfg;
}

ReducedInstances reduce_to_instances(const Graph& g, const PatternFamily& fam, long long k,
                                     const ReduceConfig& cfg) {
    ReducedInstances out;
    const Graph* work = &g;
    const PatternFamily* family = &fam;
    int apex = -1;
    PlusConstruction plus;
    if (!fam.all_connected()) {
        plus = plus_construction(g, fam);
        work = &plus.graph;
        family = &plus.family;
        apex = plus.apex;
        out.report.used_plus_construction = true;
    }

    auto cr = clique_reduce(*work, *family, k, cfg.tau);
    out.report.clique_sets = static_cast<long long>(cr.sets.size());
    out.report.clique_tree_nodes = cr.tree_nodes;
    out.report.theta_yes = -1;
    out.report.theta_no = -1;

    std::set<std::vector<VSet>> seen;
    for (const auto& s : cr.sets) {
        if (apex >= 0 && set_contains(s, apex)) continue;  // {apex} can never be hit
        VSet rest;
        for (int v = 0; v < work->n(); ++v)
            if (!set_contains(s, v)) rest.push_back(v);
        auto sub = induced_subgraph(*work, rest);
        auto bundle = generate_collections(sub.graph, *family, k, cfg.delta, cfg.theta_yes,
                                           cfg.theta_no);
        out.report.branch_tree_nodes += bundle.stats.tree_nodes;
        out.report.budget_kills += bundle.stats.budget_kills;
        out.report.facts_not_guaranteed |= bundle.stats.facts_not_guaranteed;
        out.report.fallback_rerun |= bundle.stats.fallback_rerun;
        out.report.theta_yes = std::max(out.report.theta_yes, bundle.budgets.theta_yes);
        out.report.theta_no = std::max(out.report.theta_no, bundle.budgets.theta_no);
        out.report.max_yes_used = std::max(out.report.max_yes_used, bundle.stats.max_yes_used);
        out.report.max_no_used = std::max(out.report.max_no_used, bundle.stats.max_no_used);
        out.report.heavy_core_count =
            std::max(out.report.heavy_core_count, bundle.stats.heavy_core_count);
        out.report.copy_count = std::max(out.report.copy_count, bundle.stats.copy_count);

        for (const auto& col : bundle.collections) {
            // map back to work ids, strip the apex, prefix the singletons
            std::set<VSet> sets;
            bool dead = false;
            for (const auto& x : col.sets) {
                VSet orig;
                for (int v : x) orig.push_back(sub.old_of_new[v]);
                orig = normalized(orig);
                if (apex >= 0) orig = set_minus(orig, {apex});
                if (orig.empty()) { dead = true; break; }
                sets.insert(orig);
            }
            if (dead) continue;
            for (int v : s) sets.insert({v});
            std::vector<VSet> canon(sets.begin(), sets.end());
            if (!seen.insert(canon).second) continue;
            Collection mapped;
            mapped.sets = std::move(canon);
            for (int v : col.final_u) mapped.final_u.push_back(sub.old_of_new[v]);
            mapped.final_u = normalized(mapped.final_u);
            mapped.branch_path = "S" + Generator::set_to_string(s) + "|" + col.branch_path;
            out.collections.push_back(std::move(mapped));
        }
    }
    return out;
}

std::string bundle_to_text(const std::vector<Collection>& collections, bool provenance) {
    std::ostringstream os;
    os << "collections " << collections.size() << "\n";
    for (const auto& col : collections) {
        os << "collection " << col.sets.size() << "\n";
        for (const auto& s : col.sets) {
            os << "set";
            for (int v : s) os << " " << v;
            os << "\n";
        }
        if (provenance) {
            os << "u";
            for (int v : col.final_u) os << " " << v;
            os << "\n";
            os << "path " << col.branch_path << "\n";
        }
    }
    return os.str();
}

std::vector<Collection> parse_bundle(std::istream& in) {
    std::vector<Collection> out;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head)) continue;
        if (head == "collections") continue;
        if (head == "collection") {
            out.emplace_back();
        } else if (head == "set") {
            if (out.empty()) throw input_error("bundle: set before collection");
            VSet s;
            int v;
            while (ls >> v) s.push_back(v);
            out.back().sets.push_back(normalized(s));
        } else if (head == "u") {
            VSet s;
            int v;
            while (ls >> v) s.push_back(v);
            if (!out.empty()) out.back().final_u = normalized(s);
        } else if (head == "path") {
            std::string rest;
            std::getline(ls, rest);
            if (!out.empty()) out.back().branch_path = rest;
        } else {
            throw input_error("bundle: unknown record '" + head + "'");
        }
    }
    return out;
}

}  // namespace fhit
