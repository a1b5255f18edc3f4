#include "fhit/solver.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>

#include "fhit/kernel.hpp"

namespace fhit {

namespace {

double now_ms() {
    using namespace std::chrono;
    return duration<double, std::milli>(steady_clock::now().time_since_epoch()).count();
}

}  // namespace

bool WeightedInstance::unit_weights() const {
    for (double w : weights)
        if (w != weights.front()) return false;
    return true;
}

WeightedInstance WeightedInstance::make(Graph g, std::vector<double> w, long long k,
                                        PatternFamily fam) {
    WeightedInstance inst;
    if (w.empty()) w.assign(g.n(), 1.0);
    if (static_cast<int>(w.size()) != g.n())
        throw input_error("weight vector size mismatch");
    for (double x : w)
        if (!(x >= 0) || !std::isfinite(x)) throw input_error("weights must be finite and >= 0");
    inst.graph = std::move(g);
    inst.weights = std::move(w);
    inst.k = k;
    inst.family = std::move(fam);
    return inst;
}

std::string RunReport::to_text() const {
    std::ostringstream os;
    os << "kernel_applied " << kernel_applied << "\n";
    os << "kernel_truncated " << kernel_truncated << "\n";
    os << "kernel_size " << kernel_size << "\n";
    os << "kernel_rounds " << kernel_rounds << "\n";
    os << "collections " << collections << "\n";
    os << "max_gaifman_width " << max_gaifman_width << "\n";
    os << "mean_gaifman_width " << mean_gaifman_width << "\n";
    os << "delta " << delta << "\n";
    os << "tau " << tau << "\n";
    os << "plus_construction " << reduce.used_plus_construction << "\n";
    os << "clique_sets " << reduce.clique_sets << "\n";
    os << "clique_tree_nodes " << reduce.clique_tree_nodes << "\n";
    os << "branch_tree_nodes " << reduce.branch_tree_nodes << "\n";
    os << "budget_kills " << reduce.budget_kills << "\n";
    os << "theta_yes " << reduce.theta_yes << "\n";
    os << "theta_no " << reduce.theta_no << "\n";
    os << "yes_used " << reduce.max_yes_used << "\n";
    os << "no_used " << reduce.max_no_used << "\n";
    os << "heavy_cores " << reduce.heavy_core_count << "\n";
    os << "copies " << reduce.copy_count << "\n";
    os << "facts_not_guaranteed " << reduce.facts_not_guaranteed << "\n";
    os << "fallback_rerun " << reduce.fallback_rerun << "\n";
    os << "ms_kernel " << ms_kernel << "\n";
    os << "ms_reduce " << ms_reduce << "\n";
    os << "ms_dp " << ms_dp << "\n";
    os << "ms_total " << ms_total << "\n";
    return os.str();
}

SolveResult solve(const WeightedInstance& inst, const SolveConfig& cfg) {
    SolveResult res;
    double t0 = now_ms();
    ReduceConfig rcfg = default_reduce_config(inst.k);
    if (cfg.delta) rcfg.delta = *cfg.delta;
    if (cfg.tau) rcfg.tau = *cfg.tau;
    rcfg.theta_yes = cfg.theta_yes;
    rcfg.theta_no = cfg.theta_no;
    res.report.delta = rcfg.delta;
    res.report.tau = rcfg.tau;

    // kernelization preserves hitting sets, not weights; restrict it to
    // uniform-weight instances and keep the graph intact otherwise
    const Graph* work = &inst.graph;
    std::vector<int> work_vertices;  // work id -> original id
    Graph kernel_graph;
    if (cfg.kernel_enabled && inst.unit_weights()) {
        double tk = now_ms();
        auto kr = kernelize(inst.graph, inst.family, inst.k,
                            default_degree_threshold(inst.graph, inst.family, inst.k));
        res.report.ms_kernel = now_ms() - tk;
        res.report.kernel_applied = true;
        res.report.kernel_truncated = kr.truncated;
        res.report.kernel_size = kr.gprime.n();
        res.report.kernel_rounds = static_cast<long long>(kr.rounds.size());
        kernel_graph = kr.gprime;
        work = &kernel_graph;
        work_vertices = kr.gprime_vertices;
    }

    double tr = now_ms();
    auto reduced = reduce_to_instances(*work, inst.family, inst.k, rcfg);
    res.report.ms_reduce = now_ms() - tr;
    res.report.reduce = reduced.report;
    res.report.collections = static_cast<long long>(reduced.collections.size());

    double td_ms = now_ms();
    std::optional<Solution> best;
    int best_collection = -1;
    long long width_sum = 0, width_n = 0;
    for (std::size_t i = 0; i < reduced.collections.size(); ++i) {
        // map sets to original vertex ids
        std::vector<VSet> sets;
        for (const auto& s : reduced.collections[i].sets) {
            VSet orig;
            for (int v : s) orig.push_back(work_vertices.empty() ? v : work_vertices[v]);
            sets.push_back(normalized(orig));
        }
        std::vector<std::pair<int, double>> wts;
        VSet universe;
        for (const auto& s : sets) universe = set_union(universe, s);
        for (int v : universe) wts.emplace_back(v, inst.weights[v]);
        auto hinst = HittingInstance::make(sets, wts, inst.k);
        std::optional<HittingSolution> sol;
        if (hinst.collection.empty()) {
            sol = HittingSolution{};
        } else {
            auto gg = gaifman_graph(hinst.collection);
            auto td = tree_decomposition(gg.graph, cfg.td_mode);
            std::string why;
            if (!td.valid_for(gg.graph, &why))
                throw contract_error("uncertified decomposition: " + why);
            width_sum += td.width();
            ++width_n;
            res.report.max_gaifman_width = std::max(res.report.max_gaifman_width, td.width());
            sol = min_weight_hitting_set(hinst, td);
        }
        if (!sol) continue;
        if (!best || sol->weight < best->weight ||
            (sol->weight == best->weight && sol->vertices < best->vertices)) {
            best = Solution{};
            best->vertices = sol->vertices;
            best->weight = sol->weight;
            best_collection = static_cast<int>(i);
        }
    }
    res.report.ms_dp = now_ms() - td_ms;
    res.report.mean_gaifman_width =
        width_n == 0 ? 0.0 : static_cast<double>(width_sum) / static_cast<double>(width_n);

    if (best) {
        best->certificate = "collection " + std::to_string(best_collection);
        // re-verify against the original graph
        VSet rest;
        for (int v = 0; v < inst.graph.n(); ++v)
            if (!set_contains(best->vertices, v)) rest.push_back(v);
        auto sub = induced_subgraph(inst.graph, rest);
        if (!is_family_free(sub.graph, inst.family))
            throw contract_error("pipeline returned a non-hitting set");
        if (static_cast<long long>(best->vertices.size()) > inst.k)
            throw contract_error("pipeline returned an oversized set");
        best->verified = true;
        res.solution = std::move(best);
    }
    res.report.ms_total = now_ms() - t0;
    return res;
}

// ---------------------------------------------------------------------------
// Oracle: naive enumeration plus branch and bound, separate from the pattern
// module on purpose.

namespace {

void naive_rec(const Graph& g, const Graph& f, std::vector<int>& map, std::vector<bool>& used,
               int a, std::set<VSet>& out) {
    if (a == f.n()) {
        VSet s(map.begin(), map.end());
        out.insert(normalized(s));
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
        naive_rec(g, f, map, used, a + 1, out);
        used[v] = false;
    }
}

struct OracleSearch {
    const std::vector<VSet>& sets;
    const WeightedInstance& inst;
    double best_weight = std::numeric_limits<double>::infinity();
    bool found = false;
    VSet best_set;

    int first_unhit(const VSet& s) const {
        for (int i = 0; i < static_cast<int>(sets.size()); ++i)
            if (!sets_intersect(sets[i], s)) return i;
        return -1;
    }

    void rec(VSet& chosen, double weight) {
        if (weight >= best_weight) return;
        int unhit = first_unhit(chosen);
        if (unhit == -1) {
            best_weight = weight;
            best_set = chosen;
            found = true;
            return;
        }
        if (static_cast<long long>(chosen.size()) >= inst.k) return;
        for (int v : sets[unhit]) {
            if (set_contains(chosen, v)) continue;
            VSet next = set_union(chosen, {v});
            rec(next, weight + inst.weights[v]);
        }
    }
};

}  // namespace

std::vector<VSet> naive_copy_vertex_sets(const Graph& g, const PatternFamily& fam) {
    std::set<VSet> out;
    for (const auto& p : fam.patterns()) {
        std::vector<int> map(p.graph.n(), -1);
        std::vector<bool> used(g.n(), false);
        naive_rec(g, p.graph, map, used, 0, out);
    }
    return {out.begin(), out.end()};
}

std::optional<Solution> oracle_solve(const WeightedInstance& inst) {
    auto sets = naive_copy_vertex_sets(inst.graph, inst.family);
    OracleSearch search{sets, inst};
    VSet empty;
    search.rec(empty, 0);
    if (!search.found) return std::nullopt;
    Solution sol;
    sol.vertices = search.best_set;
    sol.weight = search.best_weight;
    sol.certificate = "oracle-exhaustive";
    sol.verified = true;
    return sol;
}

std::optional<Solution> oracle_solve_enum(const WeightedInstance& inst) {
    if (inst.graph.n() > 20)
        throw capability_error("subset enumeration oracle is limited to n <= 20");
    auto sets = naive_copy_vertex_sets(inst.graph, inst.family);
    int n = inst.graph.n();
    std::optional<Solution> best;
    for (long long mask = 0; mask < (1LL << n); ++mask) {
        VSet s;
        for (int v = 0; v < n; ++v)
            if (mask & (1LL << v)) s.push_back(v);
        if (static_cast<long long>(s.size()) > inst.k) continue;
        bool hits = true;
        for (const auto& x : sets)
            if (!sets_intersect(x, s)) { hits = false; break; }
        if (!hits) continue;
        double w = 0;
        for (int v : s) w += inst.weights[v];
        if (!best || w < best->weight) {
            best = Solution{};
            best->vertices = s;
            best->weight = w;
            best->certificate = "oracle-exhaustive";
            best->verified = true;
        }
    }
    return best;
}

}  // namespace fhit
