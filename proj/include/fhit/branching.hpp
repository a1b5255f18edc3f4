#ifndef FHIT_BRANCHING_HPP
#define FHIT_BRANCHING_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fhit/graph.hpp"
#include "fhit/heavy_core.hpp"
#include "fhit/pattern.hpp"

namespace fhit {

struct BranchBudgets {
    long long theta_yes = 0;
    long long theta_no = 0;
};

struct BranchStats {
    long long tree_nodes = 0;
    long long budget_kills = 0;
    long long max_yes_used = 0;
    long long max_no_used = 0;
    bool facts_not_guaranteed = false;  // delta <= gamma + wcol_2gamma(G, sigma)
    bool fallback_rerun = false;        // pruned run discarded, safe budgets used
    int wcol_2gamma = 0;
    long long heavy_core_count = 0;
    long long copy_count = 0;
};

struct Collection {
    std::vector<VSet> sets;   // sorted sets, sorted collection, deduplicated
    VSet final_u;             // provenance
    std::string branch_path;  // provenance, e.g. "Y{1,2};N{0}+{3}"
};

struct CollectionBundle {
    std::vector<Collection> collections;
    BranchBudgets budgets;
    BranchStats stats;
};

// theta_yes = |F| * (gamma^{2gamma+1} delta)^gamma * gamma! * k
long long default_theta_yes(int family_size, int gamma, long long delta, long long k);
// ceil(gamma |F| (2 gamma^gamma (gamma+W))^gamma gamma! W / (delta-gamma-W)) * k
// when delta > gamma + W, else k
long long default_theta_no(int family_size, int gamma, long long delta, long long k, int wcol);

// Algorithm: depth-first branching over U-active heavy cores. Yes-branches
// collect X; no-branches add X plus a guessed petal union P to the
// undeletable set. Leaves emit {X \ U : X in mathcal-X} when G[U] is
// family-free and the greedy hit approximation is at most gamma*k.
// Requires every pattern connected.
CollectionBundle generate_collections(const Graph& g, const PatternFamily& fam, long long k,
                                      long long delta,
                                      std::optional<long long> theta_yes_override = {},
                                      std::optional<long long> theta_no_override = {});

struct CliqueReduceResult {
    std::vector<VSet> sets;  // S_1..S_r
    long long tree_nodes = 0;
};

// Branch on (tau+gamma)-cliques, forcing more than tau vertices of each into
// the solution; emit V when omega(G-V) <= tau+gamma and |V| <= k.
CliqueReduceResult clique_reduce(const Graph& g, const PatternFamily& fam, long long k,
                                 long long tau);

struct ReduceConfig {
    long long delta = 2;
    long long tau = 1;
    std::optional<long long> theta_yes;
    std::optional<long long> theta_no;
};

ReduceConfig default_reduce_config(long long k);

struct ReduceReport {
    bool used_plus_construction = false;
    long long clique_sets = 0;
    long long clique_tree_nodes = 0;
    long long branch_tree_nodes = 0;
    long long budget_kills = 0;
    bool facts_not_guaranteed = false;
    bool fallback_rerun = false;
    long long theta_yes = 0, theta_no = 0;
    long long max_yes_used = 0, max_no_used = 0;
    long long heavy_core_count = 0;
    long long copy_count = 0;
};

struct ReducedInstances {
    std::vector<Collection> collections;  // over V(g), apex never present
    ReduceReport report;
};

// Full composition: apex construction for disconnected patterns, clique
// branching, per-branch collection generation, singleton prefixes.
ReducedInstances reduce_to_instances(const Graph& g, const PatternFamily& fam, long long k,
                                     const ReduceConfig& cfg);

std::string bundle_to_text(const std::vector<Collection>& collections, bool provenance);
std::vector<Collection> parse_bundle(std::istream& in);

}  // namespace fhit

#endif
