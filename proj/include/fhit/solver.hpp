#ifndef FHIT_SOLVER_HPP
#define FHIT_SOLVER_HPP

#include <optional>
#include <string>
#include <vector>

#include "fhit/branching.hpp"
#include "fhit/graph.hpp"
#include "fhit/hitting_dp.hpp"
#include "fhit/pattern.hpp"

namespace fhit {

struct WeightedInstance {
    Graph graph;
    std::vector<double> weights;  // per vertex, finite and >= 0
    long long k = 0;
    PatternFamily family;

    bool unit_weights() const;
    static WeightedInstance make(Graph g, std::vector<double> w, long long k, PatternFamily fam);
};

struct Solution {
    VSet vertices;
    double weight = 0;
    std::string certificate;  // "collection <i>" or "oracle-exhaustive"
    bool verified = false;    // family-freeness of G - S rechecked
};

struct SolveConfig {
    std::optional<long long> delta;
    std::optional<long long> tau;
    std::optional<long long> theta_yes;
    std::optional<long long> theta_no;
    bool kernel_enabled = true;
    TdMode td_mode = TdMode::Heuristic;
};

struct RunReport {
    bool kernel_applied = false;
    bool kernel_truncated = false;
    int kernel_size = 0;
    long long kernel_rounds = 0;
    long long collections = 0;          // t
    int max_gaifman_width = -1;         // certified decomposition widths
    double mean_gaifman_width = 0;
    ReduceReport reduce;
    long long delta = 0, tau = 0;
    double ms_kernel = 0, ms_reduce = 0, ms_dp = 0, ms_total = 0;
    std::string to_text() const;
};

struct SolveResult {
    std::optional<Solution> solution;
    RunReport report;
};

// Kernel (uniform weights only) -> reduce_to_instances -> per-collection
// minimum-weight hitting set -> global minimum; the winner is re-verified
// against the original graph.
SolveResult solve(const WeightedInstance& inst, const SolveConfig& cfg = {});

// Exact branch-and-bound on uncovered copies, with its own naive pattern
// enumeration; the independent ground truth.
std::optional<Solution> oracle_solve(const WeightedInstance& inst);

// Subset-enumeration variant (n <= 20; practical n <= 16), used to cross-check
// the oracle itself.
std::optional<Solution> oracle_solve_enum(const WeightedInstance& inst);

// Naive all-injective-maps enumeration of copy vertex sets; shared by the
// oracle and the verification suites, deliberately separate from
// pattern::enumerate_copies.
std::vector<VSet> naive_copy_vertex_sets(const Graph& g, const PatternFamily& fam);

}  // namespace fhit

#endif
