#ifndef FHIT_KERNEL_HPP
#define FHIT_KERNEL_HPP

#include <string>
#include <vector>

#include "fhit/graph.hpp"
#include "fhit/pattern.hpp"

namespace fhit {

struct KernelResult {
    // degeneracy prefix graph with its map back to the input graph
    Graph g0;
    std::vector<int> g0_vertices;  // g0 id -> input id
    bool truncated = false;        // g0 != g

    VSet kept;                     // K, in g0 ids
    std::vector<VSet> cores;       // collected sunflower cores (g0 ids)
    std::vector<VSet> rounds;      // the set V chosen in each while-round (g0 ids)

    // kernel graph G' = G0[K] and its map back to the input graph
    Graph gprime;
    std::vector<int> gprime_vertices;

    long long size_bound = 0;      // gamma! * gamma^{gamma+1} * (k+1)^gamma
    long long round_bound = 0;     // gamma! * gamma^gamma * (k+1)^gamma
};

// Degree threshold for the prefix truncation. The class constants of the
// paper's bound are unobservable, so the default never truncates graphs whose
// degeneracy already certifies sparsity.
long long default_degree_threshold(const Graph& g, const PatternFamily& fam, long long k);

// Smallest-last prefix truncation followed by the sunflower-core while loop.
// Any hitting set of the result of size <= k is a hitting set of the input.
// Truncation is applied only when a clique witness certifies that the prefix
// is infeasible for budget k; otherwise the prefix is the whole graph.
KernelResult kernelize(const Graph& g, const PatternFamily& fam, long long k,
                       long long degree_threshold);

std::string kernel_trace(const KernelResult& kr);

}  // namespace fhit

#endif
