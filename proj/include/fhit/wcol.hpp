#ifndef FHIT_WCOL_HPP
#define FHIT_WCOL_HPP

#include <vector>

#include "fhit/graph.hpp"

namespace fhit {

// Weak r-reachability sets under an ordering: WR_r(v) holds every u that is
// the sigma-largest vertex on some path from v of length at most r.
struct WeakReachIndex {
    int radius = 0;
    VertexOrdering ordering;
    std::vector<VSet> reach;  // per vertex, sorted
    int wcol = 0;             // max |WR_r(v)|

    const VSet& of(int v) const { return reach[v]; }
};

WeakReachIndex weak_reach_sets(const Graph& g, const VertexOrdering& sigma, int r);

int wcol_under(const Graph& g, const VertexOrdering& sigma, int r);

enum class OrderingMode { Exact, Greedy };

// Exact mode minimizes wcol_r over all orderings (n <= 10); greedy mode
// returns the reversed smallest-last ordering.
VertexOrdering choose_ordering(const Graph& g, int r, OrderingMode mode);

// gamma-augmentation: adds an edge (u,v) whenever u is weakly r-reachable
// from v under sigma.
Graph augment(const Graph& g, const VertexOrdering& sigma, int r);

}  // namespace fhit

#endif
