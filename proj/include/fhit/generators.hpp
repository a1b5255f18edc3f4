#ifndef FHIT_GENERATORS_HPP
#define FHIT_GENERATORS_HPP

#include <string>
#include <vector>

#include "fhit/graph.hpp"
#include "fhit/util.hpp"

namespace fhit {

// Random instance generators for the verification and benchmark harnesses:
// Erdos-Renyi at several densities, random subgraphs of planar
// triangulations, grids, and stars with noise edges.
Graph gen_erdos_renyi(int n, double p, Rng& rng);
Graph gen_planarish(int n, double keep, Rng& rng);  // Apollonian growth, edge subsample
Graph gen_grid(int rows, int cols);
Graph gen_star_noise(int n, int extra_edges, Rng& rng);

struct GeneratedGraph {
    Graph graph;
    std::string klass;  // generator label for CSV output
};

// round-robin over the generator classes, sized within [3, max_n]
GeneratedGraph gen_mixed(int index, int max_n, Rng& rng);

std::vector<double> gen_weights(int n, bool unit, Rng& rng);  // integers 1..10 when not unit

}  // namespace fhit

#endif
