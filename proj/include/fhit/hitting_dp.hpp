#ifndef FHIT_HITTING_DP_HPP
#define FHIT_HITTING_DP_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fhit/graph.hpp"

namespace fhit {

// Graph on the union of a set collection; each set induces a clique.
struct GaifmanGraph {
    Graph graph;                 // dense local ids
    std::vector<int> vertices;   // local id -> original id (sorted)
    std::vector<int> local_of;   // original id -> local id (indexed up to max id)
    // one covering set index per edge (u < v, local ids)
    std::vector<std::pair<std::pair<int, int>, int>> edge_cover;

    int local(int orig) const {
        return (orig >= 0 && orig < static_cast<int>(local_of.size())) ? local_of[orig] : -1;
    }
};

GaifmanGraph gaifman_graph(const std::vector<VSet>& collection);

struct TreeDecomposition {
    std::vector<int> parent;     // -1 at the root
    std::vector<VSet> bags;

    int width() const;
    bool valid_for(const Graph& g, std::string* why = nullptr) const;
};

enum class TdMode { Heuristic, Exact };

// Heuristic: the better of min-fill and min-degree elimination orderings.
// Exact (n <= 18): exhaustive search over elimination orders.
TreeDecomposition tree_decomposition(const Graph& g, TdMode mode);

int treewidth_exact(const Graph& g);  // n <= 18

// Union of a maximal pairwise-disjoint sub-collection, scanned in input
// order. Hits the collection; size <= gamma * OPT.
VSet greedy_hit_approx(const std::vector<VSet>& collection);

struct HittingInstance {
    std::vector<VSet> collection;
    std::vector<std::pair<int, double>> weights;  // (vertex, weight); absent -> 1
    long long k = 0;
    bool has_empty_set = false;  // flagged at construction; instance infeasible

    static HittingInstance make(std::vector<VSet> sets,
                                std::vector<std::pair<int, double>> w, long long k);
    double weight_of(int v) const;
};

struct HittingSolution {
    VSet vertices;
    double weight = 0;
};

// Minimum-weight subset of the universe of size <= k hitting every set,
// solved by the sentinel construction: auxiliary graph H with one
// infinite-weight sentinel per set, tree decomposition extended by one leaf
// bag per sentinel, then a weighted bounded-cardinality subset dominating set
// DP over the decomposition.
std::optional<HittingSolution> min_weight_hitting_set(const HittingInstance& inst,
                                                      const TreeDecomposition& td_of_gaifman);

// Internal building block, exposed for tests: H, unselectable vertices and
// domination targets are explicit.
std::optional<HittingSolution> subset_dominating_set(const Graph& h,
                                                     const std::vector<double>& weight,
                                                     const std::vector<bool>& selectable,
                                                     const std::vector<bool>& target,
                                                     long long k,
                                                     const TreeDecomposition& td);

// Instance file format: "k <int>" line, "w <vertex> <weight>" lines,
// "set <v1> <v2> ..." lines; '#' comments. Round-trippable.
HittingInstance parse_instance(std::istream& in);
HittingInstance parse_instance_file(const std::string& path);
std::string instance_to_text(const HittingInstance& inst);

}  // namespace fhit

#endif
