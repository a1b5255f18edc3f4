#ifndef FHIT_HEAVY_CORE_HPP
#define FHIT_HEAVY_CORE_HPP

#include <optional>
#include <vector>

#include "fhit/graph.hpp"
#include "fhit/pattern.hpp"

namespace fhit {

// (X, F, f): X a vertex set, f an injective map X -> V(F). f is stored
// aligned with the sorted X: image[i] is the pattern vertex of vertices[i].
struct StandardTriple {
    VSet vertices;           // X, sorted
    int pattern = 0;         // F
    std::vector<int> image;  // f, aligned with vertices

    bool operator==(const StandardTriple&) const = default;
    bool operator<(const StandardTriple& o) const {
        if (vertices.size() != o.vertices.size()) return vertices.size() < o.vertices.size();
        if (vertices != o.vertices) return vertices < o.vertices;
        if (pattern != o.pattern) return pattern < o.pattern;
        return image < o.image;
    }
    int image_of(int v) const;  // -1 when v not in X
};

// strict refinement: X proper subset of Y and f = g restricted to X
bool triple_precedes(const StandardTriple& a, const StandardTriple& b);

// restriction of a copy's isomorphism to X (the full triple when X = V(H))
StandardTriple triple_of_copy(const FCopy& c, int keep_mask_size = -1);
StandardTriple restrict_copy_to(const FCopy& c, const VSet& x);

struct HeavyCoreWitness {
    long long delta = 0;          // gamma^{|X|} * delta
    std::vector<FCopy> copies;    // delta of them; identical copies allowed
};

bool witness_is_valid(const Graph& g, const PatternFamily& fam, const StandardTriple& t,
                      const HeavyCoreWitness& w);

struct CoreStatus {
    bool u_minimal = false;
    bool u_redundant = false;
    bool u_active = false;  // = u_minimal && !u_redundant
};

// Frozen tables for one (graph, family, delta): all copies, all heavy cores.
struct HeavyCoreTable {
    const Graph* graph = nullptr;
    long long delta = 0;
    int gamma = 0;
    int family_size = 0;
    std::vector<FCopy> copies;
    std::vector<std::vector<VSet>> sets_by_pattern;  // distinct V(H) per pattern
    std::vector<StandardTriple> cores;               // sorted, deduplicated
    std::vector<std::vector<int>> core_copies;       // per core, indices of matching copies
    // predecessors[i]: indices j with cores[j] strictly preceding cores[i]
    std::vector<std::vector<int>> predecessors;
    long long packing_cap_hits = 0;  // exact-packing fallback gave up (undercount possible)
};

long long witness_size_required(int gamma, std::size_t core_size, long long delta);

// Greedy disjoint-petal packing over the copies that contain X and agree with
// f, with an exact search fallback when greedy comes up short.
std::optional<HeavyCoreWitness> witness_search(const Graph& g, const PatternFamily& fam,
                                               const StandardTriple& t, long long delta,
                                               const std::vector<FCopy>& copies);

HeavyCoreTable enumerate_heavy_cores(const Graph& g, const PatternFamily& fam, long long delta);

CoreStatus classify(const HeavyCoreTable& table, int core_index, const VSet& u);

// Petal-set guesses of the branching no-decision: unions over each connected
// component of F - f(X) of at most gamma witness projections.
std::vector<VSet> config_sets(const PatternFamily& fam, const StandardTriple& t,
                              const HeavyCoreWitness& w);

}  // namespace fhit

#endif
