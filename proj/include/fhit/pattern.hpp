#ifndef FHIT_PATTERN_HPP
#define FHIT_PATTERN_HPP

#include <optional>
#include <string>
#include <vector>

#include "fhit/graph.hpp"

namespace fhit {

struct Pattern {
    Graph graph;
    std::string name;
    bool connected = false;
    std::string canon;  // canonical labeling signature, used for dedup
};

// Finite family of non-empty pattern graphs, deduplicated up to isomorphism.
class PatternFamily {
public:
    PatternFamily() = default;
    explicit PatternFamily(std::vector<Pattern> patterns);

    int size() const { return static_cast<int>(patterns_.size()); }
    int gamma() const { return gamma_; }
    const Pattern& pattern(int i) const { return patterns_[i]; }
    const std::vector<Pattern>& patterns() const { return patterns_; }
    bool all_connected() const;
    std::string spec_string() const;

private:
    std::vector<Pattern> patterns_;
    int gamma_ = 0;
};

// An F-copy (H, pi): vertex_of_pattern[a] is the graph vertex mapped onto
// pattern vertex a (the map pi^{-1}). Subgraph semantics: pattern edges must
// be present in the graph, extra edges are allowed.
struct FCopy {
    int pattern = 0;
    std::vector<int> vertex_of_pattern;

    VSet vertex_set() const { return normalized(vertex_of_pattern); }
};

bool copy_is_valid(const Graph& g, const PatternFamily& fam, const FCopy& c);

// All F-copies of every pattern: injective maps preserving pattern edges,
// in deterministic order (pattern index, then the map lexicographically).
std::vector<FCopy> enumerate_copies(const Graph& g, const PatternFamily& fam,
                                    long long limit = -1);

bool is_family_free(const Graph& g, const PatternFamily& fam);

// First F-copy with required inside V(H), V(H) disjoint from forbidden, and
// no blocker set fully inside V(H); nullopt when none exists.
std::optional<FCopy> find_constrained_copy(const Graph& g, const PatternFamily& fam,
                                           const VSet& required, const VSet& forbidden,
                                           const std::vector<VSet>& blockers);

struct PlusConstruction {
    Graph graph;          // G+ : apex adjacent to all of V(G)
    PatternFamily family; // F+ : per-pattern apex adjacent to all of V(F)
    int apex = -1;        // the apex id in G+
};

PlusConstruction plus_construction(const Graph& g, const PatternFamily& fam);

// Preset names: k2, p<l>, c<l>, k<l>, star<l> (K_{1,l+1}), coc<l> (all trees
// on l nodes), 2k2. A family spec is a comma-separated list of presets and/or
// @file references to edge-list pattern files.
PatternFamily family_from_spec(const std::string& spec);
Graph pattern_graph_from_preset(const std::string& name);

std::string canonical_signature(const Graph& g);
bool graphs_isomorphic(const Graph& a, const Graph& b);

}  // namespace fhit

#endif
