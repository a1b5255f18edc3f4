#ifndef FHIT_GRAPH_HPP
#define FHIT_GRAPH_HPP

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "fhit/util.hpp"

namespace fhit {

// Simple undirected graph on dense vertex ids 0..n-1. Immutable after
// construction; neighbor lists are sorted and duplicate-free.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), adj_(n) {}

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int n() const { return n_; }
    long long m() const { return m_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool has_edge(int u, int v) const {
        if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
        return set_contains(adj_[u], v);
    }
    std::vector<std::pair<int, int>> edges() const;

private:
    int n_ = 0;
    long long m_ = 0;
    std::vector<std::vector<int>> adj_;
};

// Permutation of 0..n-1 together with its inverse. perm[i] is the i-th vertex,
// pos[v] its position.
struct VertexOrdering {
    std::vector<int> perm;
    std::vector<int> pos;

    VertexOrdering() = default;
    explicit VertexOrdering(std::vector<int> p);

    int size() const { return static_cast<int>(perm.size()); }
    bool less(int u, int v) const { return pos[u] < pos[v]; }
    VertexOrdering reversed() const;
};

struct InducedSubgraph {
    Graph graph;
    std::vector<int> old_of_new;  // new id -> original id
    std::vector<int> new_of_old;  // original id -> new id, -1 outside
};

InducedSubgraph induced_subgraph(const Graph& g, const VSet& vs);

// Smallest-last ordering (v_1..v_n): v_i has minimum degree in g[{v_1..v_i}].
// Built by repeated min-degree removal, ties broken by smallest id.
VertexOrdering smallest_last_ordering(const Graph& g);

// Back-degrees of a smallest-last ordering; back_degrees[i] is the degree of
// perm[i] inside the prefix perm[0..i].
std::vector<int> back_degrees(const Graph& g, const VertexOrdering& ord);

int degeneracy(const Graph& g);

// Connected components as vertex sets, ordered by smallest member.
std::vector<VSet> connected_components(const Graph& g);

bool is_connected_graph(const Graph& g);

struct CliqueBound {
    int omega = 0;          // exact when !saturated
    bool saturated = false; // true when omega(g) >= cap
    VSet witness;           // clique of size cap when saturated
};

// Branch and bound over degeneracy-ordered candidates; stops as soon as a
// clique of size cap is found.
CliqueBound clique_number_bounded(const Graph& g, int cap);

// Exact maximum clique for small graphs (test oracle scale).
int clique_number_exact(const Graph& g);

struct ParsedGraph {
    Graph graph;
    std::vector<std::string> names;  // dense id -> external name
    int duplicate_edges = 0;         // parallel edges dropped with a warning counter
};

// Edge-list text format: one "u v" pair per line, '#' comments, optional
// DIMACS-like header "p edge n m" (then ids must be integers in [0, n-1]).
// Loops are rejected.
ParsedGraph parse_graph(std::istream& in);
ParsedGraph parse_graph_file(const std::string& path);
std::string graph_to_edge_list(const Graph& g);

}  // namespace fhit

#endif
