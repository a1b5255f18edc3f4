#include "fhit/wcol.hpp"

#include <numeric>
#include <queue>

namespace fhit {

WeakReachIndex weak_reach_sets(const Graph& g, const VertexOrdering& sigma, int r) {
    if (r < 0) throw contract_error("weak reachability radius must be >= 0");
    if (sigma.size() != g.n()) throw contract_error("ordering size mismatch");
    WeakReachIndex idx;
    idx.radius = r;
    idx.ordering = sigma;
    idx.reach.assign(g.n(), {});
    // per-target sweep: from target u, BFS through vertices sigma-smaller
    // than u; every vertex within distance r gains u in its WR set
    std::vector<int> dist(g.n(), -1);
    for (int u = 0; u < g.n(); ++u) {
        std::fill(dist.begin(), dist.end(), -1);
        std::queue<int> q;
        dist[u] = 0;
        q.push(u);
        idx.reach[u].push_back(u);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            if (dist[v] == r) continue;
            for (int w : g.neighbors(v)) {
                if (dist[w] != -1) continue;
                if (!sigma.less(w, u)) continue;  // u must stay the largest on the path
                dist[w] = dist[v] + 1;
                idx.reach[w].push_back(u);
                q.push(w);
            }
        }
    }
    for (auto& s : idx.reach) {
        std::sort(s.begin(), s.end());
        idx.wcol = std::max(idx.wcol, static_cast<int>(s.size()));
    }
    return idx;
}

int wcol_under(const Graph& g, const VertexOrdering& sigma, int r) {
    return weak_reach_sets(g, sigma, r).wcol;
}

VertexOrdering choose_ordering(const Graph& g, int r, OrderingMode mode) {
    if (mode == OrderingMode::Greedy) return smallest_last_ordering(g).reversed();
    if (g.n() > 10)
        throw capability_error("exact ordering search is limited to n <= 10");
    std::vector<int> perm(g.n());
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> best_perm = perm;
    int best = g.n() + 1;
    do {
        VertexOrdering sigma{std::vector<int>(perm)};
        int w = wcol_under(g, sigma, r);
        if (w < best) {
            best = w;
            best_perm = perm;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return VertexOrdering(std::move(best_perm));
}

Graph augment(const Graph& g, const VertexOrdering& sigma, int r) {
    auto idx = weak_reach_sets(g, sigma, r);
    auto edges = g.edges();
    for (int v = 0; v < g.n(); ++v)
        for (int u : idx.of(v))
            if (u != v) edges.emplace_back(std::min(u, v), std::max(u, v));
    return Graph::from_edges(g.n(), edges);
}

}  // namespace fhit
