#include "fhit/graph.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace fhit {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw input_error("edge endpoint out of range: (" + std::to_string(u) + "," +
                              std::to_string(v) + ") with n=" + std::to_string(n));
        if (u == v) throw input_error("loop at vertex " + std::to_string(u));
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& nb : g.adj_) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
        g.m_ += static_cast<long long>(nb.size());
    }
    g.m_ /= 2;
    return g;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> es;
    es.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) es.emplace_back(u, v);
    return es;
}

VertexOrdering::VertexOrdering(std::vector<int> p) : perm(std::move(p)) {
    pos.assign(perm.size(), -1);
    for (int i = 0; i < static_cast<int>(perm.size()); ++i) {
        int v = perm[i];
        if (v < 0 || v >= static_cast<int>(perm.size()) || pos[v] != -1)
            throw contract_error("ordering is not a permutation");
        pos[v] = i;
    }
}

VertexOrdering VertexOrdering::reversed() const {
    std::vector<int> p(perm.rbegin(), perm.rend());
    return VertexOrdering(std::move(p));
}

InducedSubgraph induced_subgraph(const Graph& g, const VSet& vs) {
    InducedSubgraph out;
    out.new_of_old.assign(g.n(), -1);
    out.old_of_new = vs;
    for (int i = 0; i < static_cast<int>(vs.size()); ++i) {
        int v = vs[i];
        if (v < 0 || v >= g.n()) throw input_error("vertex id out of range: " + std::to_string(v));
        out.new_of_old[v] = i;
    }
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < static_cast<int>(vs.size()); ++i)
        for (int w : g.neighbors(vs[i])) {
            int j = out.new_of_old[w];
            if (j > i) edges.emplace_back(i, j);
        }
    out.graph = Graph::from_edges(static_cast<int>(vs.size()), edges);
    return out;
}

VertexOrdering smallest_last_ordering(const Graph& g) {
    int n = g.n();
    std::vector<int> deg(n);
    std::vector<bool> removed(n, false);
    std::set<std::pair<int, int>> queue;  // (degree, id); smallest id wins ties
    for (int v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        queue.emplace(deg[v], v);
    }
    std::vector<int> removed_order;
    removed_order.reserve(n);
    while (!queue.empty()) {
        auto [d, v] = *queue.begin();
        queue.erase(queue.begin());
        removed[v] = true;
        removed_order.push_back(v);
        for (int w : g.neighbors(v))
            if (!removed[w]) {
                queue.erase({deg[w], w});
                queue.emplace(--deg[w], w);
            }
    }
    // first removed vertex goes last in the ordering
    std::vector<int> perm(removed_order.rbegin(), removed_order.rend());
    return VertexOrdering(std::move(perm));
}

std::vector<int> back_degrees(const Graph& g, const VertexOrdering& ord) {
    std::vector<int> bd(g.n(), 0);
    for (int i = 0; i < g.n(); ++i) {
        int v = ord.perm[i];
        int c = 0;
        for (int w : g.neighbors(v))
            if (ord.pos[w] <= i) ++c;
        bd[i] = c;
    }
    return bd;
}

int degeneracy(const Graph& g) {
    if (g.n() == 0) return 0;
    auto ord = smallest_last_ordering(g);
    auto bd = back_degrees(g, ord);
    return *std::max_element(bd.begin(), bd.end());
}

std::vector<VSet> connected_components(const Graph& g) {
    std::vector<VSet> comps;
    std::vector<bool> seen(g.n(), false);
    for (int s = 0; s < g.n(); ++s) {
        if (seen[s]) continue;
        VSet comp;
        std::vector<int> stack{s};
        seen[s] = true;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w : g.neighbors(v))
                if (!seen[w]) { seen[w] = true; stack.push_back(w); }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool is_connected_graph(const Graph& g) {
    return g.n() <= 1 || connected_components(g).size() == 1;
}

namespace {

struct CliqueSearch {
    const Graph& g;
    int cap;
    VSet best;
    bool saturated = false;

    explicit CliqueSearch(const Graph& gr, int c) : g(gr), cap(c) {}

    void expand(VSet& clique, std::vector<int>& cands) {
        if (saturated) return;
        if (static_cast<int>(clique.size()) >= cap) {
            best = clique;
            saturated = true;
            return;
        }
        if (static_cast<int>(clique.size()) > static_cast<int>(best.size()))
            best = clique;
        while (!cands.empty()) {
            if (saturated) return;
            if (static_cast<int>(clique.size() + cands.size()) <= static_cast<int>(best.size()) &&
                static_cast<int>(clique.size() + cands.size()) < cap)
                return;
            int v = cands.front();
            cands.erase(cands.begin());
            std::vector<int> next;
            for (int w : cands)
                if (g.has_edge(v, w)) next.push_back(w);
            clique.push_back(v);
            expand(clique, next);
            clique.pop_back();
        }
    }
};

}  // namespace

CliqueBound clique_number_bounded(const Graph& g, int cap) {
    if (cap < 1) throw contract_error("clique cap must be >= 1");
    CliqueSearch search(g, cap);
    auto ord = smallest_last_ordering(g);
    // reverse degeneracy order: each vertex roots a search over later neighbors
    VertexOrdering rev = ord.reversed();
    for (int i = 0; i < g.n() && !search.saturated; ++i) {
        int v = rev.perm[i];
        std::vector<int> cands;
        for (int w : g.neighbors(v))
            if (rev.pos[w] > i) cands.push_back(w);
        std::sort(cands.begin(), cands.end(),
                  [&](int a, int b) { return rev.pos[a] < rev.pos[b]; });
        VSet clique{v};
        search.expand(clique, cands);
    }
    CliqueBound out;
    if (g.n() == 0) { out.omega = 0; return out; }
    if (search.saturated) {
        out.omega = cap;
        out.saturated = true;
        out.witness = normalized(search.best);
    } else {
        out.omega = std::max(1, static_cast<int>(search.best.size()));
    }
    return out;
}

int clique_number_exact(const Graph& g) {
    return clique_number_bounded(g, g.n() + 1).omega;
}

namespace {

bool is_integer_token(const std::string& t) {
    if (t.empty()) return false;
    for (char c : t)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

ParsedGraph parse_graph(std::istream& in) {
    ParsedGraph out;
    std::vector<std::pair<int, int>> edges;
    std::map<std::string, int> id_of;
    long long declared_n = -1;
    std::string line;
    int lineno = 0;
    bool header_allowed = true;

    auto intern = [&](const std::string& tok) -> int {
        if (declared_n >= 0) {
            if (!is_integer_token(tok))
                throw input_error("line " + std::to_string(lineno) +
                                  ": non-integer vertex id with 'p edge' header: " + tok);
            long long v = std::stoll(tok);
            if (v < 0 || v >= declared_n)
                throw input_error("line " + std::to_string(lineno) + ": vertex id " + tok +
                                  " out of range [0," + std::to_string(declared_n - 1) + "]");
            return static_cast<int>(v);
        }
        auto it = id_of.find(tok);
        if (it != id_of.end()) return it->second;
        int id = static_cast<int>(out.names.size());
        id_of.emplace(tok, id);
        out.names.push_back(tok);
        return id;
    };

    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string a, b;
        if (!(ls >> a)) continue;
        if (a == "p" && header_allowed) {
            std::string kind;
            long long n = -1, m = -1;
            if (!(ls >> kind >> n) || kind != "edge" || n < 0)
                throw input_error("line " + std::to_string(lineno) + ": malformed 'p edge n m' header");
            ls >> m;  // edge count is informational
            declared_n = n;
            out.names.resize(static_cast<std::size_t>(n));
            for (long long v = 0; v < n; ++v) out.names[v] = std::to_string(v);
            header_allowed = false;
            continue;
        }
        header_allowed = false;
        if (!(ls >> b))
            throw input_error("line " + std::to_string(lineno) + ": expected 'u v' edge pair");
        std::string extra;
        if (ls >> extra)
            throw input_error("line " + std::to_string(lineno) + ": trailing token '" + extra + "'");
        int u = intern(a), v = intern(b);
        if (u == v) throw input_error("line " + std::to_string(lineno) + ": loop rejected at '" + a + "'");
        edges.emplace_back(u, v);
    }
    int n = declared_n >= 0 ? static_cast<int>(declared_n) : static_cast<int>(out.names.size());
    // count parallel edges before from_edges dedups them
    std::vector<std::pair<int, int>> canon;
    canon.reserve(edges.size());
    for (auto [u, v] : edges) canon.emplace_back(std::min(u, v), std::max(u, v));
    std::sort(canon.begin(), canon.end());
    out.duplicate_edges = static_cast<int>(canon.size() -
        static_cast<std::size_t>(std::distance(canon.begin(), std::unique(canon.begin(), canon.end()))));
    out.graph = Graph::from_edges(n, edges);
    return out;
}

ParsedGraph parse_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open graph file: " + path);
    return parse_graph(in);
}

std::string graph_to_edge_list(const Graph& g) {
    std::ostringstream os;
    os << "p edge " << g.n() << " " << g.m() << "\n";
    for (auto [u, v] : g.edges()) os << u << " " << v << "\n";
    return os.str();
}

}  // namespace fhit
