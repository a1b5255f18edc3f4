#include "fhit/pattern.hpp"

#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace fhit {

namespace {

std::string adjacency_string(const Graph& g, const std::vector<int>& perm) {
    std::string s;
    int n = g.n();
    s.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            s.push_back(g.has_edge(perm[i], perm[j]) ? '1' : '0');
    return s;
}

bool iso_extend(const Graph& a, const Graph& b, std::vector<int>& map_ab,
                std::vector<bool>& used, int next) {
    if (next == a.n()) return true;
    for (int w = 0; w < b.n(); ++w) {
        if (used[w]) continue;
        if (a.degree(next) != b.degree(w)) continue;
        bool ok = true;
        for (int u = 0; u < next && ok; ++u)
            if (a.has_edge(next, u) != b.has_edge(w, map_ab[u])) ok = false;
        if (!ok) continue;
        map_ab[next] = w;
        used[w] = true;
        if (iso_extend(a, b, map_ab, used, next + 1)) return true;
        used[w] = false;
    }
    return false;
}

}  // namespace

std::string canonical_signature(const Graph& g) {
    std::ostringstream head;
    head << g.n() << ":" << g.m() << ":";
    std::vector<int> degs(g.n());
    for (int v = 0; v < g.n(); ++v) degs[v] = g.degree(v);
    std::sort(degs.begin(), degs.end());
    for (int d : degs) head << d << ",";
    head << ":";
    if (g.n() <= 8) {
        std::vector<int> perm(g.n());
        std::iota(perm.begin(), perm.end(), 0);
        std::string best;
        do {
            std::string s = adjacency_string(g, perm);
            if (best.empty() || s < best) best = s;
        } while (std::next_permutation(perm.begin(), perm.end()));
        head << best;
    }
    return head.str();
}

bool graphs_isomorphic(const Graph& a, const Graph& b) {
    if (a.n() != b.n() || a.m() != b.m()) return false;
    std::vector<int> da(a.n()), db(b.n());
    for (int v = 0; v < a.n(); ++v) da[v] = a.degree(v);
    for (int v = 0; v < b.n(); ++v) db[v] = b.degree(v);
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    std::vector<int> map_ab(a.n(), -1);
    std::vector<bool> used(b.n(), false);
    return iso_extend(a, b, map_ab, used, 0);
}

PatternFamily::PatternFamily(std::vector<Pattern> patterns) {
    for (auto& p : patterns) {
        if (p.graph.n() == 0) throw input_error("empty pattern graph: " + p.name);
        p.connected = is_connected_graph(p.graph);
        p.canon = canonical_signature(p.graph);
        bool dup = false;
        for (const auto& q : patterns_) {
            if (p.canon != q.canon) continue;
            // equal signatures decide isomorphism outright for n <= 8
            if (p.graph.n() <= 8 || graphs_isomorphic(p.graph, q.graph)) { dup = true; break; }
        }
        if (dup) continue;
        gamma_ = std::max(gamma_, p.graph.n());
        patterns_.push_back(std::move(p));
    }
    if (patterns_.empty()) throw input_error("pattern family is empty");
}

bool PatternFamily::all_connected() const {
    for (const auto& p : patterns_)
        if (!p.connected) return false;
    return true;
}

std::string PatternFamily::spec_string() const {
    std::string s;
    for (const auto& p : patterns_) {
        if (!s.empty()) s += ",";
        s += p.name;
    }
    return s;
}

bool copy_is_valid(const Graph& g, const PatternFamily& fam, const FCopy& c) {
    if (c.pattern < 0 || c.pattern >= fam.size()) return false;
    const Graph& f = fam.pattern(c.pattern).graph;
    if (static_cast<int>(c.vertex_of_pattern.size()) != f.n()) return false;
    VSet seen;
    for (int v : c.vertex_of_pattern) {
        if (v < 0 || v >= g.n()) return false;
        seen.push_back(v);
    }
    if (normalized(seen).size() != seen.size()) return false;  // injectivity
    for (auto [a, b] : f.edges())
        if (!g.has_edge(c.vertex_of_pattern[a], c.vertex_of_pattern[b])) return false;
    return true;
}

namespace {

// Backtracking over pattern vertices in a connectivity-aware order, with
// candidates filtered by degree and adjacency to already-placed vertices.
struct CopySearch {
    const Graph& g;
    const Graph& f;
    int pattern_index;
    const VSet* required = nullptr;
    const VSet* forbidden = nullptr;
    const std::vector<VSet>* blockers = nullptr;
    long long limit = -1;
    std::vector<FCopy>* out = nullptr;
    std::optional<FCopy>* first = nullptr;

    std::vector<int> order;       // pattern vertices in search order
    std::vector<int> assignment;  // pattern vertex -> graph vertex
    std::vector<bool> used;       // graph vertex taken

    CopySearch(const Graph& gg, const Graph& ff, int pi) : g(gg), f(ff), pattern_index(pi) {
        assignment.assign(f.n(), -1);
        used.assign(g.n(), false);
        // rooted order: highest degree first, then neighbors-of-placed first
        std::vector<bool> placed(f.n(), false);
        for (int step = 0; step < f.n(); ++step) {
            int best = -1;
            bool best_attached = false;
            for (int a = 0; a < f.n(); ++a) {
                if (placed[a]) continue;
                bool attached = false;
                for (int b : f.neighbors(a))
                    if (placed[b]) { attached = true; break; }
                if (best == -1 || (attached && !best_attached) ||
                    (attached == best_attached && f.degree(a) > f.degree(best)))
                    { best = a; best_attached = attached; }
            }
            order.push_back(best);
            placed[best] = true;
        }
    }

    bool done() const {
        if (limit >= 0 && out && static_cast<long long>(out->size()) >= limit) return true;
        if (first && first->has_value()) return true;
        return false;
    }

    bool accept() {
        FCopy c{pattern_index, assignment};
        if (required || blockers) {
            VSet vs = c.vertex_set();
            if (required && !is_subset(*required, vs)) return false;
            if (blockers)
                for (const auto& x : *blockers)
                    if (is_subset(x, vs)) return false;
        }
        if (out) out->push_back(c);
        if (first) *first = c;
        return true;
    }

    void search(int depth) {
        if (done()) return;
        if (depth == f.n()) { accept(); return; }
        int a = order[depth];
        // candidates must cover every required vertex; prune when the open
        // slots cannot absorb the uncovered requirement
        if (required) {
            int uncovered = 0;
            for (int r : *required) if (!used[r]) ++uncovered;
            if (uncovered > f.n() - depth) return;
        }
        for (int v = 0; v < g.n(); ++v) {
            if (used[v]) continue;
            if (forbidden && set_contains(*forbidden, v)) continue;
            if (g.degree(v) < f.degree(a)) continue;
            bool ok = true;
            for (int b : f.neighbors(a)) {
                int w = assignment[b];
                if (w != -1 && !g.has_edge(v, w)) { ok = false; break; }
            }
            if (!ok) continue;
            assignment[a] = v;
            used[v] = true;
            search(depth + 1);
            assignment[a] = -1;
            used[v] = false;
            if (done()) return;
        }
    }
};

}  // namespace

std::vector<FCopy> enumerate_copies(const Graph& g, const PatternFamily& fam, long long limit) {
    std::vector<FCopy> out;
    for (int pi = 0; pi < fam.size(); ++pi) {
        if (limit >= 0 && static_cast<long long>(out.size()) >= limit) break;
        CopySearch s(g, fam.pattern(pi).graph, pi);
        s.out = &out;
        s.limit = limit;
        s.search(0);
    }
    std::sort(out.begin(), out.end(), [](const FCopy& a, const FCopy& b) {
        if (a.pattern != b.pattern) return a.pattern < b.pattern;
        return a.vertex_of_pattern < b.vertex_of_pattern;
    });
    return out;
}

bool is_family_free(const Graph& g, const PatternFamily& fam) {
    return enumerate_copies(g, fam, 1).empty();
}

std::optional<FCopy> find_constrained_copy(const Graph& g, const PatternFamily& fam,
                                           const VSet& required, const VSet& forbidden,
                                           const std::vector<VSet>& blockers) {
    if (sets_intersect(required, forbidden))
        throw contract_error("required and forbidden vertex sets intersect");
    std::optional<FCopy> found;
    for (int pi = 0; pi < fam.size() && !found; ++pi) {
        const Graph& f = fam.pattern(pi).graph;
        if (static_cast<int>(required.size()) > f.n()) continue;
        CopySearch s(g, f, pi);
        s.required = &required;
        s.forbidden = &forbidden;
        s.blockers = &blockers;
        s.first = &found;
        s.search(0);
    }
    return found;
}

PlusConstruction plus_construction(const Graph& g, const PatternFamily& fam) {
    PlusConstruction out;
    auto edges = g.edges();
    for (int v = 0; v < g.n(); ++v) edges.emplace_back(v, g.n());
    out.graph = Graph::from_edges(g.n() + 1, edges);
    out.apex = g.n();
    std::vector<Pattern> plussed;
    for (const auto& p : fam.patterns()) {
        auto fe = p.graph.edges();
        for (int v = 0; v < p.graph.n(); ++v) fe.emplace_back(v, p.graph.n());
        Pattern q;
        q.graph = Graph::from_edges(p.graph.n() + 1, fe);
        q.name = p.name + "+";
        plussed.push_back(std::move(q));
    }
    out.family = PatternFamily(std::move(plussed));
    return out;
}

namespace {

Graph path_graph(int len) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < len; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edges(len, e);
}

Graph cycle_graph(int len) {
    if (len < 3) throw input_error("cycle preset needs length >= 3");
    auto e = path_graph(len).edges();
    e.emplace_back(0, len - 1);
    return Graph::from_edges(len, e);
}

Graph clique_graph(int size) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < size; ++i)
        for (int j = i + 1; j < size; ++j) e.emplace_back(i, j);
    return Graph::from_edges(size, e);
}

Graph star_graph(int leaves) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return Graph::from_edges(leaves + 1, e);
}

// All free trees on l nodes, generated from Prüfer sequences and deduplicated
// up to isomorphism.
std::vector<Graph> all_trees(int l) {
    if (l == 1) return {Graph(1)};
    if (l == 2) return {clique_graph(2)};
    std::vector<Graph> trees;
    std::vector<std::string> seen;
    std::vector<int> pruefer(l - 2, 0);
    while (true) {
        std::vector<int> deg(l, 1);
        for (int x : pruefer) ++deg[x];
        std::set<int> leaves;
        for (int v = 0; v < l; ++v)
            if (deg[v] == 1) leaves.insert(v);
        std::vector<std::pair<int, int>> e;
        std::vector<int> dd = deg;
        std::set<int> lv = leaves;
        for (int x : pruefer) {
            int leaf = *lv.begin();
            lv.erase(lv.begin());
            e.emplace_back(leaf, x);
            if (--dd[x] == 1) lv.insert(x);
        }
        int a = *lv.begin(), b = *std::next(lv.begin());
        e.emplace_back(a, b);
        Graph t = Graph::from_edges(l, e);
        std::string sig = canonical_signature(t);
        if (std::find(seen.begin(), seen.end(), sig) == seen.end()) {
            seen.push_back(sig);
            trees.push_back(std::move(t));
        }
        int i = l - 3;
        while (i >= 0 && pruefer[i] == l - 1) pruefer[i--] = 0;
        if (i < 0) break;
        ++pruefer[i];
    }
    return trees;
}

int parse_suffix_int(const std::string& name, std::size_t at) {
    if (at >= name.size()) throw input_error("preset needs a numeric suffix: " + name);
    for (std::size_t i = at; i < name.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(name[i])))
            throw input_error("bad preset suffix: " + name);
    return std::stoi(name.substr(at));
}

}  // namespace

Graph pattern_graph_from_preset(const std::string& raw) {
    std::string name = raw;
    std::transform(name.begin(), name.end(), name.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    if (name == "2k2") {
        return Graph::from_edges(4, {{0, 1}, {2, 3}});
    }
    if (name.rfind("star", 0) == 0) return star_graph(parse_suffix_int(name, 4) + 1);
    if (name.rfind("coc", 0) == 0)
        throw input_error("coc preset expands to several patterns; use family_from_spec");
    if (name.rfind("p", 0) == 0 && name.size() > 1) {
        int l = parse_suffix_int(name, 1);
        if (l < 1) throw input_error("p<l> needs l >= 1");
        return path_graph(l);
    }
    if (name.rfind("c", 0) == 0 && name.size() > 1) return cycle_graph(parse_suffix_int(name, 1));
    if (name.rfind("k", 0) == 0 && name.size() > 1) {
        int l = parse_suffix_int(name, 1);
        if (l < 1) throw input_error("k<l> needs l >= 1");
        return clique_graph(l);
    }
    throw input_error("unknown pattern preset: " + raw);
}

PatternFamily family_from_spec(const std::string& spec) {
    std::vector<Pattern> pats;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        if (item[0] == '@') {
            auto parsed = parse_graph_file(item.substr(1));
            Pattern p;
            p.graph = parsed.graph;
            p.name = item.substr(1);
            pats.push_back(std::move(p));
            continue;
        }
        std::string lower = item;
        std::transform(lower.begin(), lower.end(), lower.begin(),
                       [](unsigned char c) { return std::tolower(c); });
        if (lower.rfind("coc", 0) == 0) {
            int l = parse_suffix_int(lower, 3);
            if (l < 1) throw input_error("coc<l> needs l >= 1");
            int idx = 0;
            for (auto& t : all_trees(l)) {
                Pattern p;
                p.graph = std::move(t);
                p.name = lower + "/" + std::to_string(idx++);
                pats.push_back(std::move(p));
            }
            continue;
        }
        Pattern p;
        p.graph = pattern_graph_from_preset(item);
        p.name = lower;
        pats.push_back(std::move(p));
    }
    return PatternFamily(std::move(pats));
}

}  // namespace fhit
