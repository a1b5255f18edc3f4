#include "fhit/hitting_dp.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace fhit {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

GaifmanGraph gaifman_graph(const std::vector<VSet>& collection) {
    GaifmanGraph gg;
    VSet all;
    for (const auto& s : collection) all = set_union(all, s);
    gg.vertices = all;
    int max_id = all.empty() ? -1 : all.back();
    gg.local_of.assign(max_id + 1, -1);
    for (int i = 0; i < static_cast<int>(all.size()); ++i) gg.local_of[all[i]] = i;
    std::map<std::pair<int, int>, int> cover;
    for (int si = 0; si < static_cast<int>(collection.size()); ++si) {
        const auto& s = collection[si];
        for (std::size_t a = 0; a < s.size(); ++a)
            for (std::size_t b = a + 1; b < s.size(); ++b) {
                int u = gg.local_of[s[a]], v = gg.local_of[s[b]];
                cover.emplace(std::minmax(u, v), si);
            }
    }
    std::vector<std::pair<int, int>> edges;
    for (auto& [e, si] : cover) {
        edges.push_back(e);
        gg.edge_cover.emplace_back(e, si);
    }
    gg.graph = Graph::from_edges(static_cast<int>(all.size()), edges);
    return gg;
}

int TreeDecomposition::width() const {
    int w = -1;
    for (const auto& b : bags) w = std::max(w, static_cast<int>(b.size()) - 1);
    return w;
}

bool TreeDecomposition::valid_for(const Graph& g, std::string* why) const {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (bags.size() != parent.size()) return fail("bag/parent size mismatch");
    if (bags.empty()) return fail("no nodes");
    int roots = 0;
    for (std::size_t t = 0; t < parent.size(); ++t) {
        if (parent[t] == -1) ++roots;
        else if (parent[t] < 0 || parent[t] >= static_cast<int>(bags.size()))
            return fail("bad parent pointer");
        for (int v : bags[t])
            if (v < 0 || v >= g.n()) return fail("bag vertex out of range");
    }
    if (roots != 1) return fail("not a single tree");
    // (i) bags cover all vertices
    std::vector<bool> covered(g.n(), false);
    for (const auto& b : bags)
        for (int v : b) covered[v] = true;
    for (int v = 0; v < g.n(); ++v)
        if (!covered[v]) return fail("vertex not covered: " + std::to_string(v));
    // (ii) every edge inside some bag
    for (auto [u, v] : g.edges()) {
        bool ok = false;
        for (const auto& b : bags)
            if (set_contains(b, u) && set_contains(b, v)) { ok = true; break; }
        if (!ok) return fail("edge not covered");
    }
    // (iii) nodes holding each vertex form a subtree
    std::vector<std::vector<int>> children(bags.size());
    for (std::size_t t = 0; t < bags.size(); ++t)
        if (parent[t] != -1) children[parent[t]].push_back(static_cast<int>(t));
    for (int v = 0; v < g.n(); ++v) {
        int count = 0, start = -1;
        for (std::size_t t = 0; t < bags.size(); ++t)
            if (set_contains(bags[t], v)) { ++count; start = static_cast<int>(t); }
        if (count == 0) continue;
        std::vector<int> stack{start};
        std::set<int> seen{start};
        int reached = 0;
        while (!stack.empty()) {
            int t = stack.back();
            stack.pop_back();
            ++reached;
            std::vector<int> nbrs = children[t];
            if (parent[t] != -1) nbrs.push_back(parent[t]);
            for (int s : nbrs)
                if (set_contains(bags[s], v) && !seen.count(s)) {
                    seen.insert(s);
                    stack.push_back(s);
                }
        }
        if (reached != count) return fail("trace of vertex not connected: " + std::to_string(v));
    }
    return true;
}

namespace {

// Eliminates vertices in the given order, forming cliques on current
// neighborhoods; bag of v = {v} + neighbors at elimination time.
TreeDecomposition decomposition_from_order(const Graph& g, const std::vector<int>& order) {
    int n = g.n();
    TreeDecomposition td;
    if (n == 0) {
        td.bags = {VSet{}};
        td.parent = {-1};
        return td;
    }
    std::vector<std::set<int>> adj(n);
    for (auto [u, v] : g.edges()) {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    std::vector<int> when(n);
    for (int i = 0; i < n; ++i) when[order[i]] = i;
    td.bags.assign(n, {});
    td.parent.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        int v = order[i];
        VSet nbrs(adj[v].begin(), adj[v].end());
        td.bags[i] = set_union(nbrs, VSet{v});
        int first_later = -1;
        for (int u : nbrs)
            if (first_later == -1 || when[u] < when[first_later]) first_later = u;
        td.parent[i] = (first_later == -1) ? (i + 1 < n ? i + 1 : -1) : when[first_later];
        for (int a : nbrs) adj[a].erase(v);
        for (int a : nbrs)
            for (int b : nbrs)
                if (a < b) {
                    adj[a].insert(b);
                    adj[b].insert(a);
                }
    }
    return td;
}

std::vector<int> elimination_order(const Graph& g, bool min_fill) {
    int n = g.n();
    std::vector<std::set<int>> adj(n);
    for (auto [u, v] : g.edges()) {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    std::vector<bool> gone(n, false);
    std::vector<int> order;
    for (int step = 0; step < n; ++step) {
        int best = -1;
        long long best_key1 = 0, best_key2 = 0;
        for (int v = 0; v < n; ++v) {
            if (gone[v]) continue;
            long long deg = static_cast<long long>(adj[v].size());
            long long fill = 0;
            if (min_fill) {
                for (auto a = adj[v].begin(); a != adj[v].end(); ++a)
                    for (auto b = std::next(a); b != adj[v].end(); ++b)
                        if (!adj[*a].count(*b)) ++fill;
            }
            long long k1 = min_fill ? fill : deg;
            long long k2 = min_fill ? deg : 0;
            if (best == -1 || k1 < best_key1 || (k1 == best_key1 && k2 < best_key2)) {
                best = v;
                best_key1 = k1;
                best_key2 = k2;
            }
        }
        order.push_back(best);
        gone[best] = true;
        std::vector<int> nbrs(adj[best].begin(), adj[best].end());
        for (int a : nbrs) adj[a].erase(best);
        for (int a : nbrs)
            for (int b : nbrs)
                if (a < b) {
                    adj[a].insert(b);
                    adj[b].insert(a);
                }
    }
    return order;
}

// Degree of v once the vertex set `through` has been eliminated: vertices
// outside through+{v} reachable from v via through.
int eliminated_degree(const Graph& g, unsigned through, int v) {
    unsigned seen = 1u << v;
    std::vector<int> stack{v};
    int count = 0;
    while (!stack.empty()) {
        int a = stack.back();
        stack.pop_back();
        for (int b : g.neighbors(a)) {
            if (seen & (1u << b)) continue;
            seen |= 1u << b;
            if (through & (1u << b)) stack.push_back(b);
            else ++count;
        }
    }
    return count;
}

std::vector<int> exact_elimination_order(const Graph& g) {
    int n = g.n();
    if (n > 18) throw capability_error("exact tree decomposition is limited to n <= 18");
    if (n == 0) return {};
    std::vector<int8_t> f(1u << n, 0);
    for (unsigned s = 1; s < (1u << n); ++s) {
        int best = std::numeric_limits<int>::max();
        for (int v = 0; v < n; ++v) {
            if (!(s & (1u << v))) continue;
            unsigned rest = s & ~(1u << v);
            int cand = std::max<int>(f[rest], eliminated_degree(g, rest, v));
            best = std::min(best, cand);
        }
        f[s] = static_cast<int8_t>(best);
    }
    std::vector<int> order(n);
    unsigned s = (1u << n) - 1;
    for (int i = n - 1; i >= 0; --i) {
        for (int v = 0; v < n; ++v) {
            if (!(s & (1u << v))) continue;
            unsigned rest = s & ~(1u << v);
            if (std::max<int>(f[rest], eliminated_degree(g, rest, v)) == f[s]) {
                order[i] = v;
                s = rest;
                break;
            }
        }
    }
    return order;
}

}  // namespace

TreeDecomposition tree_decomposition(const Graph& g, TdMode mode) {
    if (mode == TdMode::Exact) {
        auto order = exact_elimination_order(g);
        auto td = decomposition_from_order(g, order);
        std::string why;
        if (!td.valid_for(g, &why)) throw contract_error("invalid exact decomposition: " + why);
        return td;
    }
    auto td_fill = decomposition_from_order(g, elimination_order(g, true));
    auto td_deg = decomposition_from_order(g, elimination_order(g, false));
    auto& best = td_fill.width() <= td_deg.width() ? td_fill : td_deg;
    std::string why;
    if (!best.valid_for(g, &why)) throw contract_error("invalid heuristic decomposition: " + why);
    return best;
}

int treewidth_exact(const Graph& g) {
    return decomposition_from_order(g, exact_elimination_order(g)).width();
}

VSet greedy_hit_approx(const std::vector<VSet>& collection) {
    VSet taken;
    for (const auto& s : collection)
        if (!sets_intersect(s, taken)) taken = set_union(taken, s);
    return taken;
}

HittingInstance HittingInstance::make(std::vector<VSet> sets,
                                      std::vector<std::pair<int, double>> w, long long k) {
    HittingInstance inst;
    for (auto& s : sets) s = normalized(s);
    inst.collection = std::move(sets);
    inst.weights = std::move(w);
    inst.k = k;
    for (auto& [v, wt] : inst.weights) {
        if (!(wt >= 0) || !std::isfinite(wt))
            throw input_error("weights must be finite and >= 0");
        (void)v;
    }
    for (const auto& s : inst.collection)
        if (s.empty()) inst.has_empty_set = true;
    return inst;
}

double HittingInstance::weight_of(int v) const {
    for (const auto& [u, w] : weights)
        if (u == v) return w;
    return 1.0;
}

// ---------------------------------------------------------------------------
// Nice tree decomposition with explicit edge-introduction nodes.

namespace {

struct NiceNode {
    enum Kind { Leaf, IntroV, IntroE, Forget, Join } kind = Leaf;
    int v = -1, u = -1;  // IntroV/Forget use v; IntroE uses (u, v)
    VSet bag;
    int c1 = -1, c2 = -1;
};

struct NiceTree {
    std::vector<NiceNode> nodes;
    int root = -1;

    int add(NiceNode n) {
        nodes.push_back(std::move(n));
        return static_cast<int>(nodes.size()) - 1;
    }
};

// introduce v into `node` (bag grows by v), then introduce v's edges to the bag
int introduce_with_edges(NiceTree& nt, const Graph& h, int node, int v) {
    VSet bag = set_union(nt.nodes[node].bag, {v});
    NiceNode in;
    in.kind = NiceNode::IntroV;
    in.v = v;
    in.bag = bag;
    in.c1 = node;
    int cur = nt.add(in);
    for (int u : bag) {
        if (u == v || !h.has_edge(u, v)) continue;
        NiceNode ie;
        ie.kind = NiceNode::IntroE;
        ie.u = std::min(u, v);
        ie.v = std::max(u, v);
        ie.bag = bag;
        ie.c1 = cur;
        cur = nt.add(ie);
    }
    return cur;
}

int forget_vertex(NiceTree& nt, int node, int v) {
    NiceNode f;
    f.kind = NiceNode::Forget;
    f.v = v;
    f.bag = set_minus(nt.nodes[node].bag, {v});
    f.c1 = node;
    return nt.add(f);
}

int chain_from_empty(NiceTree& nt, const Graph& h, const VSet& bag) {
    NiceNode leaf;
    leaf.kind = NiceNode::Leaf;
    int cur = nt.add(leaf);
    for (int v : bag) cur = introduce_with_edges(nt, h, cur, v);
    return cur;
}

int morph_to(NiceTree& nt, const Graph& h, int node, const VSet& target) {
    VSet cur_bag = nt.nodes[node].bag;
    int cur = node;
    for (int v : set_minus(cur_bag, target)) cur = forget_vertex(nt, cur, v);
    for (int v : set_minus(target, cur_bag)) cur = introduce_with_edges(nt, h, cur, v);
    return cur;
}

int build_nice_rec(NiceTree& nt, const Graph& h, const TreeDecomposition& td,
                   const std::vector<std::vector<int>>& children, int t) {
    std::vector<int> pieces;
    for (int c : children[t]) {
        int nc = build_nice_rec(nt, h, td, children, c);
        pieces.push_back(morph_to(nt, h, nc, td.bags[t]));
    }
    if (pieces.empty()) return chain_from_empty(nt, h, td.bags[t]);
    while (pieces.size() > 1) {
        NiceNode j;
        j.kind = NiceNode::Join;
        j.bag = td.bags[t];
        j.c1 = pieces[pieces.size() - 2];
        j.c2 = pieces[pieces.size() - 1];
        pieces.pop_back();
        pieces.back() = nt.add(j);
    }
    return pieces[0];
}

NiceTree build_nice_tree(const Graph& h, const TreeDecomposition& td) {
    NiceTree nt;
    std::vector<std::vector<int>> children(td.bags.size());
    int root_td = -1;
    for (std::size_t t = 0; t < td.parent.size(); ++t) {
        if (td.parent[t] == -1) root_td = static_cast<int>(t);
        else children[td.parent[t]].push_back(static_cast<int>(t));
    }
    int top = build_nice_rec(nt, h, td, children, root_td);
    VSet root_bag = nt.nodes[top].bag;
    for (int v : root_bag) top = forget_vertex(nt, top, v);
    nt.root = top;
    return nt;
}

// ---------------------------------------------------------------------------
// Weighted bounded-cardinality subset dominating set over the nice tree.
// Per-vertex states: IN (selected), OK (out, dominated or no requirement),
// PEND (out, domination still owed). State lists are per-vertex, so table
// codes use mixed radix.

constexpr int kIn = 0, kOk = 1, kPend = 2;

struct DomSolver {
    const Graph& h;
    const std::vector<double>& weight;
    const std::vector<bool>& selectable;
    const std::vector<bool>& target;
    long long cap;  // cardinality bound
    NiceTree nt;

    std::vector<std::vector<int>> states_of;  // vertex -> allowed states
    std::vector<std::vector<double>> tables;  // node -> [code * (cap+1) + cnt]
    std::vector<std::vector<int>> bag_radix;  // node -> per-position radix

    DomSolver(const Graph& hh, const std::vector<double>& w, const std::vector<bool>& sel,
              const std::vector<bool>& tgt, long long k, const TreeDecomposition& td)
        : h(hh), weight(w), selectable(sel), target(tgt), cap(k) {
        nt = build_nice_tree(h, td);
        states_of.assign(h.n(), {});
        for (int v = 0; v < h.n(); ++v) {
            std::vector<int> st;
            if (selectable[v]) st.push_back(kIn);
            st.push_back(kOk);
            if (target[v]) st.push_back(kPend);
            states_of[v] = st;
        }
    }

    long long code_count(int node) const {
        long long c = 1;
        for (int r : bag_radix[node]) c *= r;
        return c;
    }

    std::vector<int> decode(int node, long long code) const {
        const auto& radix = bag_radix[node];
        std::vector<int> st(radix.size());
        for (std::size_t i = 0; i < radix.size(); ++i) {
            st[i] = static_cast<int>(code % radix[i]);
            code /= radix[i];
        }
        return st;
    }

    long long encode(int node, const std::vector<int>& st) const {
        const auto& radix = bag_radix[node];
        long long code = 0;
        for (std::size_t i = radix.size(); i-- > 0;) code = code * radix[i] + st[i];
        return code;
    }

    int state_at(int node, const std::vector<int>& st, std::size_t pos) const {
        return states_of[nt.nodes[node].bag[pos]][st[pos]];
    }

    int state_index(int v, int s) const {
        const auto& sts = states_of[v];
        return static_cast<int>(std::find(sts.begin(), sts.end(), s) - sts.begin());
    }

    double& cell(int node, long long code, long long cnt) {
        return tables[node][code * (cap + 1) + cnt];
    }
    double cellv(int node, long long code, long long cnt) const {
        return tables[node][code * (cap + 1) + cnt];
    }

    void compute() {
        tables.assign(nt.nodes.size(), {});
        bag_radix.assign(nt.nodes.size(), {});
        long long total_cells = 0;
        for (std::size_t t = 0; t < nt.nodes.size(); ++t) {
            bag_radix[t].clear();
            for (int v : nt.nodes[t].bag)
                bag_radix[t].push_back(static_cast<int>(states_of[v].size()));
            total_cells += code_count(static_cast<int>(t)) * (cap + 1);
            if (total_cells > 40'000'000)
                throw capability_error("dominating-set DP table too large for this decomposition");
        }
        for (std::size_t t = 0; t < nt.nodes.size(); ++t) compute_node(static_cast<int>(t));
    }

    void compute_node(int t) {
        const NiceNode& nd = nt.nodes[t];
        long long codes = code_count(t);
        tables[t].assign(static_cast<std::size_t>(codes * (cap + 1)), kInf);
        switch (nd.kind) {
            case NiceNode::Leaf:
                cell(t, 0, 0) = 0;
                break;
            case NiceNode::IntroV: {
                int c = nd.c1;
                std::size_t pos = static_cast<std::size_t>(
                    std::lower_bound(nd.bag.begin(), nd.bag.end(), nd.v) - nd.bag.begin());
                long long ccodes = code_count(c);
                for (long long cc = 0; cc < ccodes; ++cc) {
                    auto cst = decode(c, cc);
                    for (long long cnt = 0; cnt <= cap; ++cnt) {
                        double w = cellv(c, cc, cnt);
                        if (w == kInf) continue;
                        for (std::size_t si = 0; si < states_of[nd.v].size(); ++si) {
                            int s = states_of[nd.v][si];
                            // a target enters undominated; OK is reached only
                            // through introduced edges or joins
                            if (s == kOk && target[nd.v]) continue;
                            if (s == kPend && !target[nd.v]) continue;
                            std::vector<int> st = cst;
                            st.insert(st.begin() + pos, static_cast<int>(si));
                            long long code = encode(t, st);
                            if (s == kIn) {
                                if (cnt + 1 > cap) continue;
                                double nw = w + weight[nd.v];
                                double& dst = cell(t, code, cnt + 1);
                                if (nw < dst) dst = nw;
                            } else {
                                double& dst = cell(t, code, cnt);
                                if (w < dst) dst = w;
                            }
                        }
                    }
                }
                break;
            }
            case NiceNode::IntroE: {
                int c = nd.c1;
                std::size_t pu = static_cast<std::size_t>(
                    std::lower_bound(nd.bag.begin(), nd.bag.end(), nd.u) - nd.bag.begin());
                std::size_t pv = static_cast<std::size_t>(
                    std::lower_bound(nd.bag.begin(), nd.bag.end(), nd.v) - nd.bag.begin());
                long long ccodes = code_count(c);
                for (long long cc = 0; cc < ccodes; ++cc) {
                    auto st = decode(c, cc);
                    int su = state_at(t, st, pu), sv = state_at(t, st, pv);
                    std::vector<int> nst = st;
                    if (su == kIn && sv == kPend)
                        nst[pv] = state_index(nd.bag[pv], kOk);
                    else if (sv == kIn && su == kPend)
                        nst[pu] = state_index(nd.bag[pu], kOk);
                    long long code = encode(t, nst);
                    for (long long cnt = 0; cnt <= cap; ++cnt) {
                        double w = cellv(c, cc, cnt);
                        if (w == kInf) continue;
                        double& dst = cell(t, code, cnt);
                        if (w < dst) dst = w;
                    }
                }
                break;
            }
            case NiceNode::Forget: {
                int c = nd.c1;
                std::size_t pos = static_cast<std::size_t>(
                    std::lower_bound(nt.nodes[c].bag.begin(), nt.nodes[c].bag.end(), nd.v) -
                    nt.nodes[c].bag.begin());
                long long ccodes = code_count(c);
                for (long long cc = 0; cc < ccodes; ++cc) {
                    auto cst = decode(c, cc);
                    int s = state_at(c, cst, pos);
                    if (s == kPend) continue;  // targets must be dominated before leaving
                    std::vector<int> st = cst;
                    st.erase(st.begin() + pos);
                    long long code = encode(t, st);
                    for (long long cnt = 0; cnt <= cap; ++cnt) {
                        double w = cellv(c, cc, cnt);
                        if (w == kInf) continue;
                        double& dst = cell(t, code, cnt);
                        if (w < dst) dst = w;
                    }
                }
                break;
            }
            case NiceNode::Join: {
                int a = nd.c1, b = nd.c2;
                long long acodes = code_count(a);
                // enumerate compatible pairs: IN positions must match, OUT
                // positions combine PEND&PEND -> PEND, else OK
                for (long long ca = 0; ca < acodes; ++ca) {
                    auto sta = decode(a, ca);
                    double shared_w = 0;
                    long long shared_cnt = 0;
                    for (std::size_t i = 0; i < sta.size(); ++i)
                        if (state_at(a, sta, i) == kIn) {
                            shared_w += weight[nd.bag[i]];
                            ++shared_cnt;
                        }
                    // enumerate all codes of b compatible with sta
                    std::vector<std::vector<int>> options(sta.size());
                    for (std::size_t i = 0; i < sta.size(); ++i) {
                        int v = nd.bag[i];
                        int s = state_at(a, sta, i);
                        for (std::size_t si = 0; si < states_of[v].size(); ++si) {
                            int sb = states_of[v][si];
                            if ((s == kIn) != (sb == kIn)) continue;
                            options[i].push_back(static_cast<int>(si));
                        }
                    }
                    std::vector<int> pick(sta.size(), 0);
                    while (true) {
                        std::vector<int> stb(sta.size());
                        for (std::size_t i = 0; i < sta.size(); ++i) stb[i] = options[i][pick[i]];
                        long long cb = encode(b, stb);
                        // merged state
                        std::vector<int> stm(sta.size());
                        for (std::size_t i = 0; i < sta.size(); ++i) {
                            int v = nd.bag[i];
                            int s1 = state_at(a, sta, i), s2 = states_of[v][stb[i]];
                            int sm = s1 == kIn ? kIn : ((s1 == kPend && s2 == kPend) ? kPend : kOk);
                            stm[i] = static_cast<int>(
                                std::find(states_of[v].begin(), states_of[v].end(), sm) -
                                states_of[v].begin());
                        }
                        long long cm = encode(t, stm);
                        for (long long c1 = 0; c1 <= cap; ++c1) {
                            double w1 = cellv(a, ca, c1);
                            if (w1 == kInf) continue;
                            for (long long c2 = 0; c2 <= cap; ++c2) {
                                double w2 = cellv(b, cb, c2);
                                if (w2 == kInf) continue;
                                long long cm_cnt = c1 + c2 - shared_cnt;
                                if (cm_cnt < 0 || cm_cnt > cap) continue;
                                double wm = w1 + w2 - shared_w;
                                double& dst = cell(t, cm, cm_cnt);
                                if (wm < dst) dst = wm;
                            }
                        }
                        std::size_t i = 0;
                        for (; i < pick.size(); ++i) {
                            if (++pick[i] < static_cast<int>(options[i].size())) break;
                            pick[i] = 0;
                        }
                        if (i == pick.size()) break;
                    }
                }
                break;
            }
        }
    }

    // walks the table back down collecting selected vertices
    void backtrack(int t, long long code, long long cnt, std::set<int>& chosen) const {
        const NiceNode& nd = nt.nodes[t];
        double w = cellv(t, code, cnt);
        switch (nd.kind) {
            case NiceNode::Leaf:
                return;
            case NiceNode::IntroV: {
                int c = nd.c1;
                std::size_t pos = static_cast<std::size_t>(
                    std::lower_bound(nd.bag.begin(), nd.bag.end(), nd.v) - nd.bag.begin());
                auto st = decode(t, code);
                int s = state_at(t, st, pos);
                std::vector<int> cst = st;
                cst.erase(cst.begin() + pos);
                long long cc = encode(c, cst);
                if (s == kIn) {
                    chosen.insert(nd.v);
                    backtrack(c, cc, cnt - 1, chosen);
                } else {
                    backtrack(c, cc, cnt, chosen);
                }
                return;
            }
            case NiceNode::IntroE: {
                int c = nd.c1;
                // candidate pre-images: same code, or with an endpoint set back
                // to PEND when the other endpoint is IN
                auto st = decode(t, code);
                std::vector<long long> cands{code};
                std::size_t pu = static_cast<std::size_t>(
                    std::lower_bound(nd.bag.begin(), nd.bag.end(), nd.u) - nd.bag.begin());
                std::size_t pv = static_cast<std::size_t>(
                    std::lower_bound(nd.bag.begin(), nd.bag.end(), nd.v) - nd.bag.begin());
                int su = state_at(t, st, pu), sv = state_at(t, st, pv);
                if (su == kIn && sv == kOk && target[nd.bag[pv]]) {
                    auto st2 = st;
                    st2[pv] = state_index(nd.bag[pv], kPend);
                    cands.push_back(encode(t, st2));
                }
                if (sv == kIn && su == kOk && target[nd.bag[pu]]) {
                    auto st2 = st;
                    st2[pu] = state_index(nd.bag[pu], kPend);
                    cands.push_back(encode(t, st2));
                }
                for (long long cc : cands)
                    if (cellv(c, cc, cnt) == w) { backtrack(c, cc, cnt, chosen); return; }
                throw contract_error("dominating-set backtrack failed at edge node");
            }
            case NiceNode::Forget: {
                int c = nd.c1;
                std::size_t pos = static_cast<std::size_t>(
                    std::lower_bound(nt.nodes[c].bag.begin(), nt.nodes[c].bag.end(), nd.v) -
                    nt.nodes[c].bag.begin());
                auto st = decode(t, code);
                for (std::size_t si = 0; si < states_of[nd.v].size(); ++si) {
                    if (states_of[nd.v][si] == kPend) continue;
                    std::vector<int> cst = st;
                    cst.insert(cst.begin() + pos, static_cast<int>(si));
                    long long cc = encode(c, cst);
                    if (cellv(c, cc, cnt) == w) { backtrack(c, cc, cnt, chosen); return; }
                }
                throw contract_error("dominating-set backtrack failed at forget node");
            }
            case NiceNode::Join: {
                int a = nd.c1, b = nd.c2;
                auto stm = decode(t, code);
                double shared_w = 0;
                long long shared_cnt = 0;
                for (std::size_t i = 0; i < stm.size(); ++i)
                    if (state_at(t, stm, i) == kIn) {
                        shared_w += weight[nd.bag[i]];
                        ++shared_cnt;
                    }
                // enumerate (sta, stb) merging to stm
                std::vector<std::vector<std::pair<int, int>>> options(stm.size());
                for (std::size_t i = 0; i < stm.size(); ++i) {
                    int v = nd.bag[i];
                    int sm = state_at(t, stm, i);
                    for (std::size_t s1 = 0; s1 < states_of[v].size(); ++s1)
                        for (std::size_t s2 = 0; s2 < states_of[v].size(); ++s2) {
                            int a1 = states_of[v][s1], a2 = states_of[v][s2];
                            int merged = a1 == kIn ? kIn
                                                   : ((a1 == kPend && a2 == kPend) ? kPend : kOk);
                            if ((a1 == kIn) != (a2 == kIn)) continue;
                            if (merged == sm)
                                options[i].emplace_back(static_cast<int>(s1), static_cast<int>(s2));
                        }
                }
                std::vector<int> pick(stm.size(), 0);
                while (true) {
                    std::vector<int> sta(stm.size()), stb(stm.size());
                    for (std::size_t i = 0; i < stm.size(); ++i) {
                        sta[i] = options[i][pick[i]].first;
                        stb[i] = options[i][pick[i]].second;
                    }
                    long long ca = encode(a, sta), cb = encode(b, stb);
                    for (long long c1 = 0; c1 <= cap; ++c1) {
                        double w1 = cellv(a, ca, c1);
                        if (w1 == kInf) continue;
                        long long c2 = cnt + shared_cnt - c1;
                        if (c2 < 0 || c2 > cap) continue;
                        double w2 = cellv(b, cb, c2);
                        if (w2 == kInf) continue;
                        if (w1 + w2 - shared_w == w) {
                            backtrack(a, ca, c1, chosen);
                            backtrack(b, cb, c2, chosen);
                            return;
                        }
                    }
                    std::size_t i = 0;
                    for (; i < pick.size(); ++i) {
                        if (++pick[i] < static_cast<int>(options[i].size())) break;
                        pick[i] = 0;
                    }
                    if (i == pick.size()) break;
                }
                throw contract_error("dominating-set backtrack failed at join node");
            }
        }
    }
};

}  // namespace

std::optional<HittingSolution> subset_dominating_set(const Graph& h,
                                                     const std::vector<double>& weight,
                                                     const std::vector<bool>& selectable,
                                                     const std::vector<bool>& target,
                                                     long long k,
                                                     const TreeDecomposition& td) {
    if (k < 0) return std::nullopt;
    std::string why;
    if (!td.valid_for(h, &why)) throw contract_error("decomposition invalid for graph: " + why);
    long long cap = std::min<long long>(k, h.n());
    DomSolver solver(h, weight, selectable, target, cap, td);
    solver.compute();
    int root = solver.nt.root;
    double best = kInf;
    long long best_cnt = 0;
    for (long long cnt = 0; cnt <= cap; ++cnt) {
        double w = solver.cellv(root, 0, cnt);
        if (w < best) {
            best = w;
            best_cnt = cnt;
        }
    }
    if (best == kInf) return std::nullopt;
    std::set<int> chosen;
    solver.backtrack(root, 0, best_cnt, chosen);
    HittingSolution sol;
    sol.vertices.assign(chosen.begin(), chosen.end());
    sol.weight = best;
    return sol;
}

std::optional<HittingSolution> min_weight_hitting_set(const HittingInstance& inst,
                                                      const TreeDecomposition& td_of_gaifman) {
    if (inst.k < 0) return std::nullopt;
    if (inst.has_empty_set) return std::nullopt;
    if (inst.collection.empty()) return HittingSolution{};
    GaifmanGraph gg = gaifman_graph(inst.collection);
    std::string why;
    if (!td_of_gaifman.valid_for(gg.graph, &why))
        throw contract_error("decomposition does not match the instance: " + why);

    int p = gg.graph.n();
    int ell = static_cast<int>(inst.collection.size());
    // H: Gaifman graph plus one sentinel per set, adjacent to that set
    auto edges = gg.graph.edges();
    for (int i = 0; i < ell; ++i)
        for (int v : inst.collection[i]) edges.emplace_back(gg.local_of[v], p + i);
    Graph h = Graph::from_edges(p + ell, edges);

    std::vector<double> weight(p + ell, 0.0);
    std::vector<bool> selectable(p + ell, false), target(p + ell, false);
    for (int i = 0; i < p; ++i) {
        weight[i] = inst.weight_of(gg.vertices[i]);
        selectable[i] = true;
    }
    for (int i = 0; i < ell; ++i) target[p + i] = true;  // sentinels: unselectable markers

    // hang one leaf bag X_i + {x_i} below a node whose bag contains the clique X_i
    TreeDecomposition td = td_of_gaifman;
    for (int i = 0; i < ell; ++i) {
        VSet local;
        for (int v : inst.collection[i]) local.push_back(gg.local_of[v]);
        local = normalized(local);
        int attach = -1;
        for (std::size_t t = 0; t < td_of_gaifman.bags.size(); ++t)
            if (is_subset(local, td_of_gaifman.bags[t])) { attach = static_cast<int>(t); break; }
        if (attach == -1)
            throw contract_error("no bag contains a collection set; decomposition mismatch");
        td.bags.push_back(set_union(local, {p + i}));
        td.parent.push_back(attach);
    }

    auto sol = subset_dominating_set(h, weight, selectable, target, inst.k, td);
    if (!sol) return std::nullopt;
    VSet orig;
    for (int v : sol->vertices) orig.push_back(gg.vertices[v]);
    sol->vertices = normalized(orig);
    return sol;
}

HittingInstance parse_instance(std::istream& in) {
    std::vector<VSet> sets;
    std::vector<std::pair<int, double>> weights;
    long long k = 0;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head)) continue;
        if (head == "k") {
            if (!(ls >> k)) throw input_error("line " + std::to_string(lineno) + ": bad k");
        } else if (head == "w") {
            int v;
            double w;
            if (!(ls >> v >> w)) throw input_error("line " + std::to_string(lineno) + ": bad weight");
            weights.emplace_back(v, w);
        } else if (head == "set") {
            VSet s;
            int v;
            while (ls >> v) s.push_back(v);
            sets.push_back(normalized(s));
        } else {
            throw input_error("line " + std::to_string(lineno) + ": unknown record '" + head + "'");
        }
    }
    return HittingInstance::make(std::move(sets), std::move(weights), k);
}

HittingInstance parse_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open instance file: " + path);
    return parse_instance(in);
}

std::string instance_to_text(const HittingInstance& inst) {
    std::ostringstream os;
    os << "k " << inst.k << "\n";
    for (const auto& [v, w] : inst.weights) os << "w " << v << " " << w << "\n";
    for (const auto& s : inst.collection) {
        os << "set";
        for (int v : s) os << " " << v;
        os << "\n";
    }
    return os.str();
}

}  // namespace fhit
