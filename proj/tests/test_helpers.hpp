#ifndef FHIT_TEST_HELPERS_HPP
#define FHIT_TEST_HELPERS_HPP

#include <sstream>
#include <vector>

#include "fhit/graph.hpp"
#include "fhit/util.hpp"

namespace fhit_test {

using fhit::Graph;
using fhit::VSet;

inline Graph path(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edges(n, e);
}

inline Graph cycle(int n) {
    auto e = path(n).edges();
    e.emplace_back(0, n - 1);
    return Graph::from_edges(n, e);
}

inline Graph clique(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph::from_edges(n, e);
}

inline Graph star(int leaves) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return Graph::from_edges(leaves + 1, e);
}

inline Graph grid(int rows, int cols) {
    std::vector<std::pair<int, int>> e;
    auto id = [&](int r, int c) { return r * cols + c; };
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) e.emplace_back(id(r, c), id(r, c + 1));
            if (r + 1 < rows) e.emplace_back(id(r, c), id(r + 1, c));
        }
    return Graph::from_edges(rows * cols, e);
}

inline Graph random_graph(int n, double p, fhit::Rng& rng) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.uniform01() < p) e.emplace_back(i, j);
    return Graph::from_edges(n, e);
}

// all subsets of 0..n-1 with size <= cap
inline std::vector<VSet> small_subsets(int n, int cap) {
    std::vector<VSet> out;
    std::vector<VSet> frontier{{}};
    out.push_back({});
    for (int size = 1; size <= cap; ++size) {
        std::vector<VSet> next;
        for (const auto& s : frontier) {
            int lo = s.empty() ? 0 : s.back() + 1;
            for (int v = lo; v < n; ++v) {
                VSet t = s;
                t.push_back(v);
                out.push_back(t);
                next.push_back(std::move(t));
            }
        }
        frontier = std::move(next);
    }
    return out;
}

}  // namespace fhit_test

#endif
