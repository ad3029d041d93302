#ifndef DOMRATIO_TESTS_BUILDERS_HPP
#define DOMRATIO_TESTS_BUILDERS_HPP

#include <utility>
#include <vector>

#include "domratio/graph.hpp"

namespace testsupport {

inline domratio::Graph path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return domratio::Graph::from_edges(n, edges);
}

// K_{1,k} with the center at vertex 0.
inline domratio::Graph star_graph(int k) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= k; ++i) edges.emplace_back(0, i);
    return domratio::Graph::from_edges(k + 1, edges);
}

inline domratio::Graph cycle_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(0, n - 1);
    return domratio::Graph::from_edges(n, edges);
}

inline domratio::Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return domratio::Graph::from_edges(n, edges);
}

}  // namespace testsupport

#endif
