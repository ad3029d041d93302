#ifndef DOMRATIO_GRAPH_HPP
#define DOMRATIO_GRAPH_HPP

#include <string>
#include <utility>
#include <vector>

namespace domratio {

// Immutable simple undirected graph on vertices 0..n-1. Neighbor lists are
// kept sorted ascending so every iteration order downstream is deterministic.
class Graph {
public:
    Graph() = default;

    // Validates: indices in range, no self-loops, no duplicate edges.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int n() const { return n_; }
    int edge_count() const { return edge_count_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return degree_[v]; }
    const std::vector<int>& degrees() const { return degree_; }
    int max_degree() const;
    bool has_edge(int u, int v) const;

    // All edges as (u, v) with u < v, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.adj_ == b.adj_;
    }
    friend bool operator!=(const Graph& a, const Graph& b) { return !(a == b); }

private:
    int n_ = 0;
    int edge_count_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<int> degree_;
};

// Set of vertex indices over a fixed ground set 0..ground_size-1.
// Members are stored sorted ascending; iteration order is deterministic.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int ground_size);
    VertexSet(int ground_size, std::vector<int> members);

    int ground_size() const { return ground_size_; }
    int size() const { return static_cast<int>(members_.size()); }
    bool empty() const { return members_.empty(); }
    bool contains(int v) const;
    void add(int v);
    const std::vector<int>& values() const { return members_; }
    std::vector<int>::const_iterator begin() const { return members_.begin(); }
    std::vector<int>::const_iterator end() const { return members_.end(); }

    VertexSet union_with(const VertexSet& other) const;
    // N[S] in g; g must have the same ground set size.
    VertexSet closed_neighborhood(const Graph& g) const;

    friend bool operator==(const VertexSet& a, const VertexSet& b) {
        return a.ground_size_ == b.ground_size_ && a.members_ == b.members_;
    }
    friend bool operator!=(const VertexSet& a, const VertexSet& b) { return !(a == b); }

private:
    int ground_size_ = 0;
    std::vector<int> members_;
};

struct ForestInfo {
    bool is_forest = false;
    bool is_tree = false;
    std::vector<VertexSet> components;  // partition of 0..n-1, by ascending least vertex
};

// Derived graphs keep an index map back to the graph they came from.
struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_parent;  // to_parent[i] = label in the parent graph
};

struct LineGraphResult {
    Graph graph;
    std::vector<std::pair<int, int>> vertex_to_edge;  // L-vertex i = this edge of the parent
};

// Multi-line text format: first line "n <count>", then one "u v" per line.
Graph parse_edge_list(const std::string& text);

ForestInfo classify_forest(const Graph& g);

// Two adjacent centers of degree s+1, each with s pendant leaves.
// Labels: centers 0 and 1, leaves of 0 are 2..s+1, leaves of 1 are s+2..2s+1.
Graph balanced_double_star(int s);

// Tree with exactly two vertices of degree > 1, both of the same degree.
bool is_balanced_double_star(const Graph& g);

// One vertex per edge of g (edges in lexicographic order), adjacent iff the
// edges share an endpoint. Requires g connected and edge_count <= 62.
LineGraphResult line_graph(const Graph& g);

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& vertices);

// a's vertices keep their labels, b's are shifted by a.n().
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace domratio

#endif
