#include "domratio/graph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace domratio {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw std::invalid_argument("graph: negative vertex count");
    Graph g;
    g.n_ = n;
    g.adj_.assign(n, {});
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n) {
            throw std::invalid_argument("graph: vertex index out of range: " +
                                        std::to_string(u) + " " + std::to_string(v));
        }
        if (u == v) throw std::invalid_argument("graph: self-loop at vertex " + std::to_string(u));
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (int v = 0; v < n; ++v) {
        auto& nb = g.adj_[v];
        std::sort(nb.begin(), nb.end());
        if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) {
            throw std::invalid_argument("graph: duplicate edge at vertex " + std::to_string(v));
        }
    }
    g.degree_.resize(n);
    for (int v = 0; v < n; ++v) g.degree_[v] = static_cast<int>(g.adj_[v].size());
    g.edge_count_ = static_cast<int>(edges.size());
    return g;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree_[v]);
    return d;
}

bool Graph::has_edge(int u, int v) const {
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count_);
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

VertexSet::VertexSet(int ground_size) : ground_size_(ground_size) {
    if (ground_size < 0) throw std::invalid_argument("vertex set: negative ground size");
}

VertexSet::VertexSet(int ground_size, std::vector<int> members) : VertexSet(ground_size) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (!members.empty() && (members.front() < 0 || members.back() >= ground_size_)) {
        throw std::invalid_argument("vertex set: member outside ground set");
    }
    members_ = std::move(members);
}

bool VertexSet::contains(int v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
}

void VertexSet::add(int v) {
    if (v < 0 || v >= ground_size_) throw std::invalid_argument("vertex set: member outside ground set");
    auto it = std::lower_bound(members_.begin(), members_.end(), v);
    if (it == members_.end() || *it != v) members_.insert(it, v);
}

VertexSet VertexSet::union_with(const VertexSet& other) const {
    if (ground_size_ != other.ground_size_)
        throw std::invalid_argument("vertex set: ground set mismatch in union");
    std::vector<int> merged;
    merged.reserve(members_.size() + other.members_.size());
    std::set_union(members_.begin(), members_.end(), other.members_.begin(),
                   other.members_.end(), std::back_inserter(merged));
    return VertexSet(ground_size_, std::move(merged));
}

VertexSet VertexSet::closed_neighborhood(const Graph& g) const {
    if (g.n() != ground_size_)
        throw std::invalid_argument("vertex set: ground set does not match graph");
    std::vector<char> hit(ground_size_, 0);
    for (int v : members_) {
        hit[v] = 1;
        for (int w : g.neighbors(v)) hit[w] = 1;
    }
    std::vector<int> out;
    for (int v = 0; v < ground_size_; ++v)
        if (hit[v]) out.push_back(v);
    return VertexSet(ground_size_, std::move(out));
}

namespace {

std::invalid_argument edge_list_error(int line_no, const std::string& message) {
    return std::invalid_argument("edge list, line " + std::to_string(line_no) + ": " + message);
}

}  // namespace

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<char>> seen;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        if (n < 0) {
            std::string tag;
            if (!(ls >> tag) || tag != "n")
                throw edge_list_error(line_no, "expected header \"n <count>\"");
            if (!(ls >> n) || n < 0) throw edge_list_error(line_no, "invalid vertex count");
            std::string rest;
            if (ls >> rest) throw edge_list_error(line_no, "trailing tokens after vertex count");
            seen.assign(n, std::vector<char>(n, 0));
            continue;
        }
        int u, v;
        if (!(ls >> u)) {
            std::istringstream probe(line);
            std::string tok;
            if (!(probe >> tok)) continue;  // blank line
            throw edge_list_error(line_no, "expected \"u v\"");
        }
        if (!(ls >> v)) throw edge_list_error(line_no, "expected \"u v\"");
        std::string rest;
        if (ls >> rest) throw edge_list_error(line_no, "trailing tokens after edge");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw edge_list_error(line_no, "vertex index out of range");
        if (u == v) throw edge_list_error(line_no, "self-loop");
        if (seen[u][v]) throw edge_list_error(line_no, "duplicate edge");
        seen[u][v] = seen[v][u] = 1;
        edges.emplace_back(u, v);
    }
    if (n < 0) throw std::invalid_argument("edge list: missing header \"n <count>\"");
    return Graph::from_edges(n, edges);
}

ForestInfo classify_forest(const Graph& g) {
    ForestInfo info;
    const int n = g.n();
    std::vector<int> comp(n, -1);
    int comp_count = 0;
    std::vector<int> stack;
    for (int start = 0; start < n; ++start) {
        if (comp[start] >= 0) continue;
        const int id = comp_count++;
        stack.push_back(start);
        comp[start] = id;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(v)) {
                if (comp[w] < 0) {
                    comp[w] = id;
                    stack.push_back(w);
                }
            }
        }
    }
    std::vector<std::vector<int>> members(comp_count);
    std::vector<int> comp_edges(comp_count, 0);
    for (int v = 0; v < n; ++v) {
        members[comp[v]].push_back(v);
        comp_edges[comp[v]] += g.degree(v);
    }
    info.is_forest = true;
    for (int c = 0; c < comp_count; ++c) {
        comp_edges[c] /= 2;
        if (comp_edges[c] != static_cast<int>(members[c].size()) - 1) info.is_forest = false;
        info.components.emplace_back(n, std::move(members[c]));
    }
    info.is_tree = info.is_forest && comp_count == 1;
    return info;
}

Graph balanced_double_star(int s) {
    if (s < 1) throw std::invalid_argument("balanced double star: s must be >= 1");
    std::vector<std::pair<int, int>> edges;
    edges.emplace_back(0, 1);
    for (int i = 0; i < s; ++i) {
        edges.emplace_back(0, 2 + i);
        edges.emplace_back(1, 2 + s + i);
    }
    return Graph::from_edges(2 * s + 2, edges);
}

bool is_balanced_double_star(const Graph& g) {
    if (!classify_forest(g).is_tree) return false;
    std::vector<int> internal;
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) > 1) internal.push_back(v);
    if (internal.size() != 2) return false;
    return g.degree(internal[0]) == g.degree(internal[1]);
}

LineGraphResult line_graph(const Graph& g) {
    auto info = classify_forest(g);
    if (info.components.size() != 1)
        throw std::invalid_argument("line graph: input must be connected");
    const auto parent_edges = g.edges();
    const int m = static_cast<int>(parent_edges.size());
    if (m > 62) throw std::invalid_argument("line graph: more than 62 edges");
    std::vector<std::pair<int, int>> l_edges;
    for (int a = 0; a < m; ++a) {
        for (int b = a + 1; b < m; ++b) {
            auto [u1, v1] = parent_edges[a];
            auto [u2, v2] = parent_edges[b];
            if (u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2) l_edges.emplace_back(a, b);
        }
    }
    return LineGraphResult{Graph::from_edges(m, l_edges), parent_edges};
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& vertices) {
    if (vertices.ground_size() != g.n())
        throw std::invalid_argument("induced subgraph: ground set does not match graph");
    std::vector<int> to_parent(vertices.begin(), vertices.end());
    std::vector<int> to_child(g.n(), -1);
    for (int i = 0; i < static_cast<int>(to_parent.size()); ++i) to_child[to_parent[i]] = i;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < static_cast<int>(to_parent.size()); ++i) {
        for (int w : g.neighbors(to_parent[i])) {
            int j = to_child[w];
            if (j > i) edges.emplace_back(i, j);
        }
    }
    return InducedSubgraph{Graph::from_edges(static_cast<int>(to_parent.size()), edges),
                           std::move(to_parent)};
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<std::pair<int, int>> edges = a.edges();
    for (auto [u, v] : b.edges()) edges.emplace_back(u + a.n(), v + a.n());
    return Graph::from_edges(a.n() + b.n(), edges);
}

}  // namespace domratio
