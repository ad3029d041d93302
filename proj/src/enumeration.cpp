#include "domratio/enumeration.hpp"

#include <algorithm>
#include <stdexcept>

namespace domratio {

namespace {

void check_order(int n) {
    if (n < 1 || n > kEnumerationCap)
        throw std::invalid_argument("tree enumeration: order must be in 1.." +
                                    std::to_string(kEnumerationCap));
}

// levels -> parent array (parent of the root is -1).
void parents_from_levels(const std::vector<int>& levels, std::vector<int>& parent,
                         std::vector<int>& last_at_depth) {
    const int n = static_cast<int>(levels.size());
    parent.assign(n, -1);
    last_at_depth.assign(n, -1);
    last_at_depth[0] = 0;
    for (int i = 1; i < n; ++i) {
        parent[i] = last_at_depth[levels[i] - 1];
        last_at_depth[levels[i]] = i;
    }
}

// Canonical rooted level sequence: subtree blocks sorted non-increasing, which
// makes the concatenated depth sequence lexicographically maximal.
std::vector<int> canonical_levels(const std::vector<std::vector<int>>& adj, int v, int parent) {
    std::vector<std::vector<int>> blocks;
    for (int w : adj[v]) {
        if (w == parent) continue;
        blocks.push_back(canonical_levels(adj, w, v));
    }
    std::sort(blocks.begin(), blocks.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) { return b < a; });
    std::vector<int> out{0};
    for (const auto& block : blocks)
        for (int d : block) out.push_back(d + 1);
    return out;
}

}  // namespace

TreeStream::TreeStream(int n) : n_(n) {
    check_order(n);
    levels_.resize(n);
    for (int i = 0; i < n; ++i) levels_[i] = i;  // the path, lexicographically largest
}

bool TreeStream::advance() {
    int p = -1;
    for (int i = n_ - 1; i >= 0; --i) {
        if (levels_[i] >= 2) {
            p = i;
            break;
        }
    }
    if (p < 0) return false;  // the star is last
    int q = p - 1;
    while (levels_[q] != levels_[p] - 1) --q;
    for (int i = p; i < n_; ++i) levels_[i] = levels_[i - (p - q)];
    return true;
}

bool TreeStream::current_is_free_canonical() const {
    const int n = n_;
    if (n <= 2) return true;

    std::vector<int> parent, scratch;
    parents_from_levels(levels_, parent, scratch);

    std::vector<int> size(n, 1), child_max(n, 0);
    for (int i = n - 1; i >= 1; --i) {
        size[parent[i]] += size[i];
        child_max[parent[i]] = std::max(child_max[parent[i]], size[i]);
    }
    int best = n;
    std::vector<int> max_part(n);
    for (int v = 0; v < n; ++v) {
        max_part[v] = std::max(n - size[v], child_max[v]);
        best = std::min(best, max_part[v]);
    }
    if (max_part[0] != best) return false;  // vertex 0 must be a centroid

    std::vector<std::vector<int>> adj(n);
    for (int i = 1; i < n; ++i) {
        adj[parent[i]].push_back(i);
        adj[i].push_back(parent[i]);
    }
    std::vector<int> canonical = canonical_levels(adj, 0, -1);
    if (canonical != levels_) return false;
    // Bicentroidal trees: keep the rooting whose sequence is the larger one.
    for (int v = 1; v < n; ++v) {
        if (max_part[v] == best && canonical_levels(adj, v, -1) > levels_) return false;
    }
    return true;
}

std::optional<Graph> TreeStream::next() {
    while (!exhausted_) {
        if (first_pending_) {
            first_pending_ = false;
        } else if (!advance()) {
            exhausted_ = true;
            break;
        }
        if (current_is_free_canonical()) {
            ++produced_;
            std::vector<int> parent, scratch;
            parents_from_levels(levels_, parent, scratch);
            std::vector<std::pair<int, int>> edges;
            edges.reserve(n_ - 1);
            for (int i = 1; i < n_; ++i) edges.emplace_back(parent[i], i);
            return Graph::from_edges(n_, edges);
        }
    }
    return std::nullopt;
}

std::int64_t count_trees(int n) {
    TreeStream stream(n);
    while (stream.next()) {
    }
    return stream.produced();
}

std::int64_t count_rooted_trees(int n) {
    check_order(n);
    TreeStream stream(n);
    std::int64_t count = 1;
    while (stream.advance()) ++count;
    return count;
}

void for_each_tree(int n, const std::function<void(const Graph&)>& fn) {
    TreeStream stream(n);
    while (auto g = stream.next()) fn(*g);
}

}  // namespace domratio
