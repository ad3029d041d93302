#ifndef DOMRATIO_ENUMERATION_HPP
#define DOMRATIO_ENUMERATION_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "domratio/graph.hpp"

namespace domratio {

inline constexpr int kEnumerationCap = 20;

// Streams exactly one representative per isomorphism class of free trees on
// n vertices, in a fixed deterministic order. Representatives are labeled in
// preorder of their canonical level sequence, so vertex 0 is the canonical
// centroid root.
//
// The stream walks canonical rooted level sequences (lexicographically
// decreasing successor stepping, path first, star last) and keeps a sequence
// exactly when it is the centroid-rooted canonical form of its own tree, so
// each free tree surfaces once.
class TreeStream {
public:
    explicit TreeStream(int n);  // 1 <= n <= kEnumerationCap

    std::optional<Graph> next();
    std::int64_t produced() const { return produced_; }
    int n() const { return n_; }

private:
    friend std::int64_t count_rooted_trees(int n);

    bool advance();  // step to the next rooted level sequence
    bool current_is_free_canonical() const;

    int n_ = 0;
    bool exhausted_ = false;
    bool first_pending_ = true;
    std::int64_t produced_ = 0;
    std::vector<int> levels_;  // preorder depths, levels_[0] == 0
};

// Full-traversal count of the classes emitted by TreeStream.
std::int64_t count_trees(int n);

// Number of canonical rooted level sequences on n vertices (the unfiltered
// stream). Exposed so the stepping layer can be validated on its own.
std::int64_t count_rooted_trees(int n);

void for_each_tree(int n, const std::function<void(const Graph&)>& fn);

}  // namespace domratio

#endif
