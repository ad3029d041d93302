#include "domratio/solvers.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace domratio {

namespace {

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

std::int64_t clamped_add(std::int64_t a, std::int64_t b) {
    return std::min(kInf, a + b);
}

void require_nonempty(const Graph& g, const char* who) {
    if (g.n() == 0) throw std::invalid_argument(std::string(who) + ": empty graph");
}

void require_brute_cap(const Graph& g, const char* who) {
    if (g.n() > kBruteForceCap)
        throw std::length_error(std::string(who) + ": n > " + std::to_string(kBruteForceCap));
}

std::vector<std::uint64_t> closed_neighborhood_masks(const Graph& g) {
    std::vector<std::uint64_t> closed(g.n());
    for (int v = 0; v < g.n(); ++v) {
        std::uint64_t m = 1ull << v;
        for (int w : g.neighbors(v)) m |= 1ull << w;
        closed[v] = m;
    }
    return closed;
}

std::vector<std::uint64_t> open_neighborhood_masks(const Graph& g) {
    std::vector<std::uint64_t> open(g.n());
    for (int v = 0; v < g.n(); ++v) {
        std::uint64_t m = 0;
        for (int w : g.neighbors(v)) m |= 1ull << w;
        open[v] = m;
    }
    return open;
}

// Scans k-subsets in lexicographic order of their ascending index tuples,
// smallest k first, and returns the first subset accepted; that subset is the
// lexicographically least minimum one.
template <typename Accept>
SolverResult scan_subsets(const Graph& g, Accept accept) {
    const int n = g.n();
    std::vector<int> idx;
    for (int k = 1; k <= n; ++k) {
        idx.resize(k);
        for (int i = 0; i < k; ++i) idx[i] = i;
        while (true) {
            if (accept(idx)) {
                return SolverResult{k, VertexSet(n, idx)};
            }
            int i = k - 1;
            while (i >= 0 && idx[i] == n - k + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    throw std::logic_error("subset scan: no admissible set found");
}

struct RootedForest {
    std::vector<int> order;     // BFS order, roots first within each component
    std::vector<int> parent;    // -1 at roots
    std::vector<std::vector<int>> children;
    std::vector<int> roots;     // least vertex of each component
};

RootedForest root_forest(const Graph& g) {
    const int n = g.n();
    RootedForest f;
    f.parent.assign(n, -2);
    f.children.assign(n, {});
    f.order.reserve(n);
    for (int r = 0; r < n; ++r) {
        if (f.parent[r] != -2) continue;
        f.roots.push_back(r);
        f.parent[r] = -1;
        std::size_t head = f.order.size();
        f.order.push_back(r);
        while (head < f.order.size()) {
            int v = f.order[head++];
            for (int w : g.neighbors(v)) {
                if (f.parent[w] == -2) {
                    f.parent[w] = v;
                    f.children[v].push_back(w);
                    f.order.push_back(w);
                }
            }
        }
    }
    return f;
}

// Three-state domination DP over a rooted forest.
// State 0: v in the set. State 1: v not in the set, dominated by a child.
// State 2: v not in the set, to be dominated by its parent.
SolverResult forest_dp(const Graph& g, bool independent) {
    auto info = classify_forest(g);
    if (!info.is_forest)
        throw std::invalid_argument(independent ? "i_forest_dp: input is not a forest"
                                                : "gamma_forest_dp: input is not a forest");
    require_nonempty(g, independent ? "i_forest_dp" : "gamma_forest_dp");

    const int n = g.n();
    const RootedForest f = root_forest(g);
    std::vector<std::int64_t> dp0(n), dp1(n), dp2(n);

    for (int i = n - 1; i >= 0; --i) {
        const int v = f.order[i];
        std::int64_t in_cost = 1, child_cost = 0, parent_cost = 0;
        std::int64_t promote = kInf;  // cheapest bump to force one child into the set
        for (int c : f.children[v]) {
            std::int64_t best_any = std::min({dp0[c], dp1[c], dp2[c]});
            std::int64_t best01 = std::min(dp0[c], dp1[c]);
            in_cost = clamped_add(in_cost, independent ? std::min(dp1[c], dp2[c]) : best_any);
            child_cost = clamped_add(child_cost, best01);
            promote = std::min(promote, dp0[c] - best01);
            parent_cost = clamped_add(parent_cost, dp1[c]);
        }
        dp0[v] = in_cost;
        dp1[v] = f.children[v].empty() ? kInf : clamped_add(child_cost, promote);
        dp2[v] = parent_cost;
    }

    std::int64_t total = 0;
    std::vector<int> state(n, -1);
    for (int r : f.roots) {
        total += std::min(dp0[r], dp1[r]);
        state[r] = dp0[r] <= dp1[r] ? 0 : 1;
    }

    // Top-down reconstruction; any argmin assignment reproduces the dp value.
    std::vector<int> witness;
    for (int v : f.order) {
        if (state[v] == 0) witness.push_back(v);
        if (f.children[v].empty()) continue;
        switch (state[v]) {
            case 0:
                for (int c : f.children[v]) {
                    if (independent) {
                        state[c] = dp1[c] <= dp2[c] ? 1 : 2;
                    } else {
                        std::int64_t m = std::min({dp0[c], dp1[c], dp2[c]});
                        state[c] = dp0[c] == m ? 0 : (dp1[c] == m ? 1 : 2);
                    }
                }
                break;
            case 1: {
                int designated = -1;
                std::int64_t best = kInf;
                for (int c : f.children[v]) {
                    std::int64_t bump = dp0[c] - std::min(dp0[c], dp1[c]);
                    if (bump < best) {
                        best = bump;
                        designated = c;
                    }
                }
                for (int c : f.children[v]) {
                    state[c] = (c == designated || dp0[c] <= dp1[c]) ? 0 : 1;
                }
                break;
            }
            case 2:
                for (int c : f.children[v]) state[c] = 1;
                break;
            default:
                throw std::logic_error("forest dp: unassigned state");
        }
    }

    SolverResult result{static_cast<int>(total), VertexSet(n, witness)};
    return result;
}

}  // namespace

bool is_dominating(const Graph& g, const VertexSet& s) {
    if (s.ground_size() != g.n())
        throw std::invalid_argument("is_dominating: ground set does not match graph");
    return s.closed_neighborhood(g).size() == g.n();
}

bool is_independent(const Graph& g, const VertexSet& s) {
    if (s.ground_size() != g.n())
        throw std::invalid_argument("is_independent: ground set does not match graph");
    for (int v : s)
        for (int w : g.neighbors(v))
            if (w > v && s.contains(w)) return false;
    return true;
}

SolverResult gamma_brute(const Graph& g) {
    require_nonempty(g, "gamma_brute");
    require_brute_cap(g, "gamma_brute");
    const auto closed = closed_neighborhood_masks(g);
    const std::uint64_t full = g.n() == 64 ? ~0ull : (1ull << g.n()) - 1;
    return scan_subsets(g, [&](const std::vector<int>& idx) {
        std::uint64_t covered = 0;
        for (int v : idx) covered |= closed[v];
        return covered == full;
    });
}

SolverResult i_brute(const Graph& g) {
    require_nonempty(g, "i_brute");
    require_brute_cap(g, "i_brute");
    const auto closed = closed_neighborhood_masks(g);
    const auto open = open_neighborhood_masks(g);
    const std::uint64_t full = g.n() == 64 ? ~0ull : (1ull << g.n()) - 1;
    return scan_subsets(g, [&](const std::vector<int>& idx) {
        std::uint64_t covered = 0, chosen = 0;
        for (int v : idx) {
            if (open[v] & chosen) return false;
            chosen |= 1ull << v;
            covered |= closed[v];
        }
        return covered == full;
    });
}

SolverResult gamma_forest_dp(const Graph& g) { return forest_dp(g, false); }

SolverResult i_forest_dp(const Graph& g) { return forest_dp(g, true); }

Rational domination_ratio_bound(int max_degree) {
    if (max_degree <= 2) return Rational(1);
    return Rational(max_degree, 2);
}

bool mediant_within_bound(const std::vector<std::pair<std::int64_t, std::int64_t>>& pairs,
                          const Rational& t) {
    std::int64_t num_sum = 0, den_sum = 0;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        auto [num, den] = pairs[i];
        if (num <= 0 || den <= 0)
            throw std::invalid_argument("mediant: pair " + std::to_string(i) +
                                        " is not a pair of positive integers");
        if (Rational(num, den) > t)
            throw std::invalid_argument("mediant: pair " + std::to_string(i) + " (" +
                                        std::to_string(num) + "/" + std::to_string(den) +
                                        ") exceeds the bound " + t.str());
        num_sum += num;
        den_sum += den;
    }
    if (den_sum == 0) return true;  // vacuous: empty list
    return Rational(num_sum, den_sum) <= t;
}

RatioReport ratio_report(const Graph& g) {
    require_nonempty(g, "ratio_report");
    const auto info = classify_forest(g);

    SolverResult gamma, ind;
    if (info.is_forest) {
        gamma = gamma_forest_dp(g);
        ind = i_forest_dp(g);
    } else if (g.n() <= kBruteForceCap) {
        gamma = gamma_brute(g);
        ind = i_brute(g);
    } else {
        throw std::length_error("ratio_report: no solver applies (non-forest with n > " +
                                std::to_string(kBruteForceCap) + ")");
    }

    if (!is_dominating(g, gamma.witness) || gamma.witness.size() != gamma.value)
        throw std::logic_error("ratio_report: invalid gamma witness");
    if (!is_dominating(g, ind.witness) || !is_independent(g, ind.witness) ||
        ind.witness.size() != ind.value)
        throw std::logic_error("ratio_report: invalid i witness");
    if (gamma.value > ind.value) throw std::logic_error("ratio_report: gamma > i");

    RatioReport r;
    r.n = g.n();
    r.max_degree = g.max_degree();
    r.gamma = gamma.value;
    r.ind_dom = ind.value;
    r.ratio = Rational(ind.value, gamma.value);
    r.bound = domination_ratio_bound(r.max_degree);
    r.meets_bound = r.ratio <= r.bound;
    r.equality = r.ratio == r.bound;
    r.gamma_witness = gamma.witness;
    r.i_witness = ind.witness;

    int gamma_total = 0, i_total = 0;
    bool all_components_within = true;
    std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
    for (const auto& comp : info.components) {
        int gj = 0, ij = 0;
        for (int v : comp) {
            if (gamma.witness.contains(v)) ++gj;
            if (ind.witness.contains(v)) ++ij;
        }
        r.per_component.emplace_back(gj, ij);
        gamma_total += gj;
        i_total += ij;
        pairs.emplace_back(ij, gj);
        if (Rational(ij, gj) > r.bound) all_components_within = false;
    }
    if (gamma_total != r.gamma || i_total != r.ind_dom)
        throw std::logic_error("ratio_report: per-component sums do not match totals");
    // Mediant aggregation: when every component meets the bound, the totals
    // must as well.
    if (all_components_within && !mediant_within_bound(pairs, r.bound))
        throw std::logic_error("ratio_report: mediant aggregation failed");
    return r;
}

}  // namespace domratio
