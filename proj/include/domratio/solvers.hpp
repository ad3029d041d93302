#ifndef DOMRATIO_SOLVERS_HPP
#define DOMRATIO_SOLVERS_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "domratio/graph.hpp"
#include "domratio/rational.hpp"

namespace domratio {

// Solvers accept graphs up to this order for the subset-scan oracles.
inline constexpr int kBruteForceCap = 20;

bool is_dominating(const Graph& g, const VertexSet& s);
bool is_independent(const Graph& g, const VertexSet& s);

struct SolverResult {
    int value = 0;
    VertexSet witness;
};

// Exhaustive oracles (n <= 20). Subsets are scanned by size, then by
// lexicographic rank of the ascending index tuple, so the witness is the
// lexicographically least minimum set.
SolverResult gamma_brute(const Graph& g);
SolverResult i_brute(const Graph& g);

// Linear-time forest solvers; each component is rooted at its least vertex.
SolverResult gamma_forest_dp(const Graph& g);
SolverResult i_forest_dp(const Graph& g);

struct RatioReport {
    int n = 0;
    int max_degree = 0;
    int gamma = 0;
    int ind_dom = 0;
    Rational ratio;
    Rational bound;
    bool meets_bound = false;
    bool equality = false;
    VertexSet gamma_witness;
    VertexSet i_witness;
    std::vector<std::pair<int, int>> per_component;  // (gamma_j, i_j)

    friend bool operator==(const RatioReport&, const RatioReport&) = default;
};

// Exact gamma/i with witnesses and the max(1, delta/2) bound, per-component
// totals aggregated through the mediant check. Uses the forest solvers when
// the input is a forest, the subset oracles otherwise (n <= 20).
RatioReport ratio_report(const Graph& g);

// Checked form of the mediant inequality: every numerator/denominator pair
// must already satisfy num/den <= t (violations throw, naming the pair);
// then (sum num)/(sum den) <= t holds and the function returns true.
bool mediant_within_bound(const std::vector<std::pair<std::int64_t, std::int64_t>>& pairs,
                          const Rational& t);

// 1 when max_degree <= 2 (including edgeless), max_degree/2 otherwise.
Rational domination_ratio_bound(int max_degree);

}  // namespace domratio

#endif
