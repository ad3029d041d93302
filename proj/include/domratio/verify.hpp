#ifndef DOMRATIO_VERIFY_HPP
#define DOMRATIO_VERIFY_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "domratio/solvers.hpp"

namespace domratio {

// Worker-count override; defaults to hardware concurrency clamped to [1,8].
inline constexpr const char* kWorkersEnvVar = "DOMRATIO_WORKERS";

struct TreeCase {
    int n = 0;
    std::int64_t index = 0;  // position within the order-n stream
    std::string graph6;
    RatioReport report;
    bool balanced_double_star = false;
    // Filled for equality cases: the peeling construction re-run on the tree.
    bool construction_checked = false;
    bool construction_all_checks = false;

    friend bool operator==(const TreeCase&, const TreeCase&) = default;
};

struct VerificationReport {
    int n_min = 1;
    int n_max = 0;
    std::int64_t trees_checked = 0;
    std::vector<std::int64_t> per_order_counts;  // per_order_counts[i] = trees of order n_min+i checked
    std::vector<TreeCase> violations;
    std::vector<TreeCase> equality_cases;  // ratio == bound with max degree >= 3
    std::int64_t runtime_ms = 0;
    int shards = 1;
    int shard_id = 0;

    friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

struct LineGraphReport {
    int n_min = 2;
    int n_max = 0;
    std::int64_t trees_checked = 0;
    bool all_ratios_one = false;
    std::vector<std::string> counterexamples;
    std::int64_t runtime_ms = 0;

    friend bool operator==(const LineGraphReport&, const LineGraphReport&) = default;
};

struct VerifyOptions {
    int shards = 1;
    int shard_id = 0;
    int workers = 0;  // 0 = env var / hardware default
    bool construct_all = false;  // run the peeling construction on every tree
    // Streaming hook, called in enumeration order (violations and equality cases only).
    std::function<void(const TreeCase&, bool is_violation)> on_case;
};

// Ratio check over every enumerated tree of order 1..n_max (restricted to a
// residue-class shard when shards > 1). Equality cases are re-certified with
// the peeling construction.
VerificationReport verify_trees(int n_max, const VerifyOptions& options = {});

// Per-order counts and case lists of shard runs combined into the report a
// single run over the union would produce. Inputs must cover the same n_max.
VerificationReport merge_verification_reports(const std::vector<VerificationReport>& parts);

// gamma(L(T)) == i(L(T)) for every tree with 2 <= n <= n_max (brute force on
// the line graphs).
LineGraphReport linegraph_check(int n_max, int workers = 0);

int resolve_worker_count(int requested);

}  // namespace domratio

#endif
