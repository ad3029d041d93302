#include "domratio/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <thread>

#include "domratio/construction.hpp"
#include "domratio/enumeration.hpp"
#include "domratio/graph6.hpp"

namespace domratio {

namespace {

constexpr std::size_t kBatchSize = 1024;

// Strided batch execution; results are indexed, so emission order never
// depends on the worker count.
template <typename Work>
void parallel_indices(int workers, std::size_t count, Work work) {
    if (workers <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) work(i);
        return;
    }
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        threads.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < count; i += workers) work(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        });
    }
    for (auto& t : threads) t.join();
    if (failure) std::rethrow_exception(failure);
}

struct TreeOutcome {
    bool violation = false;
    bool equality = false;
    std::optional<TreeCase> tree_case;
};

TreeOutcome examine_tree(const Graph& g, int n, std::int64_t index, bool construct_all) {
    TreeOutcome out;
    const RatioReport report = ratio_report(g);
    out.equality = report.equality && report.max_degree >= 3;
    out.violation = !report.meets_bound;

    bool construction_checked = false;
    bool construction_ok = false;
    if (construct_all || out.equality) {
        const BoundCertificate cert = run_construction(g);
        construction_checked = true;
        construction_ok = cert.all_checks_pass();
        if (!construction_ok) out.violation = true;
    }
    if (out.violation || out.equality) {
        TreeCase c;
        c.n = n;
        c.index = index;
        c.graph6 = encode_graph6(g);
        c.report = report;
        c.balanced_double_star = is_balanced_double_star(g);
        c.construction_checked = construction_checked;
        c.construction_all_checks = construction_ok;
        out.tree_case = std::move(c);
    }
    return out;
}

}  // namespace

int resolve_worker_count(int requested) {
    if (requested > 0) return std::min(requested, 64);
    if (const char* env = std::getenv(kWorkersEnvVar)) {
        const int v = std::atoi(env);
        if (v > 0) return std::min(v, 64);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return static_cast<int>(std::clamp(hw, 1u, 8u));
}

VerificationReport verify_trees(int n_max, const VerifyOptions& options) {
    if (n_max < 1 || n_max > kEnumerationCap)
        throw std::invalid_argument("verify: n_max must be in 1.." +
                                    std::to_string(kEnumerationCap));
    if (options.shards < 1) throw std::invalid_argument("verify: shards must be >= 1");
    if (options.shard_id < 0 || options.shard_id >= options.shards)
        throw std::invalid_argument("verify: shard id out of range");
    const int workers = resolve_worker_count(options.workers);

    const auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    report.n_max = n_max;
    report.shards = options.shards;
    report.shard_id = options.shard_id;
    report.per_order_counts.assign(n_max, 0);

    std::int64_t global_index = 0;
    for (int n = 1; n <= n_max; ++n) {
        TreeStream stream(n);
        std::int64_t order_index = 0;
        bool done = false;
        while (!done) {
            std::vector<std::pair<std::int64_t, Graph>> batch;
            batch.reserve(kBatchSize);
            while (batch.size() < kBatchSize) {
                auto g = stream.next();
                if (!g) {
                    done = true;
                    break;
                }
                const std::int64_t idx = order_index++;
                if (global_index++ % options.shards ==
                    options.shard_id) {
                    batch.emplace_back(idx, std::move(*g));
                }
            }
            std::vector<TreeOutcome> outcomes(batch.size());
            parallel_indices(workers, batch.size(), [&](std::size_t i) {
                outcomes[i] =
                    examine_tree(batch[i].second, n, batch[i].first, options.construct_all);
            });
            for (auto& outcome : outcomes) {
                ++report.trees_checked;
                ++report.per_order_counts[n - 1];
                if (!outcome.tree_case) continue;
                if (options.on_case) options.on_case(*outcome.tree_case, outcome.violation);
                if (outcome.violation) report.violations.push_back(*outcome.tree_case);
                if (outcome.equality) report.equality_cases.push_back(std::move(*outcome.tree_case));
            }
        }
    }
    report.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    return report;
}

VerificationReport merge_verification_reports(const std::vector<VerificationReport>& parts) {
    if (parts.empty()) throw std::invalid_argument("merge: no reports");
    VerificationReport merged;
    merged.n_min = parts.front().n_min;
    merged.n_max = parts.front().n_max;
    merged.per_order_counts.assign(parts.front().per_order_counts.size(), 0);
    for (const auto& part : parts) {
        if (part.n_min != merged.n_min || part.n_max != merged.n_max)
            throw std::invalid_argument("merge: order ranges differ");
        merged.trees_checked += part.trees_checked;
        for (std::size_t i = 0; i < merged.per_order_counts.size(); ++i)
            merged.per_order_counts[i] += part.per_order_counts[i];
        merged.violations.insert(merged.violations.end(), part.violations.begin(),
                                 part.violations.end());
        merged.equality_cases.insert(merged.equality_cases.end(), part.equality_cases.begin(),
                                     part.equality_cases.end());
        merged.runtime_ms = std::max(merged.runtime_ms, part.runtime_ms);
    }
    auto by_position = [](const TreeCase& a, const TreeCase& b) {
        return a.n != b.n ? a.n < b.n : a.index < b.index;
    };
    std::sort(merged.violations.begin(), merged.violations.end(), by_position);
    std::sort(merged.equality_cases.begin(), merged.equality_cases.end(), by_position);
    return merged;
}

LineGraphReport linegraph_check(int n_max, int workers) {
    if (n_max < 2 || n_max > 12)
        throw std::invalid_argument("linegraph check: n_max must be in 2..12");
    const int worker_count = resolve_worker_count(workers);
    const auto start = std::chrono::steady_clock::now();

    LineGraphReport report;
    report.n_max = n_max;
    for (int n = 2; n <= n_max; ++n) {
        std::vector<Graph> trees;
        for_each_tree(n, [&](const Graph& g) { trees.push_back(g); });
        std::vector<char> ratio_one(trees.size(), 0);
        parallel_indices(worker_count, trees.size(), [&](std::size_t i) {
            const Graph l = line_graph(trees[i]).graph;
            ratio_one[i] = gamma_brute(l).value == i_brute(l).value ? 1 : 0;
        });
        for (std::size_t i = 0; i < trees.size(); ++i) {
            ++report.trees_checked;
            if (!ratio_one[i]) report.counterexamples.push_back(encode_graph6(trees[i]));
        }
    }
    report.all_ratios_one = report.counterexamples.empty();
    report.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    return report;
}

}  // namespace domratio
