// Acceptance suite: runs every release gate and prints one PASS/FAIL line per
// criterion. Exit status is the number of failed criteria.

#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "builders.hpp"
#include "domratio/construction.hpp"
#include "domratio/enumeration.hpp"
#include "domratio/graph6.hpp"
#include "domratio/solvers.hpp"
#include "domratio/verify.hpp"
#include "prufer_oracle.hpp"

using namespace domratio;

namespace {

const std::vector<std::int64_t> kFreeTreeCounts = {
    1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159, 7741, 19320, 48629, 123867};

struct Criterion {
    std::string name;
    std::function<bool(std::string&)> run;
};

// 1. DP solvers match the subset oracles, with valid witnesses, on every tree
//    with n <= 13.
bool oracle_equivalence(std::string& detail) {
    std::int64_t checked = 0;
    bool ok = true;
    for (int n = 1; n <= 13 && ok; ++n) {
        for_each_tree(n, [&](const Graph& t) {
            if (!ok) return;
            ++checked;
            auto gb = gamma_brute(t);
            auto gd = gamma_forest_dp(t);
            auto ib = i_brute(t);
            auto id = i_forest_dp(t);
            ok = ok && gb.value == gd.value && ib.value == id.value;
            ok = ok && is_dominating(t, gd.witness) && gd.witness.size() == gd.value;
            ok = ok && is_dominating(t, id.witness) && is_independent(t, id.witness) &&
                 id.witness.size() == id.value;
            ok = ok && is_dominating(t, gb.witness) && gb.witness.size() == gb.value;
            ok = ok && is_dominating(t, ib.witness) && is_independent(t, ib.witness) &&
                 ib.witness.size() == ib.value;
        });
    }
    detail = std::to_string(checked) + " trees, exact match";
    return ok;
}

// 2. Zero bound violations across every tree with n <= 18; per-order counts
//    pinned to the free-tree sequence.
bool exhaustive_bound_check(std::string& detail) {
    VerificationReport report = verify_trees(18);
    bool counts_ok = true;
    for (int n = 1; n <= 18; ++n)
        counts_ok = counts_ok && report.per_order_counts[n - 1] == kFreeTreeCounts[n - 1];
    std::int64_t expected_total = 0;
    for (int n = 1; n <= 18; ++n) expected_total += kFreeTreeCounts[n - 1];
    std::ostringstream out;
    out << report.trees_checked << " trees (expected " << expected_total << "), "
        << report.violations.size() << " violations, " << report.equality_cases.size()
        << " equality cases, " << report.runtime_ms << " ms";
    detail = out.str();
    return report.violations.empty() && counts_ok && report.trees_checked == expected_total;
}

// 3. Balanced double stars attain the bound exactly: gamma = 2, i = s + 1,
//    max degree s + 1, and for s >= 2 the ratio equals delta/2, also for
//    disjoint unions of two copies.
bool equality_sufficiency(std::string& detail) {
    bool ok = true;
    for (int s = 1; s <= 20; ++s) {
        Graph star = balanced_double_star(s);
        RatioReport single = ratio_report(star);
        ok = ok && single.gamma == 2 && single.ind_dom == s + 1 && single.max_degree == s + 1;
        if (s >= 2) {
            ok = ok && single.ratio == Rational(s + 1, 2) && single.equality;
            RatioReport doubled = ratio_report(disjoint_union(star, star));
            ok = ok && doubled.gamma == 4 && doubled.ind_dom == 2 * (s + 1);
            ok = ok && doubled.ratio == Rational(s + 1, 2) && doubled.equality;
        }
    }
    detail = "s = 1..20 and unions of two stars, exact rational equality";
    return ok;
}

// 4. The peeling construction certifies every tree with n <= 14: all checks
//    pass and |X u I| >= i(G).
bool construction_certification(std::string& detail) {
    std::int64_t checked = 0;
    bool ok = true;
    for (int n = 1; n <= 14 && ok; ++n) {
        for_each_tree(n, [&](const Graph& t) {
            if (!ok) return;
            ++checked;
            ConstructionRun run = run_construction_with_trace(t);
            ok = ok && run.certificate.all_checks_pass();
            ok = ok && run.certificate.i_exact <= run.certificate.i_upper;
        });
    }
    detail = std::to_string(checked) + " trees certified, zero failures";
    return ok;
}

// 5. Enumeration counts match the free-tree sequence for n = 1..16; up to
//    n = 10 the emitted isomorphism classes coincide with the independent
//    Pruefer dedup oracle's classes exactly.
bool enumeration_counts(std::string& detail) {
    bool ok = true;
    for (int n = 1; n <= 16; ++n) ok = ok && count_trees(n) == kFreeTreeCounts[n - 1];
    for (int n = 1; n <= 10 && ok; ++n) {
        testsupport::PruferOracle oracle(n);
        const auto expected = oracle.all_codes();
        std::unordered_set<std::uint64_t> emitted;
        for_each_tree(n, [&](const Graph& g) { emitted.insert(oracle.canonical_code(g.edges())); });
        ok = expected == emitted &&
             static_cast<std::int64_t>(emitted.size()) == kFreeTreeCounts[n - 1];
    }
    detail = "sequence match n = 1..16, oracle class match n = 1..10";
    return ok;
}

// 6. gamma(L(T)) == i(L(T)) for every tree with n <= 9.
bool linegraph_regression(std::string& detail) {
    LineGraphReport report = linegraph_check(9);
    std::ostringstream out;
    out << report.trees_checked << " trees, " << report.counterexamples.size()
        << " counterexamples, " << report.runtime_ms << " ms";
    detail = out.str();
    return report.all_ratios_one && report.trees_checked == 94;
}

// 7. Mediant property: 10,000 random positive ratio lists below a bound never
//    aggregate above it.
bool mediant_property(std::string& detail) {
    std::mt19937 rng(160421);
    bool ok = true;
    for (int t = 0; t < 10000 && ok; ++t) {
        const int tn = std::uniform_int_distribution<int>(1, 60)(rng);
        const int td = std::uniform_int_distribution<int>(1, 60)(rng);
        Rational bound(tn, td);
        std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
        const int count = std::uniform_int_distribution<int>(1, 10)(rng);
        for (int p = 0; p < count; ++p) {
            std::int64_t den = std::uniform_int_distribution<int>(1, 1000)(rng);
            std::int64_t max_num = den * tn / td;
            if (max_num < 1) {
                den = td;
                max_num = tn;
            }
            pairs.emplace_back(std::uniform_int_distribution<std::int64_t>(1, max_num)(rng), den);
        }
        ok = mediant_within_bound(pairs, bound);
    }
    detail = "10000 randomized instances";
    return ok;
}

// 8. graph6 codec: fixed vectors plus 10,000 random graphs round-trip
//    bit-exactly.
bool graph6_codec(std::string& detail) {
    bool ok = parse_graph6("@") == Graph::from_edges(1, {});
    ok = ok && parse_graph6("A_") == Graph::from_edges(2, {{0, 1}});
    ok = ok && parse_graph6("C~") == testsupport::complete_graph(4);
    std::mt19937 rng(987654321);
    for (int t = 0; t < 10000 && ok; ++t) {
        const int n = std::uniform_int_distribution<int>(1, 62)(rng);
        std::bernoulli_distribution flip(std::uniform_real_distribution<double>(0, 1)(rng));
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (flip(rng)) edges.emplace_back(i, j);
        Graph g = Graph::from_edges(n, edges);
        const std::string bytes = encode_graph6(g);
        ok = parse_graph6(bytes) == g && encode_graph6(parse_graph6(bytes)) == bytes;
    }
    detail = "fixed vectors and 10000 random graphs";
    return ok;
}

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {"oracle equivalence (forest dp vs subset oracle, n <= 13)", oracle_equivalence},
        {"exhaustive ratio bound check (all trees, n <= 18)", exhaustive_bound_check},
        {"balanced double stars attain the bound (s = 1..20)", equality_sufficiency},
        {"peeling construction certifies all trees (n <= 14)", construction_certification},
        {"free-tree counts (sequence n <= 16, Pruefer oracle n <= 10)", enumeration_counts},
        {"line-graph regression gamma = i (n <= 9)", linegraph_regression},
        {"mediant aggregation property (10000 instances)", mediant_property},
        {"graph6 codec round trip (10000 graphs)", graph6_codec},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool passed = false;
        try {
            passed = criteria[i].run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
        std::cout << (passed ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": "
                  << criteria[i].name << " [" << detail << "] (" << ms << " ms)" << std::endl;
        if (!passed) ++failures;
    }
    if (failures == 0) {
        std::cout << "all " << criteria.size() << " acceptance criteria passed" << std::endl;
    } else {
        std::cout << failures << " acceptance criteria FAILED" << std::endl;
    }
    return failures;
}
