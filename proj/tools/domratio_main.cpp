#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "domratio/construction.hpp"
#include "domratio/enumeration.hpp"
#include "domratio/graph.hpp"
#include "domratio/graph6.hpp"
#include "domratio/report_json.hpp"
#include "domratio/solvers.hpp"
#include "domratio/verify.hpp"

namespace {

using nlohmann::json;

// Exit contract: 0 = success / all checks pass, 1 = a mathematical check
// failed (bound violation or failed certificate), 2 = input or usage error.
constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

std::string read_source(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::vector<domratio::Graph> load_graphs(const std::string& path, const std::string& format) {
    std::vector<domratio::Graph> graphs;
    const std::string text = read_source(path);
    if (format == "edges") {
        graphs.push_back(domratio::parse_edge_list(text));
        return graphs;
    }
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        bool blank = true;
        for (char c : line)
            if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
        if (blank) continue;
        graphs.push_back(domratio::parse_graph6(line));
    }
    if (graphs.empty()) throw std::invalid_argument("no graphs in input");
    return graphs;
}

json graph6_or_null(const domratio::Graph& g) {
    if (g.n() > 62) return nullptr;
    return domratio::encode_graph6(g);
}

int cmd_solve(const std::string& path, const std::string& format) {
    for (const auto& g : load_graphs(path, format)) {
        const domratio::RatioReport report = domratio::ratio_report(g);
        json line = domratio::envelope(
            "ratio_report", json{{"graph6", graph6_or_null(g)}, {"report", to_json(report)}});
        std::cout << line.dump() << "\n";
    }
    return kExitOk;
}

int cmd_construct(const std::string& path, const std::string& format) {
    bool all_pass = true;
    for (const auto& g : load_graphs(path, format)) {
        const domratio::ConstructionRun run = domratio::run_construction_with_trace(g);
        json line = domratio::envelope("bound_certificate",
                                       json{{"graph6", graph6_or_null(g)},
                                            {"certificate", to_json(run.certificate)},
                                            {"trace", to_json(run.trace)}});
        std::cout << line.dump() << "\n";
        all_pass = all_pass && run.certificate.all_checks_pass();
    }
    return all_pass ? kExitOk : kExitViolation;
}

int cmd_verify(int n_max, int shards, int shard_id, bool list_equality, bool construct_all) {
    domratio::VerifyOptions options;
    options.shards = shards;
    options.shard_id = shard_id;
    options.construct_all = construct_all;
    options.on_case = [&](const domratio::TreeCase& c, bool is_violation) {
        if (is_violation) {
            std::cout << domratio::envelope("violation", to_json(c)).dump() << "\n";
        } else if (list_equality) {
            std::cout << domratio::envelope("equality_case", to_json(c)).dump() << "\n";
        }
    };
    const domratio::VerificationReport report = domratio::verify_trees(n_max, options);
    std::cout << domratio::envelope("verification_report", to_json(report)).dump() << "\n";
    return report.violations.empty() ? kExitOk : kExitViolation;
}

int cmd_linegraph_check(int n_max) {
    const domratio::LineGraphReport report = domratio::linegraph_check(n_max);
    for (const auto& g6 : report.counterexamples) {
        std::cout << domratio::envelope("linegraph_counterexample", json{{"graph6", g6}}).dump()
                  << "\n";
    }
    std::cout << domratio::envelope("linegraph_report", to_json(report)).dump() << "\n";
    return report.all_ratios_one ? kExitOk : kExitViolation;
}

int cmd_gen(const std::string& kind, int s) {
    if (kind != "double-star") throw std::invalid_argument("unknown generator kind: " + kind);
    std::cout << domratio::encode_graph6(domratio::balanced_double_star(s)) << "\n";
    return kExitOk;
}

int cmd_trees(int n) {
    domratio::for_each_tree(
        n, [](const domratio::Graph& g) { std::cout << domratio::encode_graph6(g) << "\n"; });
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact domination / independent domination ratios on trees and small graphs"};
    app.require_subcommand(1);

    std::string solve_path = "-", solve_format = "graph6";
    auto* solve = app.add_subcommand("solve", "Exact gamma/i ratio report per input graph");
    solve->add_option("input", solve_path, "input file or - for stdin");
    solve->add_option("--format", solve_format, "graph6 | edges")
        ->check(CLI::IsMember({"graph6", "edges"}));

    std::string construct_path = "-", construct_format = "graph6";
    auto* construct =
        app.add_subcommand("construct", "Peel a tree and certify the bound inequality chain");
    construct->add_option("input", construct_path, "input file or - for stdin");
    construct->add_option("--format", construct_format, "graph6 | edges")
        ->check(CLI::IsMember({"graph6", "edges"}));

    int verify_n_max = 0, verify_shards = 1, verify_shard_id = 0;
    bool list_equality = false, construct_all = false;
    auto* verify = app.add_subcommand("verify", "Check the ratio bound over all trees up to n-max");
    verify->add_option("--n-max", verify_n_max, "largest tree order")->required();
    verify->add_option("--shards", verify_shards, "number of residue-class shards");
    verify->add_option("--shard-id", verify_shard_id, "which shard to run");
    verify->add_flag("--list-equality", list_equality, "emit one line per equality case");
    verify->add_flag("--construct-all", construct_all,
                     "run the peeling construction on every tree, not just equality cases");

    int lg_n_max = 0;
    auto* lg = app.add_subcommand("linegraph-check",
                                  "Check gamma(L(T)) == i(L(T)) for all trees up to n-max");
    lg->add_option("--n-max", lg_n_max, "largest tree order")->required();

    std::string gen_kind;
    int gen_s = 0;
    auto* gen = app.add_subcommand("gen", "Emit a generated graph as graph6");
    gen->add_option("kind", gen_kind, "generator kind (double-star)")->required();
    gen->add_option("--s", gen_s, "leaves per center")->required();

    int trees_n = 0;
    auto* trees = app.add_subcommand("trees", "Emit all free trees of order n, one graph6 per line");
    trees->add_option("--n", trees_n, "tree order")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (solve->parsed()) return cmd_solve(solve_path, solve_format);
        if (construct->parsed()) return cmd_construct(construct_path, construct_format);
        if (verify->parsed())
            return cmd_verify(verify_n_max, verify_shards, verify_shard_id, list_equality,
                              construct_all);
        if (lg->parsed()) return cmd_linegraph_check(lg_n_max);
        if (gen->parsed()) return cmd_gen(gen_kind, gen_s);
        if (trees->parsed()) return cmd_trees(trees_n);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
