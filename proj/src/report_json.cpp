#include "domratio/report_json.hpp"

namespace domratio {

using nlohmann::json;

namespace {

json set_to_json(const VertexSet& s) { return json(s.values()); }

VertexSet set_from_json(const json& j, int ground) {
    return VertexSet(ground, j.get<std::vector<int>>());
}

}  // namespace

json to_json(const Rational& r) { return json{{"num", r.num()}, {"den", r.den()}}; }

Rational rational_from_json(const json& j) {
    return Rational(j.at("num").get<std::int64_t>(), j.at("den").get<std::int64_t>());
}

json to_json(const RatioReport& r) {
    json components = json::array();
    for (auto [gamma_j, i_j] : r.per_component)
        components.push_back(json{{"gamma", gamma_j}, {"i", i_j}});
    return json{{"n", r.n},
                {"max_degree", r.max_degree},
                {"gamma", r.gamma},
                {"i", r.ind_dom},
                {"ratio", to_json(r.ratio)},
                {"bound", to_json(r.bound)},
                {"meets_bound", r.meets_bound},
                {"equality", r.equality},
                {"gamma_witness", set_to_json(r.gamma_witness)},
                {"i_witness", set_to_json(r.i_witness)},
                {"per_component", components}};
}

RatioReport ratio_report_from_json(const json& j) {
    RatioReport r;
    r.n = j.at("n").get<int>();
    r.max_degree = j.at("max_degree").get<int>();
    r.gamma = j.at("gamma").get<int>();
    r.ind_dom = j.at("i").get<int>();
    r.ratio = rational_from_json(j.at("ratio"));
    r.bound = rational_from_json(j.at("bound"));
    r.meets_bound = j.at("meets_bound").get<bool>();
    r.equality = j.at("equality").get<bool>();
    r.gamma_witness = set_from_json(j.at("gamma_witness"), r.n);
    r.i_witness = set_from_json(j.at("i_witness"), r.n);
    for (const auto& c : j.at("per_component"))
        r.per_component.emplace_back(c.at("gamma").get<int>(), c.at("i").get<int>());
    return r;
}

json to_json(const PeelingStep& s) {
    return json{{"index", s.index}, {"x", s.x}, {"deg", s.deg}, {"block", set_to_json(s.block)}};
}

json to_json(const PeelingTrace& t) {
    json steps = json::array();
    for (const auto& s : t.steps) steps.push_back(to_json(s));
    return json{{"n", t.d.ground_size()},
                {"k", t.k},
                {"steps", steps},
                {"x", set_to_json(t.x)},
                {"d", set_to_json(t.d)}};
}

PeelingTrace trace_from_json(const json& j) {
    PeelingTrace t;
    const int n = j.at("n").get<int>();
    t.k = j.at("k").get<int>();
    t.x = set_from_json(j.at("x"), n);
    t.d = set_from_json(j.at("d"), n);
    for (const auto& sj : j.at("steps")) {
        PeelingStep s;
        s.index = sj.at("index").get<int>();
        s.x = sj.at("x").get<int>();
        s.deg = sj.at("deg").get<int>();
        s.block = set_from_json(sj.at("block"), n);
        t.steps.push_back(std::move(s));
    }
    return t;
}

json to_json(const BoundCertificate& c) {
    json checks = json::array();
    for (const auto& check : c.checks)
        checks.push_back(json{{"name", check.name}, {"passed", check.passed}});
    return json{{"n", c.x.ground_size()},
                {"delta", c.delta},
                {"gamma", c.gamma},
                {"k", c.k},
                {"degree_sum", c.degree_sum},
                {"x", set_to_json(c.x)},
                {"i_set", set_to_json(c.i_set)},
                {"i_exact", c.i_exact},
                {"i_upper", c.i_upper},
                {"eq1_rhs", c.eq1_rhs},
                {"final_rhs", to_json(c.final_rhs)},
                {"half_bound", to_json(c.half_bound)},
                {"checks", checks},
                {"all_checks_pass", c.all_checks_pass()}};
}

BoundCertificate certificate_from_json(const json& j) {
    BoundCertificate c;
    const int n = j.at("n").get<int>();
    c.delta = j.at("delta").get<int>();
    c.gamma = j.at("gamma").get<int>();
    c.k = j.at("k").get<int>();
    c.degree_sum = j.at("degree_sum").get<int>();
    c.x = set_from_json(j.at("x"), n);
    c.i_set = set_from_json(j.at("i_set"), n);
    c.i_exact = j.at("i_exact").get<int>();
    c.i_upper = j.at("i_upper").get<int>();
    c.eq1_rhs = j.at("eq1_rhs").get<long long>();
    c.final_rhs = rational_from_json(j.at("final_rhs"));
    c.half_bound = rational_from_json(j.at("half_bound"));
    for (const auto& cj : j.at("checks"))
        c.checks.push_back(
            CertificateCheck{cj.at("name").get<std::string>(), cj.at("passed").get<bool>()});
    return c;
}

json to_json(const TreeCase& c) {
    return json{{"n", c.n},
                {"index", c.index},
                {"graph6", c.graph6},
                {"report", to_json(c.report)},
                {"balanced_double_star", c.balanced_double_star},
                {"construction_checked", c.construction_checked},
                {"construction_all_checks", c.construction_all_checks}};
}

TreeCase tree_case_from_json(const json& j) {
    TreeCase c;
    c.n = j.at("n").get<int>();
    c.index = j.at("index").get<std::int64_t>();
    c.graph6 = j.at("graph6").get<std::string>();
    c.report = ratio_report_from_json(j.at("report"));
    c.balanced_double_star = j.at("balanced_double_star").get<bool>();
    c.construction_checked = j.at("construction_checked").get<bool>();
    c.construction_all_checks = j.at("construction_all_checks").get<bool>();
    return c;
}

json to_json(const VerificationReport& r) {
    json violations = json::array();
    for (const auto& v : r.violations) violations.push_back(to_json(v));
    json equalities = json::array();
    for (const auto& e : r.equality_cases) equalities.push_back(to_json(e));
    return json{{"n_min", r.n_min},
                {"n_max", r.n_max},
                {"trees_checked", r.trees_checked},
                {"per_order_counts", r.per_order_counts},
                {"violations", violations},
                {"equality_cases", equalities},
                {"runtime_ms", r.runtime_ms},
                {"shards", r.shards},
                {"shard_id", r.shard_id}};
}

VerificationReport verification_report_from_json(const json& j) {
    VerificationReport r;
    r.n_min = j.at("n_min").get<int>();
    r.n_max = j.at("n_max").get<int>();
    r.trees_checked = j.at("trees_checked").get<std::int64_t>();
    r.per_order_counts = j.at("per_order_counts").get<std::vector<std::int64_t>>();
    for (const auto& v : j.at("violations")) r.violations.push_back(tree_case_from_json(v));
    for (const auto& e : j.at("equality_cases")) r.equality_cases.push_back(tree_case_from_json(e));
    r.runtime_ms = j.at("runtime_ms").get<std::int64_t>();
    r.shards = j.at("shards").get<int>();
    r.shard_id = j.at("shard_id").get<int>();
    return r;
}

json to_json(const LineGraphReport& r) {
    return json{{"n_min", r.n_min},
                {"n_max", r.n_max},
                {"trees_checked", r.trees_checked},
                {"all_ratios_one", r.all_ratios_one},
                {"counterexamples", r.counterexamples},
                {"runtime_ms", r.runtime_ms}};
}

LineGraphReport linegraph_report_from_json(const json& j) {
    LineGraphReport r;
    r.n_min = j.at("n_min").get<int>();
    r.n_max = j.at("n_max").get<int>();
    r.trees_checked = j.at("trees_checked").get<std::int64_t>();
    r.all_ratios_one = j.at("all_ratios_one").get<bool>();
    r.counterexamples = j.at("counterexamples").get<std::vector<std::string>>();
    r.runtime_ms = j.at("runtime_ms").get<std::int64_t>();
    return r;
}

json envelope(const std::string& type, json body) {
    body["schema_version"] = kSchemaVersion;
    body["type"] = type;
    return body;
}

}  // namespace domratio
