#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "domratio/construction.hpp"
#include "domratio/enumeration.hpp"
#include "domratio/graph.hpp"
#include "domratio/graph6.hpp"
#include "domratio/report_json.hpp"
#include "domratio/solvers.hpp"
#include "domratio/verify.hpp"

namespace py = pybind11;
using namespace domratio;

namespace {

VertexSet make_set(const Graph& g, const std::vector<int>& members) {
    return VertexSet(g.n(), members);
}

py::tuple solver_tuple(const SolverResult& r) {
    return py::make_tuple(r.value, r.witness.values());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact domination / independent domination ratios on trees and small graphs";

    py::class_<Graph>(m, "Graph")
        .def_property_readonly("n", &Graph::n)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def("edges", &Graph::edges)
        .def("neighbors", [](const Graph& g, int v) { return g.neighbors(v); })
        .def("degree", &Graph::degree)
        .def_property_readonly("max_degree", &Graph::max_degree)
        .def("has_edge", &Graph::has_edge)
        .def("to_graph6", [](const Graph& g) { return encode_graph6(g); })
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.n()) +
                   ", edges=" + std::to_string(g.edge_count()) + ")";
        });

    py::class_<ForestInfo>(m, "ForestInfo")
        .def_readonly("is_forest", &ForestInfo::is_forest)
        .def_readonly("is_tree", &ForestInfo::is_tree)
        .def_property_readonly("components", [](const ForestInfo& f) {
            std::vector<std::vector<int>> out;
            for (const auto& c : f.components) out.push_back(c.values());
            return out;
        });

    py::class_<Rational>(m, "Rational")
        .def(py::init<std::int64_t, std::int64_t>())
        .def_property_readonly("num", &Rational::num)
        .def_property_readonly("den", &Rational::den)
        .def("__eq__", [](const Rational& a, const Rational& b) { return a == b; })
        .def("__le__", [](const Rational& a, const Rational& b) { return a <= b; })
        .def("__lt__", [](const Rational& a, const Rational& b) { return a < b; })
        .def("__str__", &Rational::str)
        .def("__repr__", [](const Rational& r) { return "Rational(" + r.str() + ")"; });

    py::class_<RatioReport>(m, "RatioReport")
        .def_readonly("n", &RatioReport::n)
        .def_readonly("max_degree", &RatioReport::max_degree)
        .def_readonly("gamma", &RatioReport::gamma)
        .def_readonly("i", &RatioReport::ind_dom)
        .def_readonly("ratio", &RatioReport::ratio)
        .def_readonly("bound", &RatioReport::bound)
        .def_readonly("meets_bound", &RatioReport::meets_bound)
        .def_readonly("equality", &RatioReport::equality)
        .def_property_readonly("gamma_witness",
                               [](const RatioReport& r) { return r.gamma_witness.values(); })
        .def_property_readonly("i_witness",
                               [](const RatioReport& r) { return r.i_witness.values(); })
        .def_readonly("per_component", &RatioReport::per_component)
        .def("to_json", [](const RatioReport& r) { return to_json(r).dump(); });

    py::class_<PeelingStep>(m, "PeelingStep")
        .def_readonly("index", &PeelingStep::index)
        .def_readonly("x", &PeelingStep::x)
        .def_readonly("deg", &PeelingStep::deg)
        .def_property_readonly("block", [](const PeelingStep& s) { return s.block.values(); });

    py::class_<PeelingTrace>(m, "PeelingTrace")
        .def_readonly("steps", &PeelingTrace::steps)
        .def_readonly("k", &PeelingTrace::k)
        .def_property_readonly("x", [](const PeelingTrace& t) { return t.x.values(); })
        .def_property_readonly("d", [](const PeelingTrace& t) { return t.d.values(); });

    py::class_<CertificateCheck>(m, "CertificateCheck")
        .def_readonly("name", &CertificateCheck::name)
        .def_readonly("passed", &CertificateCheck::passed);

    py::class_<BoundCertificate>(m, "BoundCertificate")
        .def_readonly("delta", &BoundCertificate::delta)
        .def_readonly("gamma", &BoundCertificate::gamma)
        .def_readonly("k", &BoundCertificate::k)
        .def_readonly("degree_sum", &BoundCertificate::degree_sum)
        .def_property_readonly("x", [](const BoundCertificate& c) { return c.x.values(); })
        .def_property_readonly("i_set", [](const BoundCertificate& c) { return c.i_set.values(); })
        .def_readonly("i_exact", &BoundCertificate::i_exact)
        .def_readonly("i_upper", &BoundCertificate::i_upper)
        .def_readonly("eq1_rhs", &BoundCertificate::eq1_rhs)
        .def_readonly("final_rhs", &BoundCertificate::final_rhs)
        .def_readonly("half_bound", &BoundCertificate::half_bound)
        .def_readonly("checks", &BoundCertificate::checks)
        .def("all_checks_pass", &BoundCertificate::all_checks_pass)
        .def("to_json", [](const BoundCertificate& c) { return to_json(c).dump(); });

    py::class_<ConstructionRun>(m, "ConstructionRun")
        .def_readonly("trace", &ConstructionRun::trace)
        .def_property_readonly("i_set",
                               [](const ConstructionRun& r) { return r.i_set.values(); })
        .def_readonly("certificate", &ConstructionRun::certificate);

    py::class_<TreeCase>(m, "TreeCase")
        .def_readonly("n", &TreeCase::n)
        .def_readonly("index", &TreeCase::index)
        .def_readonly("graph6", &TreeCase::graph6)
        .def_readonly("report", &TreeCase::report)
        .def_readonly("balanced_double_star", &TreeCase::balanced_double_star)
        .def_readonly("construction_checked", &TreeCase::construction_checked)
        .def_readonly("construction_all_checks", &TreeCase::construction_all_checks);

    py::class_<VerificationReport>(m, "VerificationReport")
        .def_readonly("n_min", &VerificationReport::n_min)
        .def_readonly("n_max", &VerificationReport::n_max)
        .def_readonly("trees_checked", &VerificationReport::trees_checked)
        .def_readonly("per_order_counts", &VerificationReport::per_order_counts)
        .def_readonly("violations", &VerificationReport::violations)
        .def_readonly("equality_cases", &VerificationReport::equality_cases)
        .def_readonly("runtime_ms", &VerificationReport::runtime_ms)
        .def_readonly("shards", &VerificationReport::shards)
        .def_readonly("shard_id", &VerificationReport::shard_id)
        .def("to_json", [](const VerificationReport& r) { return to_json(r).dump(); });

    py::class_<LineGraphReport>(m, "LineGraphReport")
        .def_readonly("n_min", &LineGraphReport::n_min)
        .def_readonly("n_max", &LineGraphReport::n_max)
        .def_readonly("trees_checked", &LineGraphReport::trees_checked)
        .def_readonly("all_ratios_one", &LineGraphReport::all_ratios_one)
        .def_readonly("counterexamples", &LineGraphReport::counterexamples)
        .def_readonly("runtime_ms", &LineGraphReport::runtime_ms)
        .def("to_json", [](const LineGraphReport& r) { return to_json(r).dump(); });

    py::class_<TreeStream>(m, "TreeStream")
        .def(py::init<int>(), py::arg("n"))
        .def_property_readonly("n", &TreeStream::n)
        .def_property_readonly("produced", &TreeStream::produced)
        .def("__iter__", [](TreeStream& s) -> TreeStream& { return s; })
        .def("__next__", [](TreeStream& s) {
            auto g = s.next();
            if (!g) throw py::stop_iteration();
            return *g;
        });

    m.def("from_edges", &Graph::from_edges, py::arg("n"), py::arg("edges"));
    m.def("parse_graph6", [](const std::string& s) { return parse_graph6(s); });
    m.def("encode_graph6", &encode_graph6);
    m.def("parse_edge_list", &parse_edge_list);
    m.def("classify_forest", &classify_forest);
    m.def("balanced_double_star", &balanced_double_star, py::arg("s"));
    m.def("is_balanced_double_star", &is_balanced_double_star);
    m.def("line_graph", [](const Graph& g) {
        auto r = line_graph(g);
        return py::make_tuple(r.graph, r.vertex_to_edge);
    });
    m.def("disjoint_union", &disjoint_union);

    m.def("is_dominating", [](const Graph& g, const std::vector<int>& s) {
        return is_dominating(g, make_set(g, s));
    });
    m.def("is_independent", [](const Graph& g, const std::vector<int>& s) {
        return is_independent(g, make_set(g, s));
    });
    m.def("gamma_brute", [](const Graph& g) { return solver_tuple(gamma_brute(g)); });
    m.def("i_brute", [](const Graph& g) { return solver_tuple(i_brute(g)); });
    m.def("gamma_forest_dp", [](const Graph& g) { return solver_tuple(gamma_forest_dp(g)); });
    m.def("i_forest_dp", [](const Graph& g) { return solver_tuple(i_forest_dp(g)); });
    m.def("ratio_report", &ratio_report);
    m.def("mediant_within_bound",
          [](const std::vector<std::pair<std::int64_t, std::int64_t>>& pairs, const Rational& t) {
              return mediant_within_bound(pairs, t);
          });

    m.def("peel",
          [](const Graph& g, const std::vector<int>& d) { return peel(g, make_set(g, d)); });
    m.def("extend_to_independent_dominating", [](const Graph& g, const std::vector<int>& x) {
        return extend_to_independent_dominating(g, make_set(g, x)).values();
    });
    m.def("certify", [](const Graph& g, const PeelingTrace& t, const std::vector<int>& i_set) {
        return certify(g, t, make_set(g, i_set));
    });
    m.def("run_construction", &run_construction);
    m.def("run_construction_with_trace", &run_construction_with_trace);

    m.def("count_trees", &count_trees, py::arg("n"));
    m.def("count_rooted_trees", &count_rooted_trees, py::arg("n"));
    m.def("enumerate_trees", [](int n) {
        std::vector<Graph> out;
        for_each_tree(n, [&](const Graph& g) { out.push_back(g); });
        return out;
    });

    m.def(
        "verify_trees",
        [](int n_max, int shards, int shard_id, int workers, bool construct_all) {
            VerifyOptions options;
            options.shards = shards;
            options.shard_id = shard_id;
            options.workers = workers;
            options.construct_all = construct_all;
            return verify_trees(n_max, options);
        },
        py::arg("n_max"), py::arg("shards") = 1, py::arg("shard_id") = 0, py::arg("workers") = 0,
        py::arg("construct_all") = false);
    m.def("merge_verification_reports", &merge_verification_reports);
    m.def("linegraph_check", &linegraph_check, py::arg("n_max"), py::arg("workers") = 0);

    m.attr("BRUTE_FORCE_CAP") = kBruteForceCap;
    m.attr("ENUMERATION_CAP") = kEnumerationCap;
    m.attr("SCHEMA_VERSION") = kSchemaVersion;
#ifdef VERSION_INFO
    m.attr("__version__") = VERSION_INFO;
#else
    m.attr("__version__") = "0.1.0";
#endif
}
