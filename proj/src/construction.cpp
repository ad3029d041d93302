#include "domratio/construction.hpp"

#include <algorithm>
#include <stdexcept>

#include "domratio/solvers.hpp"

namespace domratio {

bool BoundCertificate::all_checks_pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CertificateCheck& c) { return c.passed; });
}

PeelingTrace peel(const Graph& g, const VertexSet& d) {
    if (!classify_forest(g).is_tree) throw std::invalid_argument("peel: input is not a tree");
    if (!is_dominating(g, d)) throw std::invalid_argument("peel: set is not dominating");
    if (d.size() != gamma_forest_dp(g).value)
        throw std::invalid_argument("peel: set is not a minimum dominating set");

    // Peel the induced forest G[D]; degrees are tracked over the surviving
    // vertices only.
    const auto sub = induced_subgraph(g, d);
    const int m = sub.graph.n();
    std::vector<char> alive(m, 1);
    std::vector<int> deg(m);
    for (int v = 0; v < m; ++v) deg[v] = sub.graph.degree(v);

    PeelingTrace trace;
    trace.d = d;
    std::vector<int> x_members;
    int remaining = m;
    while (remaining > 0) {
        int best = -1;
        for (int v = 0; v < m; ++v) {
            if (!alive[v] || deg[v] > 1) continue;
            if (best < 0 || deg[v] < deg[best]) best = v;  // degree 0 first, then least index
        }
        if (best < 0) throw std::logic_error("peel: no vertex of degree <= 1 in induced forest");

        PeelingStep step;
        step.index = static_cast<int>(trace.steps.size()) + 1;
        step.x = sub.to_parent[best];
        step.deg = deg[best];
        std::vector<int> block{sub.to_parent[best]};
        alive[best] = 0;
        --remaining;
        for (int w : sub.graph.neighbors(best)) {
            if (!alive[w]) continue;
            block.push_back(sub.to_parent[w]);
            alive[w] = 0;
            --remaining;
            for (int u : sub.graph.neighbors(w))
                if (alive[u]) --deg[u];
        }
        step.block = VertexSet(g.n(), block);
        x_members.push_back(step.x);
        trace.steps.push_back(std::move(step));
    }
    trace.k = static_cast<int>(trace.steps.size());
    trace.x = VertexSet(g.n(), x_members);
    return trace;
}

VertexSet extend_to_independent_dominating(const Graph& g, const VertexSet& x) {
    if (!is_independent(g, x))
        throw std::invalid_argument("extend: base set is not independent");
    std::vector<char> in_set(g.n(), 0);
    for (int v : x) in_set[v] = 1;
    std::vector<int> added;
    for (int v = 0; v < g.n(); ++v) {
        if (in_set[v]) continue;
        bool blocked = false;
        for (int w : g.neighbors(v)) {
            if (in_set[w]) {
                blocked = true;
                break;
            }
        }
        if (!blocked) {
            in_set[v] = 1;
            added.push_back(v);
        }
    }
    return VertexSet(g.n(), added);
}

BoundCertificate certify(const Graph& g, const PeelingTrace& trace, const VertexSet& i_set) {
    BoundCertificate cert;
    cert.delta = g.max_degree();
    cert.gamma = trace.d.size();
    cert.k = trace.k;
    cert.x = trace.x;
    cert.i_set = i_set;
    cert.i_upper = trace.x.size() + i_set.size();

    long long degree_sum = 0, degree_sq_sum = 0;
    bool degrees_ok = trace.k == static_cast<int>(trace.steps.size());
    int block_total = 0;
    VertexSet block_union(g.n());
    bool disjoint = true;
    for (const auto& step : trace.steps) {
        degrees_ok = degrees_ok && (step.deg == 0 || step.deg == 1) &&
                     step.block.size() == step.deg + 1 && step.block.contains(step.x);
        degree_sum += step.deg;
        degree_sq_sum += static_cast<long long>(step.deg) * step.deg;
        block_total += step.block.size();
        for (int v : step.block) {
            if (block_union.contains(v)) disjoint = false;
        }
        block_union = block_union.union_with(step.block);
    }
    cert.degree_sum = static_cast<int>(degree_sum);

    cert.eq1_rhs = static_cast<long long>(cert.gamma - cert.k) * cert.delta - degree_sq_sum;
    cert.final_rhs = Rational(static_cast<long long>(cert.delta) * cert.gamma -
                              (static_cast<long long>(cert.k) * (cert.delta - 1) + degree_sq_sum));
    cert.half_bound = Rational(static_cast<long long>(cert.delta) * cert.gamma, 2);

    const VertexSet xi = trace.x.union_with(i_set);
    const SolverResult exact = classify_forest(g).is_forest
                                   ? i_forest_dp(g)
                                   : i_brute(g);
    cert.i_exact = exact.value;

    auto check = [&cert](const std::string& name, bool value) {
        cert.checks.push_back(CertificateCheck{name, value});
    };
    check("blocks_partition_d",
          disjoint && block_total == cert.gamma && block_union == trace.d);
    check("step_degrees_valid", degrees_ok);
    check("x_independent", is_independent(g, trace.x));
    check("xi_independent", is_independent(g, xi));
    check("xi_dominating", is_dominating(g, xi));
    check("eq1_i_bounded", i_set.size() <= cert.eq1_rhs);
    check("chain_i_upper_le_final", Rational(cert.i_upper) <= cert.final_rhs);
    if (cert.delta >= 2) {
        // (1 - delta/2) * (degree_sum - k) >= 0, the sign form of the final step.
        const Rational lhs = Rational(2 - cert.delta, 2);
        const Rational sign_product =
            Rational(lhs.num() * (degree_sum - cert.k), lhs.den());
        const bool sign_ok = sign_product >= Rational(0);
        const bool compare_ok = cert.final_rhs <= cert.half_bound;
        check("final_step_sign", sign_ok && compare_ok);
    } else {
        check("final_step_sign", true);  // the final step only applies for delta >= 2
    }
    check("i_exact_le_i_upper", cert.i_exact <= cert.i_upper);
    if (cert.delta >= 3) {
        check("ratio_bound", Rational(cert.i_exact, cert.gamma) <= Rational(cert.delta, 2));
    } else {
        check("ratio_bound", cert.i_exact <= cert.gamma);
    }
    return cert;
}

ConstructionRun run_construction_with_trace(const Graph& g) {
    if (!classify_forest(g).is_tree)
        throw std::invalid_argument("run_construction: input is not a tree");
    const SolverResult d = g.n() <= kBruteForceCap ? gamma_brute(g) : gamma_forest_dp(g);
    ConstructionRun run;
    run.trace = peel(g, d.witness);
    run.i_set = extend_to_independent_dominating(g, run.trace.x);
    run.certificate = certify(g, run.trace, run.i_set);
    return run;
}

BoundCertificate run_construction(const Graph& g) {
    return run_construction_with_trace(g).certificate;
}

}  // namespace domratio
