#ifndef DOMRATIO_CONSTRUCTION_HPP
#define DOMRATIO_CONSTRUCTION_HPP

#include <string>
#include <vector>

#include "domratio/graph.hpp"
#include "domratio/rational.hpp"

namespace domratio {

// One round of peeling G[D]: x_i of degree 0 or 1 in the remaining induced
// forest, together with its closed neighborhood there.
struct PeelingStep {
    int index = 0;    // 1-based
    int x = -1;       // vertex, original labels
    int deg = 0;      // degree of x in G_i, always 0 or 1
    VertexSet block;  // N_{G_i}[x], original labels

    friend bool operator==(const PeelingStep&, const PeelingStep&) = default;
};

struct PeelingTrace {
    std::vector<PeelingStep> steps;
    int k = 0;    // number of steps
    VertexSet x;  // {x_1, ..., x_k}
    VertexSet d;  // the dominating set the trace partitions

    friend bool operator==(const PeelingTrace&, const PeelingTrace&) = default;
};

struct CertificateCheck {
    std::string name;
    bool passed = false;

    friend bool operator==(const CertificateCheck&, const CertificateCheck&) = default;
};

// All quantities of the inequality chain, with named pass/fail checks.
struct BoundCertificate {
    int delta = 0;       // max degree of the host graph
    int gamma = 0;       // |D|
    int k = 0;           // peeling steps
    int degree_sum = 0;  // sum of the step degrees
    VertexSet x;
    VertexSet i_set;     // the greedy extension I
    int i_exact = 0;     // i(G) from an exact solver
    int i_upper = 0;     // |X| + |I|
    long long eq1_rhs = 0;   // (gamma - k) * delta - sum(deg^2)
    Rational final_rhs;      // delta*gamma - sum(delta - 1 + deg^2)
    Rational half_bound;     // delta*gamma/2
    std::vector<CertificateCheck> checks;

    bool all_checks_pass() const;

    friend bool operator==(const BoundCertificate&, const BoundCertificate&) = default;
};

// Peels G[D] down to empty: at each step take the (degree, index)-least
// vertex of degree <= 1 in the remaining induced forest and remove its
// closed neighborhood. Requires g a tree and d a minimum dominating set.
PeelingTrace peel(const Graph& g, const VertexSet& d);

// Greedy ascending-index completion of the independent set x to a maximal
// independent set of g; returns only the added vertices I.
VertexSet extend_to_independent_dominating(const Graph& g, const VertexSet& x);

// Evaluates every quantity and check of the bound chain for a trace/extension
// pair. A failed check marks the certificate failed rather than throwing.
BoundCertificate certify(const Graph& g, const PeelingTrace& trace, const VertexSet& i_set);

struct ConstructionRun {
    PeelingTrace trace;
    VertexSet i_set;
    BoundCertificate certificate;

    friend bool operator==(const ConstructionRun&, const ConstructionRun&) = default;
};

// Solver -> peel -> extend -> certify on the canonical minimum dominating
// set (lexicographically least for n <= 20, forest-DP witness beyond).
ConstructionRun run_construction_with_trace(const Graph& g);
BoundCertificate run_construction(const Graph& g);

}  // namespace domratio

#endif
