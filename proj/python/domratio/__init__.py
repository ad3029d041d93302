"""Exact domination and independent domination ratios on trees and small graphs.

The heavy lifting lives in the compiled extension; this package re-exports it.
"""

from domratio._core import (
    BRUTE_FORCE_CAP,
    ENUMERATION_CAP,
    SCHEMA_VERSION,
    BoundCertificate,
    CertificateCheck,
    ConstructionRun,
    ForestInfo,
    Graph,
    LineGraphReport,
    PeelingStep,
    PeelingTrace,
    Rational,
    RatioReport,
    TreeCase,
    TreeStream,
    VerificationReport,
    balanced_double_star,
    certify,
    classify_forest,
    count_rooted_trees,
    count_trees,
    disjoint_union,
    encode_graph6,
    enumerate_trees,
    extend_to_independent_dominating,
    from_edges,
    gamma_brute,
    gamma_forest_dp,
    i_brute,
    i_forest_dp,
    is_balanced_double_star,
    is_dominating,
    is_independent,
    line_graph,
    linegraph_check,
    mediant_within_bound,
    merge_verification_reports,
    parse_edge_list,
    parse_graph6,
    peel,
    ratio_report,
    run_construction,
    run_construction_with_trace,
    verify_trees,
)
from domratio._core import __version__

__all__ = [name for name in dir() if not name.startswith("_")]
