"""Exact independent-set counting and verification of product-form upper bounds."""
from .bounds import (
    BoundExpr,
    Factor,
    Ordering,
    Verdict,
    compare_bound_vs_count,
    compare_bounds,
    kahn_bound,
    paper_bound,
    paper_bound_both,
    sah_bound,
)
from .entropy_audit import (
    AuditReport,
    IndicatorDistribution,
    audit_bipartite_proof,
    binary_entropy,
    conditional_entropy,
    entropy,
    f_r_value,
    shearer_check,
)
from .graph_core import (
    BipartiteView,
    Graph,
    bipartite_double_cover,
    bipartition,
    complete_bipartite,
    complete_graph,
    disjoint_union,
    flip,
    parse_graph,
    serialize_graph,
    tensor_product,
)
from .indset_count import (
    IndSetFamily,
    count_complete_bipartite,
    count_independent_sets,
    enumerate_independent_sets,
)
from .zhao_injection import (
    canonical_T,
    conflict_edges,
    verify_zhao_inequality,
    zhao_inverse,
    zhao_map,
)

__version__ = "0.1.0"
