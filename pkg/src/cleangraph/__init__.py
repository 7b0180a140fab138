"""Clean graphs of finite rings and mechanical checks of their isomorphism theory."""

from .analysis import (
    IdempotentTable,
    UnitTable,
    idempotents,
    involution_count_m2_formula,
    involutions_m2_bruteforce,
    involutions_m2_classified,
    unit_count_m2_formula,
    units,
)
from .clean import (
    CleanVertex,
    cl1,
    cl2,
    cl2_degree_formula,
    cl2_via_shuriken,
    clean_graph,
    idempotent_graph,
    tables,
)
from .errors import (
    BudgetError,
    CleanGraphError,
    DomainError,
    InconclusiveError,
    ParamError,
    SpecError,
)
from .formats import decode_graph6, export_dot, export_graph6
from .graphs import Graph, complete_graph, copies, disjoint_union, empty_graph, graph_join, shuriken
from .iso import all_isomorphisms, fingerprint, is_isomorphic, isomorphism_classes, verify_bijection
from .rings import M2p, Product, QuotPoly, Zn, build_ring, make_m2p, make_product, make_quot_poly, make_zn
from .spec_parser import format_ring_spec, parse_ring_spec
from .theorems import VerificationReport, default_catalog, run_suite

__version__ = "0.1.0"

__all__ = [
    "BudgetError",
    "CleanGraphError",
    "CleanVertex",
    "DomainError",
    "Graph",
    "IdempotentTable",
    "InconclusiveError",
    "M2p",
    "ParamError",
    "Product",
    "QuotPoly",
    "SpecError",
    "UnitTable",
    "VerificationReport",
    "Zn",
    "all_isomorphisms",
    "build_ring",
    "cl1",
    "cl2",
    "cl2_degree_formula",
    "cl2_via_shuriken",
    "clean_graph",
    "complete_graph",
    "copies",
    "decode_graph6",
    "default_catalog",
    "disjoint_union",
    "empty_graph",
    "export_dot",
    "export_graph6",
    "fingerprint",
    "format_ring_spec",
    "graph_join",
    "idempotent_graph",
    "idempotents",
    "involution_count_m2_formula",
    "involutions_m2_bruteforce",
    "involutions_m2_classified",
    "is_isomorphic",
    "isomorphism_classes",
    "make_m2p",
    "make_product",
    "make_quot_poly",
    "make_zn",
    "parse_ring_spec",
    "run_suite",
    "shuriken",
    "tables",
    "unit_count_m2_formula",
    "units",
    "verify_bijection",
]
