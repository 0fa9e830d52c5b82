"""Fuzzy graphs with exact rational memberships: density, balancedness,
products, isomorphism, and randomized theorem auditing.
"""

from .audit import (
    AuditReport,
    CLAIMS,
    CounterexampleRecord,
    PROPERTIES,
    SampleProfile,
    check_property,
    default_profile,
    derive,
    load_record,
    revalidate_record,
    run_all_properties,
    sample_graph,
    save_record,
    search_counterexample,
)
from .balance import (
    BalanceVerdict,
    Density,
    balance_check,
    max_density_subgraph,
    star_density,
)
from .errors import FuzzyGraphError
from .generators import FAMILIES, generate
from .graph import (
    ClassificationReport,
    FuzzyGraph,
    build,
    classify,
    complement,
    induced_subgraph,
    vertex_degrees,
)
from .graphio import load_graph, parse_graph, save_graph, serialize_graph
from .iso import GraphMorphism, find_isomorphism, is_self_complementary, is_valid_morphism
from .ops import OP_KINDS, combine

__all__ = [
    "AuditReport",
    "BalanceVerdict",
    "CLAIMS",
    "ClassificationReport",
    "CounterexampleRecord",
    "Density",
    "FAMILIES",
    "FuzzyGraph",
    "FuzzyGraphError",
    "GraphMorphism",
    "OP_KINDS",
    "PROPERTIES",
    "SampleProfile",
    "balance_check",
    "build",
    "check_property",
    "default_profile",
    "classify",
    "combine",
    "complement",
    "derive",
    "find_isomorphism",
    "generate",
    "induced_subgraph",
    "is_self_complementary",
    "is_valid_morphism",
    "load_graph",
    "load_record",
    "max_density_subgraph",
    "parse_graph",
    "revalidate_record",
    "run_all_properties",
    "sample_graph",
    "save_graph",
    "save_record",
    "search_counterexample",
    "serialize_graph",
    "star_density",
    "vertex_degrees",
]
