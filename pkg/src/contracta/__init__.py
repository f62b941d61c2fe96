"""Edge contraction, vertex splitting and forbidden induced subgraphs on small graphs."""

from .errors import (
    BadOrder,
    BadWitness,
    ContractaError,
    LimitExceeded,
    MalformedEdgeList,
    MalformedGraph6,
    MalformedSpec,
    NonEdge,
    NotFree,
    OutOfRange,
    UnknownId,
)
from .graph import Graph, contract, induced
from .families import GraphFamily, elm, is_exist, is_free
from .iso import are_isomorphic, canonical_form, enumerate_graphs
from .splitting import SplitSpec, apply_split, free_split_set, splittings
from .critical import enumerate_critical, is_critically_exist
from .certify import certify, is_strongly_free
from .linegraph import is_line_beineke, is_line_krausz

__all__ = [
    "BadOrder",
    "BadWitness",
    "ContractaError",
    "Graph",
    "GraphFamily",
    "LimitExceeded",
    "MalformedEdgeList",
    "MalformedGraph6",
    "MalformedSpec",
    "NonEdge",
    "NotFree",
    "OutOfRange",
    "SplitSpec",
    "UnknownId",
    "apply_split",
    "are_isomorphic",
    "canonical_form",
    "certify",
    "contract",
    "elm",
    "enumerate_critical",
    "enumerate_graphs",
    "free_split_set",
    "induced",
    "is_critically_exist",
    "is_exist",
    "is_free",
    "is_line_beineke",
    "is_line_krausz",
    "is_strongly_free",
    "splittings",
]
