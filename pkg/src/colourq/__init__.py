"""colourq: coloured quiver mutation, mutation classes, and finiteness."""

from .canon import are_isomorphic, canonical_form, canonical_permutation, canonical_relabel
from .dynkin import (
    FinitenessVerdict,
    GraphClass,
    UndirectedMultigraph,
    classify_graph,
    predict_finiteness,
    underlying_graph,
)
from .enumeration import (
    DEFAULT_MAX_QUIVERS,
    EnumerationConfig,
    EnumerationResult,
    Status,
    enumerate_class,
    find_bicoloured_acyclic_member,
)
from .errors import (
    ColouredQuiverError,
    CyclicGraphError,
    DisconnectedGraphError,
    DocumentError,
    InvalidQuiverError,
    MutationError,
    VertexRangeError,
)
from .quiver import (
    ColouredQuiver,
    DirectedMultigraph,
    Violation,
    from_gabriel,
    gabriel,
    is_bicoloured_acyclic,
    mutate,
    mutate_seq,
    validate,
)

__version__ = "0.1.0"

__all__ = [
    "ColouredQuiver",
    "ColouredQuiverError",
    "CyclicGraphError",
    "DEFAULT_MAX_QUIVERS",
    "DirectedMultigraph",
    "DisconnectedGraphError",
    "DocumentError",
    "EnumerationConfig",
    "EnumerationResult",
    "FinitenessVerdict",
    "GraphClass",
    "InvalidQuiverError",
    "MutationError",
    "Status",
    "UndirectedMultigraph",
    "VertexRangeError",
    "Violation",
    "are_isomorphic",
    "canonical_form",
    "canonical_permutation",
    "canonical_relabel",
    "classify_graph",
    "enumerate_class",
    "find_bicoloured_acyclic_member",
    "from_gabriel",
    "gabriel",
    "is_bicoloured_acyclic",
    "mutate",
    "mutate_seq",
    "predict_finiteness",
    "underlying_graph",
    "validate",
]
