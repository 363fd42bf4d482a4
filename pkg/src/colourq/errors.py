"""Exception hierarchy shared across the package.

Every error carries a short machine-readable ``code`` so the HTTP service
can map failures onto structured error bodies without string matching.
"""

from __future__ import annotations


class ColouredQuiverError(Exception):
    """Base class for all domain errors."""

    code = "domain_error"


class InvalidQuiverError(ColouredQuiverError):
    """A quiver violates one of the three structural properties."""

    code = "invalid_quiver"

    def __init__(self, message: str, violations=()):
        super().__init__(message)
        self.violations = list(violations)


class VertexRangeError(ColouredQuiverError):
    code = "vertex_out_of_range"


class CyclicGraphError(ColouredQuiverError):
    """Seed construction requires an acyclic colour-0 quiver."""

    code = "cyclic_graph"


class MutationError(ColouredQuiverError):
    """Mutation produced a quiver violating the structural properties.

    Signals either a bug or an input outside any valid mutation class.
    """

    code = "mutation_failed"

    def __init__(self, message: str, violations=()):
        super().__init__(message)
        self.violations = list(violations)


class DocumentError(ColouredQuiverError):
    """Malformed or schema-violating quiver document."""

    code = "schema_violation"


class DisconnectedGraphError(ColouredQuiverError):
    code = "disconnected_graph"
