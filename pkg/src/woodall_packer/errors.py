"""Exception types raised by the library.

Every error that a caller can reasonably trigger has its own class so that
the CLI can map failures onto stable exit codes and tests can assert on the
exact failure mode.
"""

from __future__ import annotations


class PackerError(Exception):
    """Base class for all library errors."""


class SelfLoop(PackerError):
    """An arc whose tail equals its head was supplied."""


class NodeOutOfRange(PackerError):
    """An arc endpoint falls outside ``range(n)``."""


class ArcNotPresent(PackerError):
    """An operation referenced an arc the digraph does not contain."""


class NoChordFound(PackerError):
    """A dicycle of length above three has no chord, so the underlying
    graph cannot be chordal."""


class DigonEncountered(PackerError):
    """An antiparallel arc pair was found where the operation requires a
    digon-free digraph."""


class LimitExceeded(PackerError):
    """Dicycle enumeration hit its cap. ``witnesses`` holds the dicycles
    collected before the cap was reached."""

    def __init__(self, witnesses, max_count):
        super().__init__(f"more than {max_count} dicycles")
        self.witnesses = list(witnesses)
        self.max_count = max_count


class TooSmall(PackerError):
    """The operation needs at least five vertices."""


class NotIndependent(PackerError):
    """The degree-3 vertex set is not independent, so the input cannot be a
    3-tree on five or more vertices."""


class AcyclicInput(PackerError):
    """The digraph has no dicycle, so there is nothing to pack or count."""


class NotThreeTree(PackerError):
    """The underlying graph of the input is not a 3-tree."""


class ConstructionFailed(PackerError):
    """The packing construction produced something the verifier rejected.

    Carries the offending digraph so the instance can be persisted and
    replayed; any occurrence on a planar 3-tree input is a bug report.
    """

    def __init__(self, digraph, message):
        super().__init__(message)
        self.digraph = digraph


class CertificateViolation(PackerError):
    """A ditriangle's three arcs do not sit in three distinct transversals."""


class InnerCycle(PackerError):
    """Deleting the degree-3 vertices left a dicycle, which contradicts the
    absence of a separating ditriangle."""


class HostMismatch(PackerError):
    """The partial digraph does not fit inside the replayed host graph."""


class DigonCreated(PackerError):
    """An antiparallel pair appeared where the completion must stay
    digon-free."""


class ResampleExhausted(PackerError):
    """No orientation with a dicycle was found within the resample budget."""


class BudgetExhausted(PackerError):
    """The exact search ran out of budget. ``lower_bound`` is the largest
    packing size proven feasible before the budget ran out."""

    def __init__(self, lower_bound, budget):
        super().__init__(f"search budget {budget} exhausted")
        self.lower_bound = lower_bound
        self.budget = budget
