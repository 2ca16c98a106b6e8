"""Exception types and resource guards shared across the engine."""

from dataclasses import dataclass


class EngineError(Exception):
    """Base class for all engine-specific failures."""


class AssociativityError(EngineError):
    """A structure-constant table violates associativity.

    Carries a witness basis triple (i, j, k) with (e_i e_j) e_k != e_i (e_j e_k).
    """

    def __init__(self, witness):
        self.witness = witness
        i, j, k = witness
        super().__init__(
            f"multiplication table is not associative: "
            f"(e{i}*e{j})*e{k} != e{i}*(e{j}*e{k})"
        )


class GuardExceeded(EngineError):
    """A configured resource cap was hit before the computation finished."""

    def __init__(self, message, partial=None):
        self.partial = partial
        super().__init__(message)


class SideError(EngineError):
    """An ideal does not have the closure required by the operation."""


class UncoverableError(EngineError):
    """A witness cover was requested for a ring with no finite ideal cover."""


class DecompositionError(EngineError):
    """A semisimple/radical splitting does not satisfy its defining identities."""


class ExchangeFormatError(EngineError):
    """A ring exchange file is malformed."""


@dataclass(frozen=True)
class Guards:
    """Resource ceilings for exhaustive scans and searches.

    max_elements   refuse element-by-element scans of rings larger than this
    max_ideals     abort ideal-lattice enumeration past this many distinct ideals
    time_budget    soft wall-clock limit, in seconds, for a single record/search
    max_search_nodes  cap on branch-and-bound and complement-search nodes
    """

    max_elements: int = 65536
    max_ideals: int = 100000
    time_budget: float = 300.0
    max_search_nodes: int = 1 << 22


DEFAULT_GUARDS = Guards()
