"""Exception types for the finite ring/module verification engine."""

from __future__ import annotations


class RadicalLabError(Exception):
    """Base class for all engine errors."""


class AxiomViolation(RadicalLabError):
    """A structure table fails a required axiom.

    Carries the axiom name and a witness tuple of element indices that
    can be replayed against the raw tables.
    """

    def __init__(self, axiom: str, witness: tuple[int, ...], detail: str = ""):
        self.axiom = axiom
        self.witness = witness
        msg = f"axiom {axiom!r} fails at witness {witness}"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


class SizeGuardExceeded(RadicalLabError):
    """A structure or enumeration exceeds the configured budget."""

    def __init__(self, what: str, actual: int, budget: int):
        self.what = what
        self.actual = actual
        self.budget = budget
        super().__init__(f"{what}: {actual} exceeds budget {budget}")


class KindMismatch(RadicalLabError):
    """A substructure has the wrong kind for the requested operation."""


class ParentMismatch(RadicalLabError):
    """Substructures belong to different parents (or different kinds)."""


class EmptyList(RadicalLabError):
    """A nonempty list of structures was required."""


class RingMismatch(RadicalLabError):
    """Modules in a product must share the same base ring."""


class NotProper(RadicalLabError):
    """A primality test was asked about the improper submodule P = M."""


class InvariantBreach(RadicalLabError):
    """The engine derived a set that violates a theorem-level invariant.

    Raised instead of silently repairing, so an engine bug (or a genuine
    discrepancy) is always visible.
    """


class CharacterizationMismatch(InvariantBreach):
    """The equivalent ring-level 2-primality criteria disagreed."""


class NotEpimorphism(RadicalLabError):
    """A surjective module homomorphism was required."""


class KernelNotContained(RadicalLabError):
    """Transfer checks require ker(phi) to be contained in the submodule."""


class ConfigError(RadicalLabError):
    """A JSON configuration document violates the schema.

    `path` points at the offending location, e.g. "ring.params.n".
    """

    def __init__(self, path: str, message: str):
        self.path = path
        super().__init__(f"{path}: {message}")


class UnknownSuite(RadicalLabError):
    """An unrecognized verification suite name."""
