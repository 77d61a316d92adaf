"""Exception hierarchy shared by the ring, module and geometry layers."""

from __future__ import annotations


class RingError(Exception):
    """Base class for every error raised by this package."""

    kind = "RingError"

    def detail(self) -> dict:
        return {"message": str(self)}


class TableShapeError(RingError, ValueError):
    kind = "TableShapeError"


class AxiomViolation(RingError):
    """A ring axiom fails; ``witness`` holds the offending elements (caller's labels)."""

    kind = "AxiomViolation"

    def __init__(self, axiom: str, witness: tuple):
        self.axiom = axiom
        self.witness = tuple(witness)
        super().__init__(f"{axiom} fails at {self.witness}")

    def detail(self) -> dict:
        return {"axiom": self.axiom, "witness": list(self.witness)}


class NoUnity(AxiomViolation):
    """No two-sided multiplicative identity.

    The witness lists, for every candidate ``e``, one ``x`` with ``e*x != x``
    or ``x*e != x``.
    """

    kind = "NoUnity"

    def __init__(self, witness: tuple):
        super().__init__("unity", witness)


class InternalDisagreement(RingError):
    kind = "InternalDisagreement"

    def __init__(self, set_a, set_b):
        self.set_a = sorted(set_a)
        self.set_b = sorted(set_b)
        super().__init__(
            f"radical characterizations disagree: maximal-left-ideal intersection "
            f"{self.set_a} vs quasi-regular set {self.set_b}"
        )

    def detail(self) -> dict:
        return {"set_a": self.set_a, "set_b": self.set_b}


class NotPrime(RingError, ValueError):
    kind = "NotPrime"

    def __init__(self, p: int):
        self.p = p
        super().__init__(f"{p} is not prime")


class NotIrreducible(RingError, ValueError):
    kind = "NotIrreducible"

    def __init__(self, polynomial, factor):
        self.polynomial = tuple(polynomial)
        self.factor = tuple(factor)
        super().__init__(f"polynomial {self.polynomial} has factor {self.factor}")

    def detail(self) -> dict:
        return {"polynomial": list(self.polynomial), "factor": list(self.factor)}


class NotAField(RingError, ValueError):
    kind = "NotAField"

    def __init__(self, element: int):
        self.element = element
        super().__init__(f"nonzero element {element} has no inverse")


class BudgetExceeded(RingError):
    kind = "BudgetExceeded"

    def __init__(self, size: int, limit: int):
        self.size = size
        self.limit = limit
        super().__init__(f"scan of {size} vectors exceeds budget {limit}")

    def detail(self) -> dict:
        return {"size": self.size, "limit": self.limit}


class InconsistentSignature(RingError):
    kind = "InconsistentSignature"

    def __init__(self, submodule, sig_a: int, sig_b: int):
        self.submodule = submodule
        self.sig_a = sig_a
        self.sig_b = sig_b
        super().__init__(
            f"generators of submodule {submodule} have radical signatures {sig_a} and {sig_b}"
        )


class CoreUnavailable(RingError):
    """The radical is not identifiable with a one-dimensional space over a field."""

    kind = "CoreUnavailable"


class NotInCore(RingError, ValueError):
    kind = "NotInCore"


class ZeroVector(RingError, ValueError):
    kind = "ZeroVector"


class NotALine(RingError):
    kind = "NotALine"

    def __init__(self, points):
        self.points = sorted(points)
        super().__init__(f"point set {self.points} is not a projective line")

    def detail(self) -> dict:
        return {"points": [list(p) for p in self.points]}
