"""Pass/fail reporting shared by every axiom verifier.

A failed check carries a single witness tuple: the lexicographically
first basis multi-index at which the two sides of the identity differ
(input legs first, then the output coordinate).  That is enough to
reproduce the failure and small enough to print.
"""

from __future__ import annotations

from typing import Optional, Sequence, Tuple

from .exactlin import Matrix, unflatten


class PreconditionError(ValueError):
    """A documented hypothesis of an operation does not hold on the input."""

    def __init__(self, hypothesis: str, message: str = ""):
        self.hypothesis = hypothesis
        super().__init__(f"precondition {hypothesis!r} failed" + (f": {message}" if message else ""))


class InternalConsistencyError(RuntimeError):
    """Two computations that a theorem forces to agree came out different.

    Valid inputs can never trigger this; it always signals a bug.
    """


class Check:
    """One named axiom check with an optional failure witness."""

    __slots__ = ("name", "passed", "witness")

    def __init__(self, name: str, passed: bool, witness: Optional[tuple] = None):
        self.name = name
        self.passed = passed
        self.witness = witness

    def __repr__(self):
        if self.passed:
            return f"Check({self.name}: pass)"
        return f"Check({self.name}: FAIL at {self.witness})"

    def to_dict(self) -> dict:
        d = {"name": self.name, "passed": self.passed}
        if not self.passed:
            d["witness"] = list(self.witness) if self.witness is not None else None
        return d


class AxiomReport:
    """Ordered collection of checks with an aggregate verdict."""

    def __init__(self, checks: Sequence[Check]):
        self.checks = tuple(checks)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> Tuple[Check, ...]:
        return tuple(c for c in self.checks if not c.passed)

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def __contains__(self, name: str) -> bool:
        return any(c.name == name for c in self.checks)

    def __iter__(self):
        return iter(self.checks)

    def to_dict(self) -> dict:
        return {"passed": self.passed, "checks": [c.to_dict() for c in self.checks]}

    def __repr__(self):
        verdict = "pass" if self.passed else "FAIL"
        return f"AxiomReport({verdict}, {len(self.checks)} checks)"


def compare_maps(
    name: str,
    lhs: Matrix,
    rhs: Matrix,
    domain_dims: Sequence[int],
    codomain_dims: Sequence[int],
) -> Check:
    """Exact equality of two matrices realizing the two sides of an identity.

    The witness is (input multi-index, output multi-index) of the first
    differing entry, scanning columns then rows.
    """
    if lhs.rows != rhs.rows or lhs.cols != rhs.cols:
        raise ValueError(f"check {name!r}: shape mismatch {lhs.rows}x{lhs.cols} vs {rhs.rows}x{rhs.cols}")
    for j in range(lhs.cols):
        for i in range(lhs.rows):
            if lhs.entry(i, j) != rhs.entry(i, j):
                witness = ()
                if domain_dims:
                    witness += unflatten(j, domain_dims)
                witness += unflatten(i, codomain_dims)
                return Check(name, False, witness)
    return Check(name, True)
