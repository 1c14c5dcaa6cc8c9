"""Extending states from a sub-effect algebra to the ambient algebra.

The extension problem is the linear system of ambient state constraints
with the values on the subalgebra pinned. It is solved with the exact
simplex method; an infeasible system comes back with a Farkas certificate
that can be re-checked independently.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .algebra import EffectAlgebra, SubalgebraEmbedding
from .lp import OPTIMAL, solve_lp, verify_farkas
from .rational import format_fraction, to_fraction
from .statespace import state_constraints

__all__ = ["NotAState", "ExtensionProblem", "ExtensionResult",
           "validate_state_on_subalgebra", "extend_state", "restrict_state"]

EXTENDED = "Extended"
INFEASIBLE = "Infeasible"


class NotAState(ValueError):
    code = "not-a-state"


@dataclass(frozen=True)
class ExtensionProblem:
    """A subalgebra and values on its elements, keyed by ambient id."""

    ambient: EffectAlgebra
    sub: SubalgebraEmbedding
    given: Mapping[int, Fraction]

    @classmethod
    def from_values(cls, sub: SubalgebraEmbedding, values: Mapping) -> "ExtensionProblem":
        """Accept keys as ambient ids or labels and values as rationals or ``"p/q"``."""
        amb = sub.ambient
        given = {}
        for key, value in values.items():
            try:
                i = amb.id_of(key)
            except KeyError:
                raise NotAState(f"unknown element {key!r}") from None
            given[i] = to_fraction(value)
        return cls(amb, sub, given)

    def vector(self) -> tuple[Fraction, ...]:
        """Given values in the order of ``sub.subset``."""
        return tuple(self.given[a] for a in self.sub.subset)


@dataclass(frozen=True)
class ExtensionResult:
    status: str
    state: tuple[Fraction, ...] | None = None
    certificate: tuple[Fraction, ...] | None = None
    system: tuple | None = None

    @property
    def extended(self) -> bool:
        return self.status == EXTENDED

    def verify_certificate(self) -> bool:
        if self.certificate is None or self.system is None:
            return False
        rows, rhs = self.system
        return verify_farkas(rows, rhs, self.certificate)

    def to_json(self, labels: Sequence[str] | None = None) -> dict:
        if self.extended:
            keys = labels or [str(i) for i in range(len(self.state))]
            return {"status": self.status,
                    "state": {k: format_fraction(v) for k, v in zip(keys, self.state)}}
        return {"status": self.status,
                "certificate": [format_fraction(y) for y in self.certificate]}


def validate_state_on_subalgebra(p: ExtensionProblem) -> None:
    """Raise :class:`NotAState` unless ``given`` is a state of the subalgebra."""
    sub = p.sub
    extra = set(p.given) - set(sub.subset)
    if extra:
        raise NotAState(f"values given outside the subalgebra: {sorted(extra)}")
    missing = [a for a in sub.subset if a not in p.given]
    if missing:
        raise NotAState(f"no value for element(s) {missing}")
    t = sub.table
    x = p.vector()
    if x[t.one] != 1:
        raise NotAState(f"value of one is {format_fraction(x[t.one])}, not 1")
    for i, v in enumerate(x):
        if v < 0:
            raise NotAState(f"negative value at {sub.subset[i]}")
    for a, b, c in t.sum_triples():
        if x[a] + x[b] != x[c]:
            raise NotAState(
                f"s({sub.subset[a]}) + s({sub.subset[b]}) != s({sub.subset[c]})")
    if x[t.zero] != 0:
        raise NotAState("value of zero is not 0")


def extend_state(p: ExtensionProblem) -> ExtensionResult:
    """Exact extension of ``p.given`` to a state of the ambient algebra."""
    validate_state_on_subalgebra(p)
    h = state_constraints(p.ambient)
    n = p.ambient.size
    rows = [list(r) for r, _ in h.equalities]
    rhs = [b for _, b in h.equalities]
    for a in p.sub.subset:
        rows.append([Fraction(int(j == a)) for j in range(n)])
        rhs.append(p.given[a])
    res = solve_lp(rows, rhs)
    system = (tuple(tuple(r) for r in rows), tuple(rhs))
    if res.status != OPTIMAL:
        return ExtensionResult(INFEASIBLE, certificate=res.certificate, system=system)
    state = res.x
    if not h.contains(state) or restrict_state(state, p.sub) != p.vector():
        raise AssertionError("solver returned a point that is not an extension")
    return ExtensionResult(EXTENDED, state=state, system=system)


def restrict_state(state: Sequence, sub: SubalgebraEmbedding) -> tuple[Fraction, ...]:
    """Values of an ambient state on the subalgebra, in ``sub.subset`` order."""
    return tuple(Fraction(state[a]) for a in sub.subset)
