"""State spaces of finite effect algebras as exact rational polytopes."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import linalg
from .algebra import EffectAlgebra, MvStructure, OrderRelation
from .polytope import HPolytope, VPolytope, enumerate_vertices
from .rational import format_fraction, sign_normalized

__all__ = [
    "StateSpaceError", "EmptyStateSpace", "PointNotInPolytope",
    "StatePolytope", "SimplexClassification",
    "EMPTY", "SIMPLEX", "NOT_SIMPLEX",
    "state_constraints", "state_polytope", "classify_state_space",
    "order_determining", "mv_extremal_check", "is_state",
]

EMPTY = "Empty"
SIMPLEX = "Simplex"
NOT_SIMPLEX = "NotSimplex"


class StateSpaceError(ValueError):
    code = "state-space"


class EmptyStateSpace(StateSpaceError):
    code = "empty-state-space"


class PointNotInPolytope(StateSpaceError):
    code = "point-not-in-polytope"


@dataclass(frozen=True)
class StatePolytope:
    """H- and V-representation of a state space.

    ``coordinates`` names each coordinate: element labels for a table,
    basis indices for a po-group.
    """

    h: HPolytope
    v: VPolytope
    coordinates: tuple[str, ...] = field(default=())

    @property
    def vertices(self):
        return self.v.vertices

    @property
    def empty(self) -> bool:
        return self.v.empty

    @property
    def dimension(self) -> int:
        return self.h.dimension

    def contains(self, point: Sequence) -> bool:
        return self.h.contains(point)

    def require(self, point: Sequence) -> tuple[Fraction, ...]:
        point = tuple(Fraction(x) for x in point)
        if self.empty:
            raise EmptyStateSpace("the state space is empty")
        if not self.contains(point):
            raise PointNotInPolytope(f"{[format_fraction(x) for x in point]} is not a state")
        return point

    def to_json(self) -> dict:
        return {"coordinates": list(self.coordinates),
                "h": self.h.to_json(), "v": self.v.to_json()}

    @classmethod
    def from_json(cls, data: dict) -> "StatePolytope":
        return cls(HPolytope.from_json(data["h"]), VPolytope.from_json(data["v"]),
                   tuple(data["coordinates"]))


def state_constraints(table: EffectAlgebra) -> HPolytope:
    """One variable per element: normalisation, additivity and positivity."""
    n = table.size

    def unit(i):
        return [Fraction(int(j == i)) for j in range(n)]

    eqs = [(unit(table.zero), 0), (unit(table.one), 1)]
    for a, b, c in table.sum_triples():
        row = [Fraction(0)] * n
        row[a] += 1
        row[b] += 1
        row[c] -= 1
        eqs.append((row, 0))
    ineqs = [(unit(i), 0) for i in range(n)]
    return HPolytope.build(n, eqs, ineqs)


def state_polytope(table: EffectAlgebra) -> StatePolytope:
    h = state_constraints(table)
    return StatePolytope(h, enumerate_vertices(h), table.labels)


def is_state(table: EffectAlgebra, point: Sequence) -> bool:
    return state_constraints(table).contains(point)


@dataclass(frozen=True)
class SimplexClassification:
    """Simplex status of a polytope.

    ``dependency`` (NotSimplex only) holds integer coefficients ``c`` over
    the vertex list with ``sum c_i v_i = 0`` and ``sum c_i = 0``. In finite
    dimension a simplex has finitely many, hence closed, extreme points, so
    ``choquet`` and ``bauer`` always coincide with ``kind == Simplex``.
    """

    kind: str
    affine_dim: int
    vertex_count: int
    dependency: tuple[int, ...] | None = None

    @property
    def is_simplex(self) -> bool:
        return self.kind == SIMPLEX

    @property
    def choquet(self) -> bool:
        return self.is_simplex

    @property
    def bauer(self) -> bool:
        return self.is_simplex

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "affine_dim": self.affine_dim,
            "vertex_count": self.vertex_count,
            "choquet": self.choquet,
            "bauer": self.bauer,
            "dependency": list(self.dependency) if self.dependency is not None else None,
        }


def classify_state_space(v: VPolytope | StatePolytope) -> SimplexClassification:
    if isinstance(v, StatePolytope):
        v = v.v
    verts = v.vertices
    if not verts:
        return SimplexClassification(EMPTY, -1, 0)
    dim = v.affine_dim
    if len(verts) == dim + 1:
        return SimplexClassification(SIMPLEX, dim, len(verts))
    rows = [list(col) for col in zip(*verts)] + [[Fraction(1)] * len(verts)]
    null = linalg.nullspace(rows, len(verts))
    dep = tuple(int(x) for x in sign_normalized(null[0]))
    return SimplexClassification(NOT_SIMPLEX, dim, len(verts), dep)


def order_determining(table: EffectAlgebra, sp: StatePolytope
                      ) -> tuple[bool, tuple[int, int] | None]:
    """Whether the states separate the order; checking vertices suffices."""
    if sp.empty:
        raise EmptyStateSpace("no states, so they cannot determine the order")
    leq = table.order.leq
    n = table.size
    for a in range(n):
        for b in range(n):
            if leq[a][b]:
                continue
            if all(v[a] <= v[b] for v in sp.vertices):
                return False, (a, b)
    return True, None


def _is_mv_state(mv: MvStructure, order: OrderRelation, point) -> bool:
    n = len(mv.star)
    if len(point) != n or point[mv.one] != 1 or any(x < 0 for x in point):
        return False
    for a in range(n):
        for b in range(n):
            if order.leq[a][mv.star[b]] and point[mv.oplus[a][b]] != point[a] + point[b]:
                return False
    return True


def mv_extremal_check(mv: MvStructure, order: OrderRelation, point: Sequence) -> bool:
    """Extremality of an MV state via ``s(x ^ y) = min(s(x), s(y))``."""
    point = tuple(Fraction(x) for x in point)
    if not _is_mv_state(mv, order, point):
        raise PointNotInPolytope("point is not a state of the MV-algebra")
    n = len(point)
    for x in range(n):
        for y in range(x + 1, n):
            if point[order.meet(x, y)] != min(point[x], point[y]):
                return False
    return True
