"""Finitely supported representing measures for states.

Every state of a finite effect algebra is a convex combination of the
extremal states (the polytope vertices). :func:`decompose_state` finds one
such combination, :func:`unique_decomposition` decides whether it is the
only one, and :func:`verify_integral` re-checks the identity
``s(a) = sum_i w_i v_i(a)`` coordinate by coordinate.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import linalg
from .lp import OPTIMAL, solve_lp
from .rational import format_fraction, parse_fraction
from .statespace import (SIMPLEX, SimplexClassification, StatePolytope,
                         classify_state_space)

__all__ = ["DiscreteMeasure", "DecompositionResult", "decompose_state",
           "unique_decomposition", "verify_integral", "reduce_support"]


@dataclass(frozen=True)
class DiscreteMeasure:
    """Weights on vertex indices; ``support`` is sorted by index."""

    support: tuple[tuple[int, Fraction], ...]

    @classmethod
    def from_weights(cls, weights: Sequence[Fraction]) -> "DiscreteMeasure":
        return cls(tuple((i, Fraction(w)) for i, w in enumerate(weights) if w != 0))

    @classmethod
    def dirac(cls, index: int) -> "DiscreteMeasure":
        return cls(((index, Fraction(1)),))

    def is_valid(self, n_vertices: int | None = None) -> bool:
        idx = [i for i, _ in self.support]
        if len(set(idx)) != len(idx) or idx != sorted(idx):
            return False
        if n_vertices is not None and any(not 0 <= i < n_vertices for i in idx):
            return False
        return (all(w > 0 for _, w in self.support)
                and sum((w for _, w in self.support), Fraction(0)) == 1)

    def weights(self, n_vertices: int) -> tuple[Fraction, ...]:
        out = [Fraction(0)] * n_vertices
        for i, w in self.support:
            out[i] = w
        return tuple(out)

    @property
    def is_dirac(self) -> bool:
        return len(self.support) == 1 and self.support[0][1] == 1

    def barycenter(self, vertices: Sequence[Sequence[Fraction]]) -> tuple[Fraction, ...]:
        dim = len(vertices[0])
        return tuple(sum((w * vertices[i][j] for i, w in self.support), Fraction(0))
                     for j in range(dim))

    def to_json(self) -> dict:
        return {"support": [{"vertex": i, "weight": format_fraction(w)}
                            for i, w in self.support]}

    @classmethod
    def from_json(cls, data: dict) -> "DiscreteMeasure":
        return cls(tuple((int(e["vertex"]), parse_fraction(e["weight"]))
                         for e in data["support"]))


@dataclass(frozen=True)
class DecompositionResult:
    measure: DiscreteMeasure
    unique: bool
    alternative: DiscreteMeasure | None = None

    def to_json(self) -> dict:
        return {"measure": self.measure.to_json(),
                "unique": self.unique,
                "alternative": self.alternative.to_json() if self.alternative else None}


def _system(sp: StatePolytope, s: Sequence[Fraction]):
    verts = sp.vertices
    rows = [[v[j] for v in verts] for j in range(sp.dimension)]
    rows.append([Fraction(1)] * len(verts))
    return rows, list(s) + [Fraction(1)]


def reduce_support(weights: Sequence[Fraction], vertices: Sequence[Sequence[Fraction]],
                   max_support: int) -> tuple[Fraction, ...]:
    """Shift weight along affine dependencies until at most ``max_support`` remain.

    Each step moves along the first nullspace vector of the supported
    vertices and zeroes the lowest-index weight that reaches zero first;
    the represented point and the total mass are unchanged.
    """
    w = [Fraction(x) for x in weights]
    while True:
        idx = [i for i, x in enumerate(w) if x > 0]
        if len(idx) <= max_support:
            return tuple(w)
        rows = [[vertices[i][j] for i in idx] for j in range(len(vertices[0]))]
        rows.append([Fraction(1)] * len(idx))
        null = linalg.nullspace(rows, len(idx))
        if not null:
            return tuple(w)
        lam = null[0]
        if not any(x > 0 for x in lam):
            lam = [-x for x in lam]
        step, leave = min((w[i] / l, k) for k, (i, l) in enumerate(zip(idx, lam)) if l > 0)
        for k, i in enumerate(idx):
            w[i] -= step * lam[k]
        w[idx[leave]] = Fraction(0)


def decompose_state(s: Sequence, sp: StatePolytope) -> DiscreteMeasure:
    """Representing measure of ``s`` with at most ``affine_dim + 1`` atoms."""
    s = sp.require(s)
    rows, rhs = _system(sp, s)
    res = solve_lp(rows, rhs)
    if res.status != OPTIMAL:
        raise AssertionError("state lies outside the convex hull of the computed vertices")
    w = reduce_support(res.x, sp.vertices, sp.v.affine_dim + 1)
    return DiscreteMeasure.from_weights(w)


def unique_decomposition(s: Sequence, sp: StatePolytope,
                         cls: SimplexClassification | None = None) -> DecompositionResult:
    """Representing measure of ``s`` together with an exact uniqueness verdict.

    On a simplex the barycentric coordinates are solved for directly. On
    other polytopes the first measure comes from :func:`decompose_state`;
    then each of its atoms ``j`` (ascending) has its weight minimised. Any
    other representing measure must put less mass on some atom of the
    first one, so if no minimisation lowers a weight the measure is unique.
    """
    s = sp.require(s)
    if cls is None:
        cls = classify_state_space(sp.v)
    if cls.kind == SIMPLEX:
        rows, rhs = _system(sp, s)
        w = linalg.solve(rows, rhs)
        if w is None or any(x < 0 for x in w):
            raise AssertionError("barycentric coordinates failed on a simplex")
        return DecompositionResult(DiscreteMeasure.from_weights(w), True)

    first = decompose_state(s, sp)
    rows, rhs = _system(sp, s)
    n = len(sp.vertices)
    for j, wj in first.support:
        c = [Fraction(int(i == j)) for i in range(n)]
        res = solve_lp(rows, rhs, c)
        if res.objective < wj:
            return DecompositionResult(first, False, DiscreteMeasure.from_weights(res.x))
    return DecompositionResult(first, True)


def verify_integral(s: Sequence, m: DiscreteMeasure, sp: StatePolytope) -> bool:
    """Exact check of ``s = sum_i w_i v_i`` with ``w`` a probability vector."""
    if sp.empty or not m.is_valid(len(sp.vertices)):
        return False
    s = tuple(Fraction(x) for x in s)
    return len(s) == sp.dimension and m.barycenter(sp.vertices) == s
