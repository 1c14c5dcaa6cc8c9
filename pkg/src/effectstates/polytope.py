"""Exact rational polytopes and vertex enumeration by double description.

Equalities are eliminated first: the affine hull of the equality system is
parametrised as ``x0 + N y`` and the inequalities are pulled back to ``y``.
The pulled-back polyhedron is homogenised to a cone in ``(y, t)`` and its
extreme rays are computed with the double description method, adding one
inequality at a time in sorted order. Two rays are combined only when they
are adjacent, which is decided by the rank of the constraints tight at
both. Rays with ``t > 0`` are the vertices.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from . import linalg
from .rational import dot, format_fraction, parse_fraction, primitive, sign_normalized

__all__ = ["HPolytope", "VPolytope", "PolytopeError", "UnboundedRegion",
           "enumerate_vertices", "affine_dimension"]


class PolytopeError(ValueError):
    code = "polytope"


class UnboundedRegion(PolytopeError):
    code = "unbounded"


Row = tuple  # tuple[Fraction, ...]


def _normalize(rows, equality: bool) -> tuple[tuple[Row, Fraction], ...]:
    out = set()
    for row, rhs in rows:
        full = tuple(Fraction(x) for x in row) + (Fraction(rhs),)
        full = sign_normalized(full) if equality else primitive(full)
        if not any(full[:-1]):
            rhs = full[-1]
            if (equality and rhs == 0) or (not equality and rhs <= 0):
                continue
        out.add((full[:-1], full[-1]))
    return tuple(sorted(out))


@dataclass(frozen=True)
class HPolytope:
    """``{x : A_eq x = b_eq, A_ineq x >= b_ineq}`` with exact rational data.

    Rows are stored normalised (coprime integers; equalities with a
    positive leading entry), sorted and free of duplicates.
    """

    dimension: int
    equalities: tuple[tuple[Row, Fraction], ...] = ()
    inequalities: tuple[tuple[Row, Fraction], ...] = ()

    @classmethod
    def build(cls, dimension: int, equalities: Iterable = (), inequalities: Iterable = ()):
        eqs = list(equalities)
        ineqs = list(inequalities)
        for row, _ in eqs + ineqs:
            if len(row) != dimension:
                raise PolytopeError(f"row of length {len(row)} in dimension {dimension}")
        return cls(dimension, _normalize(eqs, True), _normalize(ineqs, False))

    def contains(self, x: Sequence) -> bool:
        if len(x) != self.dimension:
            return False
        x = [Fraction(v) for v in x]
        return (all(dot(r, x) == b for r, b in self.equalities)
                and all(dot(r, x) >= b for r, b in self.inequalities))

    def with_equalities(self, extra: Iterable) -> "HPolytope":
        return HPolytope.build(self.dimension, list(self.equalities) + list(extra),
                               self.inequalities)

    def to_json(self) -> dict:
        def enc(rows):
            return [{"row": [format_fraction(x) for x in r], "rhs": format_fraction(b)}
                    for r, b in rows]
        return {"dimension": self.dimension,
                "equalities": enc(self.equalities),
                "inequalities": enc(self.inequalities)}

    @classmethod
    def from_json(cls, data: dict) -> "HPolytope":
        def dec(rows):
            return [(tuple(parse_fraction(x) for x in r["row"]), parse_fraction(r["rhs"]))
                    for r in rows]
        return cls(data["dimension"], tuple(dec(data["equalities"])),
                   tuple(dec(data["inequalities"])))


def affine_dimension(points: Sequence[Sequence[Fraction]]) -> int:
    if not points:
        return -1
    base = points[0]
    diffs = [[a - b for a, b in zip(p, base)] for p in points[1:]]
    return linalg.rank(diffs) if diffs else 0


@dataclass(frozen=True)
class VPolytope:
    """Vertex list (lexicographically sorted) of a bounded polytope."""

    dimension: int
    vertices: tuple[Row, ...]

    @property
    def affine_dim(self) -> int:
        return affine_dimension(self.vertices)

    @property
    def empty(self) -> bool:
        return not self.vertices

    def index(self, point: Sequence) -> int | None:
        point = tuple(Fraction(x) for x in point)
        try:
            return self.vertices.index(point)
        except ValueError:
            return None

    def to_json(self) -> dict:
        return {"dimension": self.dimension,
                "affine_dim": self.affine_dim,
                "vertices": [[format_fraction(x) for x in v] for v in self.vertices]}

    @classmethod
    def from_json(cls, data: dict) -> "VPolytope":
        verts = tuple(tuple(parse_fraction(x) for x in v) for v in data["vertices"])
        return cls(data["dimension"], verts)


class _Ray:
    __slots__ = ("vec", "zeros")

    def __init__(self, vec, zeros):
        self.vec = vec
        self.zeros = zeros


def _extreme_rays(rows: list[Row], dim: int) -> tuple[list[Row], list[Row]]:
    """Extreme rays and lineality basis of ``{z : row @ z >= 0 for all rows}``."""
    lineality = [tuple(Fraction(int(i == j)) for j in range(dim)) for i in range(dim)]
    rays: list[_Ray] = []
    processed: list[Row] = []
    for idx, a in enumerate(rows):
        pivot = next((l for l in lineality if dot(a, l) != 0), None)
        if pivot is not None:
            ap = dot(a, pivot)
            if ap < 0:
                pivot, ap = tuple(-x for x in pivot), -ap
            new_lin = []
            for l in lineality:
                if l is pivot or l == tuple(-x for x in pivot):
                    continue
                f = dot(a, l) / ap
                new_lin.append(tuple(x - f * y for x, y in zip(l, pivot)) if f else l)
            lineality = new_lin
            for r in rays:
                f = dot(a, r.vec) / ap
                if f:
                    r.vec = primitive([x - f * y for x, y in zip(r.vec, pivot)])
                r.zeros = r.zeros | {idx}
            rays.append(_Ray(primitive(pivot), frozenset(range(idx))))
            processed.append(a)
            continue

        values = [dot(a, r.vec) for r in rays]
        pos = [r for r, v in zip(rays, values) if v > 0]
        neg = [r for r, v in zip(rays, values) if v < 0]
        zero = [r for r, v in zip(rays, values) if v == 0]
        processed.append(a)
        need = dim - len(lineality) - 2
        created = []
        for p in pos:
            vp = dot(a, p.vec)
            for q in neg:
                common = p.zeros & q.zeros
                if len(common) < need:
                    continue
                if linalg.rank([processed[i] for i in sorted(common)]) != need:
                    continue
                vq = dot(a, q.vec)
                vec = primitive([vp * x - vq * y for x, y in zip(q.vec, p.vec)])
                created.append(_Ray(vec, common | {idx}))
        for r in zero:
            r.zeros = r.zeros | {idx}
        rays = pos + zero + created
    return [r.vec for r in rays], lineality


def enumerate_vertices(h: HPolytope) -> VPolytope:
    """Exact vertex list of a bounded H-polytope (empty when infeasible)."""
    d = h.dimension
    if h.equalities:
        eq_rows = [list(r) for r, _ in h.equalities]
        x0 = linalg.solve(eq_rows, [b for _, b in h.equalities])
        if x0 is None:
            return VPolytope(d, ())
        basis = linalg.nullspace(eq_rows, d)
    else:
        x0 = [Fraction(0)] * d
        basis = [[Fraction(int(i == j)) for j in range(d)] for i in range(d)]
    k = len(basis)

    cone_rows = []
    for row, rhs in h.inequalities:
        pulled = [dot(row, nvec) for nvec in basis]
        cone_rows.append(tuple(pulled) + (dot(row, x0) - rhs,))
    cone_rows.append(tuple([Fraction(0)] * k) + (Fraction(1),))
    cone_rows = sorted(set(primitive(r) for r in cone_rows if any(r)))

    rays, lineality = _extreme_rays(cone_rows, k + 1)
    finite = [r for r in rays if r[-1] > 0]
    if not finite:
        return VPolytope(d, ())
    if lineality or any(r[-1] == 0 for r in rays):
        raise UnboundedRegion("polyhedron has recession directions")
    vertices = set()
    for r in finite:
        y = [c / r[-1] for c in r[:-1]]
        x = tuple(x0[i] + sum((y[j] * basis[j][i] for j in range(k)), Fraction(0))
                  for i in range(d))
        vertices.add(x)
    return VPolytope(d, tuple(sorted(vertices)))
