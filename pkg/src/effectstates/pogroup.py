"""Finitely generated unital po-groups and their interval effect algebras.

A presentation fixes a subgroup ``G`` of ``Z^n`` by an integer basis, a
positive cone given by monoid generators, and a unit ``u``. The interval
``{g in G : 0 <= g <= u}`` with the restricted group addition is an effect
algebra, built here by :func:`gamma_effect_algebra`.

Cone membership is decided by searching nonnegative integer combinations
of the generators. The search is bounded with a strictly positive linear
functional ``f`` (``f(c) >= 1`` on every generator), which exists exactly
when the cone is strict; a combination reaching ``v`` cannot use ``c``
more than ``f(v) / f(c)`` times.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from . import linalg
from .algebra import EffectAlgebra
from .lp import solve_lp
from .polytope import HPolytope, enumerate_vertices
from .rational import dot
from .statespace import StatePolytope

__all__ = [
    "PoGroupError", "NotInGroup", "NotStrict", "SearchBoundExceeded", "IntervalInfinite",
    "UnitalPoGroupPresentation", "LexPresentation",
    "cone_membership", "interval_elements", "gamma_effect_algebra",
    "group_state_polytope", "lex_state_space", "evaluate_group_state",
    "coordinate_functional_names",
]

DEFAULT_SEARCH_FACTOR = 8
DEFAULT_MAX_ELEMENTS = 4096


class PoGroupError(ValueError):
    code = "po-group"


class NotInGroup(PoGroupError):
    code = "not-in-group"


class NotStrict(PoGroupError):
    code = "cone-not-strict"


class SearchBoundExceeded(PoGroupError):
    code = "search-bound"


class IntervalInfinite(PoGroupError):
    code = "interval-infinite"


IntVec = tuple  # tuple[int, ...]


def _ivec(v) -> IntVec:
    out = []
    for x in v:
        if isinstance(x, bool) or int(x) != x:
            raise PoGroupError(f"{v!r} is not an integer vector")
        out.append(int(x))
    return tuple(out)


@dataclass(frozen=True)
class UnitalPoGroupPresentation:
    """Subgroup of ``Z^n`` with a finitely generated strict positive cone and a unit."""

    ambient_rank: int
    basis: tuple[IntVec, ...]
    cone_generators: tuple[IntVec, ...]
    unit: IntVec
    search_factor: int = field(default=DEFAULT_SEARCH_FACTOR, compare=False)

    def __post_init__(self):
        n = self.ambient_rank
        object.__setattr__(self, "basis", tuple(_ivec(b) for b in self.basis))
        object.__setattr__(self, "cone_generators",
                           tuple(_ivec(c) for c in self.cone_generators if any(c)))
        object.__setattr__(self, "unit", _ivec(self.unit))
        if n < 1:
            raise PoGroupError("ambient_rank must be positive")
        for v in self.basis + self.cone_generators + (self.unit,):
            if len(v) != n:
                raise PoGroupError(f"vector {v} does not have length {n}")
        if not self.basis or linalg.rank(self.basis) != len(self.basis):
            raise PoGroupError("basis vectors must be linearly independent")
        for c in self.cone_generators:
            self.coords(c)
        self.coords(self.unit)
        if self.positive_functional is None:
            raise NotStrict("cone generators do not span a strict cone")
        if not cone_membership(self, self.unit):
            raise PoGroupError("unit is not in the positive cone")

    @classmethod
    def standard(cls, cone_generators, unit, **kw) -> "UnitalPoGroupPresentation":
        """Presentation with ``G = Z^n`` and the standard basis."""
        n = len(unit)
        basis = [tuple(int(i == j) for j in range(n)) for i in range(n)]
        return cls(n, tuple(basis), tuple(cone_generators), tuple(unit), **kw)

    @property
    def rank(self) -> int:
        return len(self.basis)

    def coords(self, v: Sequence[int]) -> tuple[int, ...]:
        """Integer coordinates of ``v`` in the basis; NotInGroup otherwise."""
        cols = linalg.transpose(self.basis)
        sol = linalg.solve(cols, list(v))
        if sol is None or any(x.denominator != 1 for x in sol):
            raise NotInGroup(f"{tuple(v)} is not in the subgroup")
        return tuple(int(x) for x in sol)

    def in_group(self, v: Sequence[int]) -> bool:
        try:
            self.coords(v)
        except NotInGroup:
            return False
        return True

    @cached_property
    def positive_functional(self) -> tuple[Fraction, ...] | None:
        """Some ``f`` with ``f(c) >= 1`` for every generator, or None."""
        gens = self.cone_generators
        n = self.ambient_rank
        if not gens:
            return tuple(Fraction(0) for _ in range(n))
        # f = p - q, C p - C q - s = 1 with p, q, s >= 0
        rows = [list(c) + [-x for x in c] + [-int(i == j) for j in range(len(gens))]
                for i, c in enumerate(gens)]
        res = solve_lp(rows, [1] * len(gens))
        if not res.feasible:
            return None
        return tuple(res.x[i] - res.x[n + i] for i in range(n))

    @property
    def refines_coordinatewise(self) -> bool:
        return all(x >= 0 for c in self.cone_generators for x in c)

    def to_json(self) -> dict:
        return {"ambient_rank": self.ambient_rank,
                "basis": [list(b) for b in self.basis],
                "cone_generators": [list(c) for c in self.cone_generators],
                "unit": list(self.unit)}


@dataclass(frozen=True)
class LexPresentation:
    """``head x Z^m`` ordered lexicographically, the tail carrying the discrete order.

    ``(a, b) >= 0`` iff ``a > 0`` in the head order or ``(a, b) = 0``; the
    unit is ``(u_head, 0)``.
    """

    head: UnitalPoGroupPresentation
    tail_rank: int

    def __post_init__(self):
        if self.tail_rank < 0:
            raise PoGroupError("tail_rank must be nonnegative")

    @property
    def rank(self) -> int:
        return self.head.rank + self.tail_rank

    def to_json(self) -> dict:
        return dict(self.head.to_json(), lex_tail_rank=self.tail_rank)


def _search(gens, target, caps) -> bool:
    """Is ``target`` a combination of ``gens`` with ``0 <= k_i <= caps[i]``?"""
    if not gens:
        return not any(target)
    c, rest, cap = gens[0], gens[1:], caps[0]
    for k in range(cap + 1):
        remaining = tuple(t - k * x for t, x in zip(target, c))
        if _search(rest, remaining, caps[1:]):
            return True
    return False


def cone_membership(G: UnitalPoGroupPresentation, v: Sequence[int]) -> bool:
    """Whether ``v`` is a nonnegative integer combination of the cone generators.

    Raises :class:`NotInGroup` when ``v`` is outside ``G`` and
    :class:`SearchBoundExceeded` when the certified coefficient bound is
    larger than ``max|v_i| * G.search_factor`` and no combination was found
    below that cap.
    """
    v = _ivec(v)
    G.coords(v)
    if not any(v):
        return True
    gens = G.cone_generators
    if not gens:
        return False
    f = G.positive_functional
    fv = dot(f, v)
    if fv < 1:
        return False
    exact = [math.floor(fv / dot(f, c)) for c in gens]
    cap = max(abs(x) for x in v) * G.search_factor
    caps = [min(e, cap) for e in exact]
    if _search(gens, v, caps):
        return True
    if caps != exact:
        raise SearchBoundExceeded(
            f"no combination for {v} with coefficients <= {cap}; certified bound is {max(exact)}")
    return False


def _lex_order_key(v):
    return tuple(v)


def interval_elements(G: UnitalPoGroupPresentation | LexPresentation,
                      max_elements: int = DEFAULT_MAX_ELEMENTS) -> list[IntVec]:
    """All ``g`` with ``0 <= g <= u``, sorted lexicographically."""
    if isinstance(G, LexPresentation):
        head = interval_elements(G.head, max_elements)
        zero_tail = (0,) * G.tail_rank
        if G.tail_rank and len(head) > 2:
            inner = next(h for h in head if any(h) and h != G.head.unit)
            raise IntervalInfinite(
                f"({inner}, b) lies in the interval for every tail vector b")
        return sorted(h + zero_tail for h in head)

    u = G.unit
    if G.refines_coordinatewise:
        if any(x < 0 for x in u):
            raise PoGroupError("unit is not coordinatewise nonnegative")
        size = math.prod(x + 1 for x in u)
        if size > max_elements * 64:
            raise SearchBoundExceeded(f"box of {size} points is too large")
        found = []
        for g in itertools.product(*(range(x + 1) for x in u)):
            if not G.in_group(g):
                continue
            h = tuple(a - b for a, b in zip(u, g))
            if cone_membership(G, g) and cone_membership(G, h):
                found.append(g)
                if len(found) > max_elements:
                    raise SearchBoundExceeded("interval exceeds max_elements")
        return sorted(found, key=_lex_order_key)

    # all positive elements p with f(p) <= f(u), then keep those with u - p positive
    f = G.positive_functional
    fu = dot(f, u)
    gens = G.cone_generators
    weights = [dot(f, c) for c in gens]
    positive = set()

    def walk(i, acc, budget):
        if len(positive) > max_elements:
            raise SearchBoundExceeded("interval search exceeds max_elements")
        if i == len(gens):
            positive.add(acc)
            return
        k = 0
        cur = acc
        while k * weights[i] <= budget:
            walk(i + 1, cur, budget - k * weights[i])
            k += 1
            cur = tuple(a + b for a, b in zip(cur, gens[i]))

    walk(0, (0,) * G.ambient_rank, fu)
    found = [g for g in positive if tuple(a - b for a, b in zip(u, g)) in positive]
    return sorted(found, key=_lex_order_key)


def _label(g: IntVec) -> str:
    if all(0 <= x <= 9 for x in g):
        return "".join(str(x) for x in g)
    return "(" + ",".join(str(x) for x in g) + ")"


def gamma_effect_algebra(G: UnitalPoGroupPresentation | LexPresentation,
                         max_elements: int = DEFAULT_MAX_ELEMENTS
                         ) -> tuple[EffectAlgebra, list[IntVec]]:
    """The interval effect algebra and the vector denoted by each element id."""
    elems = interval_elements(G, max_elements)
    index = {g: i for i, g in enumerate(elems)}
    zero = index[tuple(0 for _ in elems[0])]
    unit = G.head.unit + (0,) * G.tail_rank if isinstance(G, LexPresentation) else G.unit
    one = index[unit]
    sums = []
    for i, a in enumerate(elems):
        for j in range(i, len(elems)):
            s = tuple(x + y for x, y in zip(a, elems[j]))
            if s in index:
                sums.append((i, j, index[s]))
    table = EffectAlgebra(len(elems), zero, one, sums, [_label(g) for g in elems])
    return table, elems


def group_state_polytope(G: UnitalPoGroupPresentation) -> StatePolytope:
    """States of ``(G, u)`` as vectors of their values on the basis of ``G``."""
    r = G.rank
    ineqs = [(list(G.coords(c)), 0) for c in G.cone_generators]
    eqs = [(list(G.coords(G.unit)), 1)]
    h = HPolytope.build(r, eqs, ineqs)
    return StatePolytope(h, enumerate_vertices(h), tuple(f"b{i}" for i in range(r)))


def evaluate_group_state(G: UnitalPoGroupPresentation, state: Sequence, g: Sequence[int]) -> Fraction:
    """Value of a group state (basis coordinates) at the group element ``g``."""
    return dot(G.coords(g), state)


def lex_state_space(L: LexPresentation) -> StatePolytope:
    """States of a lexicographic product: head states with the tail pinned to 0.

    For a tail vector ``b`` and every ``n >= 1`` both ``u - n(0, b)`` and
    ``u + n(0, b)`` are positive, so ``|s(0, b)| <= 1/n`` for all ``n``.
    """
    head = group_state_polytope(L.head)
    m = L.tail_rank
    if m == 0:
        return head
    r = L.head.rank
    pad = [Fraction(0)] * m
    eqs = [(list(row) + pad, b) for row, b in head.h.equalities]
    ineqs = [(list(row) + pad, b) for row, b in head.h.inequalities]
    for j in range(m):
        row = [Fraction(0)] * (r + m)
        row[r + j] = Fraction(1)
        eqs.append((row, 0))
    h = HPolytope.build(r + m, eqs, ineqs)
    coords = head.coordinates + tuple(f"t{j}" for j in range(m))
    return StatePolytope(h, enumerate_vertices(h), coords)


def coordinate_functional_names(G: UnitalPoGroupPresentation, vertices) -> list[str | None]:
    """Name each group state ``s<i>`` when it is the i-th coordinate projection on ``G``."""
    names = []
    for f in vertices:
        name = None
        for i in range(G.ambient_rank):
            if all(f[j] == b[i] for j, b in enumerate(G.basis)):
                name = f"s{i + 1}"
                break
        names.append(name)
    return names
