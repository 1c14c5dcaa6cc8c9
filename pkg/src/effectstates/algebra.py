"""Finite effect algebras given by partial addition tables.

An :class:`EffectAlgebra` is built from sparse triples ``(a, b, c)``
meaning ``a + b = c``. The symmetric closure and the sums with zero are
filled in automatically; everything else is checked exhaustively against
the four effect-algebra axioms on construction.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

__all__ = [
    "EffectAlgebra",
    "EffectAlgebraError",
    "ValidationError",
    "InconsistentSum",
    "CommutativityViolation",
    "AssociativityViolation",
    "ComplementViolation",
    "ZeroOneViolation",
    "DegenerateAlgebra",
    "OrderRelation",
    "RdpWitness",
    "MvStructure",
    "NotMv",
    "SubalgebraEmbedding",
    "NotSubalgebra",
    "SizeBoundExceeded",
    "validate_effect_algebra",
    "derive_order",
    "check_rdp",
    "is_lattice",
    "to_mv",
    "is_subalgebra",
    "enumerate_subalgebras",
]


class EffectAlgebraError(ValueError):
    """Base class for every domain error raised by this module."""

    code = "effect-algebra-error"


class ValidationError(EffectAlgebraError):
    code = "validation"
    axiom: str | None = None

    def __init__(self, message: str, *elements: int):
        super().__init__(message)
        self.elements = elements


class InconsistentSum(ValidationError):
    code = "inconsistent-sum"


class CommutativityViolation(ValidationError):
    code = "commutativity"
    axiom = "(i)"


class AssociativityViolation(ValidationError):
    code = "associativity"
    axiom = "(ii)"


class ComplementViolation(ValidationError):
    code = "complement"
    axiom = "(iii)"


class ZeroOneViolation(ValidationError):
    code = "zero-one"
    axiom = "(iv)"


class DegenerateAlgebra(ValidationError):
    code = "degenerate"


class NotMv(EffectAlgebraError):
    code = "not-mv"

    def __init__(self, reason: str, detail: str = ""):
        super().__init__(f"{reason}: {detail}" if detail else reason)
        self.reason = reason


class NotSubalgebra(EffectAlgebraError):
    code = "not-subalgebra"

    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


class SizeBoundExceeded(EffectAlgebraError):
    code = "size-bound"


class EffectAlgebra:
    """A validated finite effect algebra.

    Parameters
    ----------
    size : int
        Number of elements; element ids are ``0 .. size-1``.
    zero, one : int
        Ids of the neutral element and the unit.
    sums : iterable of (a, b, c)
        Defined sums ``a + b = c``, each listed once in either order.
    labels : sequence of str, optional
        Human readable names, used by the CLI and in reports.
    """

    def __init__(self, size: int, zero: int, one: int, sums: Iterable[Sequence[int]],
                 labels: Sequence[str] | None = None):
        if not isinstance(size, int) or size < 1:
            raise ValidationError(f"size must be a positive integer, got {size!r}")
        for name, v in (("zero", zero), ("one", one)):
            if not isinstance(v, int) or not 0 <= v < size:
                raise ValidationError(f"{name} id {v!r} out of range")
        if zero == one:
            raise DegenerateAlgebra("zero and one coincide")
        if labels is None:
            labels = [str(i) for i in range(size)]
        labels = tuple(str(x) for x in labels)
        if len(labels) != size or len(set(labels)) != size:
            raise ValidationError("labels must be unique and one per element")

        table: list[list[int | None]] = [[None] * size for _ in range(size)]
        explicit: dict[tuple[int, int], int] = {}
        for triple in sums:
            if len(triple) != 3:
                raise ValidationError(f"sum entry {triple!r} is not a triple")
            a, b, c = triple
            for v in (a, b, c):
                if not isinstance(v, int) or not 0 <= v < size:
                    raise ValidationError(f"element id {v!r} out of range in {triple!r}")
            if (a, b) in explicit and explicit[(a, b)] != c:
                raise InconsistentSum(f"{a}+{b} listed with values {explicit[(a, b)]} and {c}", a, b)
            if (b, a) in explicit and explicit[(b, a)] != c and a != b:
                raise CommutativityViolation(
                    f"{a}+{b}={c} but {b}+{a}={explicit[(b, a)]}", a, b)
            explicit[(a, b)] = c
            table[a][b] = c
            table[b][a] = c
        for a in range(size):
            for pair in ((zero, a), (a, zero)):
                current = table[pair[0]][pair[1]]
                if current is not None and current != a:
                    raise InconsistentSum(f"{zero}+{a} must equal {a}, got {current}", zero, a)
            table[zero][a] = a
            table[a][zero] = a

        self.size = size
        self.zero = zero
        self.one = one
        self.labels = labels
        self._table = tuple(tuple(row) for row in table)
        self.complement = self._check_axioms()

    def _check_axioms(self) -> tuple[int, ...]:
        n, t, one = self.size, self._table, self.one
        for a in range(n):
            for b in range(a + 1, n):
                if t[a][b] != t[b][a]:
                    raise CommutativityViolation(f"{a}+{b} and {b}+{a} differ", a, b)
        for a in range(n):
            if a != self.zero and t[a][one] is not None:
                raise ZeroOneViolation(f"{a}+1 is defined but {a} is not zero", a)
        comp = []
        for a in range(n):
            candidates = [b for b in range(n) if t[a][b] == one]
            if len(candidates) != 1:
                what = "missing" if not candidates else f"not unique {candidates}"
                raise ComplementViolation(f"complement of {a} {what}", a)
            comp.append(candidates[0])
        for a in range(n):
            row_a = t[a]
            for b in range(n):
                ab = row_a[b]
                for c in range(n):
                    bc = t[b][c]
                    left = t[ab][c] if ab is not None else None
                    right = t[a][bc] if bc is not None else None
                    if left != right:
                        raise AssociativityViolation(
                            f"({a}+{b})+{c} and {a}+({b}+{c}) disagree", a, b, c)
        return tuple(comp)

    # -- basic access ---------------------------------------------------
    def add(self, a: int, b: int) -> int | None:
        """``a + b`` or None when undefined."""
        return self._table[a][b]

    def defined(self, a: int, b: int) -> bool:
        return self._table[a][b] is not None

    @property
    def table(self) -> tuple[tuple[int | None, ...], ...]:
        return self._table

    def sum_triples(self) -> list[tuple[int, int, int]]:
        """Stored sums ``(a, b, c)`` with ``a <= b``, excluding sums with zero."""
        out = []
        for a in range(self.size):
            for b in range(a, self.size):
                c = self._table[a][b]
                if c is not None and self.zero not in (a, b):
                    out.append((a, b, c))
        return out

    def id_of(self, key) -> int:
        """Resolve a label, or an integer id given as int or digit string."""
        if isinstance(key, int) and not isinstance(key, bool):
            if 0 <= key < self.size:
                return key
            raise KeyError(key)
        if key in self.labels:
            return self.labels.index(key)
        if isinstance(key, str) and key.isdigit() and int(key) < self.size:
            return int(key)
        raise KeyError(key)

    @cached_property
    def order(self) -> "OrderRelation":
        return derive_order(self)

    @cached_property
    def differences(self) -> tuple[tuple[int | None, ...], ...]:
        """``differences[b][a]`` is ``b - a`` when ``a <= b``."""
        diff = [[None] * self.size for _ in range(self.size)]
        for a in range(self.size):
            for c in range(self.size):
                b = self._table[a][c]
                if b is not None:
                    diff[b][a] = c
        return tuple(tuple(r) for r in diff)

    def relabel(self, perm: Sequence[int]) -> "EffectAlgebra":
        """Isomorphic copy in which element ``i`` gets id ``perm[i]``."""
        labels = [None] * self.size
        for i, p in enumerate(perm):
            labels[p] = self.labels[i]
        sums = [(perm[a], perm[b], perm[c]) for a, b, c in self.sum_triples()]
        return EffectAlgebra(self.size, perm[self.zero], perm[self.one], sums, labels)

    def to_dict(self) -> dict:
        return {
            "size": self.size,
            "zero": self.zero,
            "one": self.one,
            "labels": list(self.labels),
            "sums": [list(t) for t in self.sum_triples()],
        }

    def __eq__(self, other):
        if not isinstance(other, EffectAlgebra):
            return NotImplemented
        return (self.size, self.zero, self.one, self._table) == (
            other.size, other.zero, other.one, other._table)

    def __hash__(self):
        return hash((self.size, self.zero, self.one, self._table))

    def __repr__(self):
        return f"EffectAlgebra(size={self.size}, sums={len(self.sum_triples())})"


def validate_effect_algebra(raw: dict) -> EffectAlgebra:
    """Build an :class:`EffectAlgebra` from the JSON fixture mapping."""
    missing = [k for k in ("size", "zero", "one", "sums") if k not in raw]
    if missing:
        raise ValidationError(f"missing field(s): {', '.join(missing)}")
    return EffectAlgebra(raw["size"], raw["zero"], raw["one"],
                         [tuple(t) for t in raw["sums"]], raw.get("labels"))


@dataclass(frozen=True)
class OrderRelation:
    """The induced partial order ``a <= b`` iff ``a + c = b`` for some ``c``."""

    leq: tuple[tuple[bool, ...], ...]

    @property
    def size(self) -> int:
        return len(self.leq)

    def upper_bounds(self, a: int, b: int) -> list[int]:
        return [c for c in range(self.size) if self.leq[a][c] and self.leq[b][c]]

    def lower_bounds(self, a: int, b: int) -> list[int]:
        return [c for c in range(self.size) if self.leq[c][a] and self.leq[c][b]]

    def join(self, a: int, b: int) -> int | None:
        ub = self.upper_bounds(a, b)
        least = [c for c in ub if all(self.leq[c][d] for d in ub)]
        return least[0] if least else None

    def meet(self, a: int, b: int) -> int | None:
        lb = self.lower_bounds(a, b)
        greatest = [c for c in lb if all(self.leq[d][c] for d in lb)]
        return greatest[0] if greatest else None

    def comparable(self, a: int, b: int) -> bool:
        return self.leq[a][b] or self.leq[b][a]


def derive_order(table: EffectAlgebra) -> OrderRelation:
    n = table.size
    leq = [[False] * n for _ in range(n)]
    for a in range(n):
        for c in range(n):
            b = table.add(a, c)
            if b is not None:
                leq[a][b] = True
    for a in range(n):
        for b in range(n):
            if a != b and leq[a][b] and leq[b][a]:
                raise AssertionError(f"order not antisymmetric on {a}, {b}")
    return OrderRelation(tuple(tuple(r) for r in leq))


@dataclass(frozen=True)
class RdpWitness:
    """Outcome of the Riesz decomposition check.

    ``splitting`` is a triple ``(x, y1, y2)`` with ``x <= y1 + y2`` that
    cannot be split; ``refinement`` a quadruple ``(x1, x2, y1, y2)`` with
    ``x1 + x2 = y1 + y2`` and no refinement matrix. Both are None when
    the property holds.
    """

    confirmed: bool
    splitting: tuple[int, int, int] | None = None
    refinement: tuple[int, int, int, int] | None = None


def _first_splitting_failure(table: EffectAlgebra):
    n, leq, diff = table.size, table.order.leq, table.differences
    for x in range(n):
        for y1 in range(n):
            for y2 in range(n):
                s = table.add(y1, y2)
                if s is None or not leq[x][s]:
                    continue
                ok = False
                for x1 in range(n):
                    if leq[x1][y1] and leq[x1][x]:
                        x2 = diff[x][x1]
                        if leq[x2][y2]:
                            ok = True
                            break
                if not ok:
                    return (x, y1, y2)
    return None


def _first_refinement_failure(table: EffectAlgebra):
    n, leq, diff = table.size, table.order.leq, table.differences
    for x1 in range(n):
        for x2 in range(n):
            s = table.add(x1, x2)
            if s is None:
                continue
            for y1 in range(n):
                if not leq[y1][s]:
                    continue
                y2 = diff[s][y1]
                ok = False
                for c11 in range(n):
                    if not (leq[c11][x1] and leq[c11][y1]):
                        continue
                    c12 = diff[x1][c11]
                    c21 = diff[y1][c11]
                    if not leq[c21][x2]:
                        continue
                    c22 = diff[x2][c21]
                    if table.add(c12, c22) == y2:
                        ok = True
                        break
                if not ok:
                    return (x1, x2, y1, y2)
    return None


def check_rdp(table: EffectAlgebra) -> RdpWitness:
    """Decide the Riesz decomposition property both ways and cross-check."""
    split = _first_splitting_failure(table)
    refine = _first_refinement_failure(table)
    if (split is None) != (refine is None):
        raise AssertionError(
            f"RDP formulations disagree: splitting={split}, refinement={refine}")
    return RdpWitness(split is None, split, refine)


def is_lattice(order: OrderRelation) -> tuple[bool, tuple[int, int] | None]:
    """Whether every pair has a join and a meet; else the first bad pair."""
    n = order.size
    for a in range(n):
        for b in range(a + 1, n):
            if order.join(a, b) is None or order.meet(a, b) is None:
                return False, (a, b)
    return True, None


@dataclass(frozen=True)
class MvStructure:
    """Total MV operations on the element ids of an effect algebra."""

    oplus: tuple[tuple[int, ...], ...]
    star: tuple[int, ...]
    zero: int

    @property
    def one(self) -> int:
        return self.star[self.zero]

    def odot(self, a: int, b: int) -> int:
        return self.star[self.oplus[self.star[a]][self.star[b]]]


def _mv_axiom_failure(mv: MvStructure) -> str | None:
    n = len(mv.star)
    op, st, z = mv.oplus, mv.star, mv.zero
    one = st[z]
    for x in range(n):
        if op[x][z] != x:
            return f"{x} (+) 0 != {x}"
        if st[st[x]] != x:
            return f"{x}** != {x}"
        if op[x][one] != one:
            return f"{x} (+) 1 != 1"
        for y in range(n):
            if op[x][y] != op[y][x]:
                return f"(+) not commutative on {x}, {y}"
            if op[x][st[op[x][st[y]]]] != op[y][st[op[y][st[x]]]]:
                return f"Lukasiewicz axiom fails on {x}, {y}"
            for w in range(n):
                if op[op[x][y]][w] != op[x][op[y][w]]:
                    return f"(+) not associative on {x}, {y}, {w}"
    return None


def to_mv(table: EffectAlgebra) -> MvStructure:
    """Convert a lattice-ordered effect algebra with RDP into an MV-algebra.

    Uses ``x (+) y = x + (y ^ x')`` and ``x* = x'``. Raises :class:`NotMv`
    naming the failed precondition or axiom.
    """
    order = table.order
    lattice, pair = is_lattice(order)
    if not lattice:
        raise NotMv("NotLattice", f"no join or meet for {pair}")
    rdp = check_rdp(table)
    if not rdp.confirmed:
        raise NotMv("NoRdp", f"splitting fails at {rdp.splitting}")
    n, comp = table.size, table.complement
    oplus = []
    for x in range(n):
        row = []
        for y in range(n):
            s = table.add(x, order.meet(y, comp[x]))
            if s is None:
                raise NotMv("AxiomFailure", f"{x} (+) {y} undefined")
            row.append(s)
        oplus.append(tuple(row))
    mv = MvStructure(tuple(oplus), comp, table.zero)
    failure = _mv_axiom_failure(mv)
    if failure:
        raise NotMv("AxiomFailure", failure)
    for a in range(n):
        for b in range(n):
            partial = table.add(a, b)
            if (partial is not None) != order.leq[a][comp[b]]:
                raise NotMv("AxiomFailure", f"domain of + differs at {a}, {b}")
            if partial is not None and partial != mv.oplus[a][b]:
                raise NotMv("AxiomFailure", f"{a}+{b} differs from (+)")
    return mv


@dataclass(frozen=True)
class SubalgebraEmbedding:
    """A sub-effect algebra given by ambient ids, in the stored order."""

    ambient: EffectAlgebra = field(repr=False, compare=False)
    subset: tuple[int, ...]
    table: EffectAlgebra = field(repr=False, compare=False)

    def local_id(self, ambient_id: int) -> int:
        return self.subset.index(ambient_id)


def is_subalgebra(table: EffectAlgebra, subset: Iterable[int]) -> SubalgebraEmbedding:
    """Check closure and return the embedding with its induced table."""
    ids = list(dict.fromkeys(subset))
    for i in ids:
        if not isinstance(i, int) or not 0 <= i < table.size:
            raise NotSubalgebra(f"element {i!r} out of range")
    members = set(ids)
    if table.zero not in members or table.one not in members:
        raise NotSubalgebra("must contain zero and one")
    for a in ids:
        if table.complement[a] not in members:
            raise NotSubalgebra(f"missing complement of {a}")
    for a in ids:
        for b in ids:
            c = table.add(a, b)
            if c is not None and c not in members:
                raise NotSubalgebra(f"{a}+{b}={c} leaves the subset")
    local = {a: i for i, a in enumerate(ids)}
    sums = []
    for a in ids:
        for b in ids:
            c = table.add(a, b)
            if c is not None and local[a] <= local[b]:
                sums.append((local[a], local[b], local[c]))
    try:
        induced = EffectAlgebra(len(ids), local[table.zero], local[table.one], sums,
                                [table.labels[a] for a in ids])
    except ValidationError as exc:
        raise NotSubalgebra(f"induced table invalid: {exc}") from exc
    return SubalgebraEmbedding(table, tuple(ids), induced)


def enumerate_subalgebras(table: EffectAlgebra, max_size: int = 12) -> list[SubalgebraEmbedding]:
    """All sub-effect algebras, ordered by size then by sorted ids."""
    if table.size > max_size:
        raise SizeBoundExceeded(
            f"algebra has {table.size} elements, bound is {max_size}")
    middle = [a for a in range(table.size) if a not in (table.zero, table.one)]
    found = []
    for k in range(len(middle) + 1):
        for combo in itertools.combinations(middle, k):
            subset = sorted((table.zero, table.one) + combo)
            try:
                found.append(is_subalgebra(table, subset))
            except NotSubalgebra:
                continue
    found.sort(key=lambda e: (len(e.subset), e.subset))
    return found
