"""Exhaustive enumeration of small effect algebras up to isomorphism.

For elements other than 0 and 1, ``x + y = z`` holds exactly when
``x + y + z' = 1``. A finite effect algebra is therefore fixed by its
complement involution together with the set of multisets ``{x, y, w}`` of
middle elements summing to 1, where no two positions of a multiset hold
complementary elements and two multisets never share a pair. Candidates
satisfying these local rules are generated by backtracking and then
validated in full; survivors are deduplicated by a canonical form. Up to
isomorphism only the number of complementary pairs matters, so one
involution per cycle type is tried.
"""
from __future__ import annotations

import itertools
from typing import Iterator

from .algebra import EffectAlgebra, ValidationError

__all__ = ["canonical_form", "is_isomorphic", "find_isomorphism", "enumerate_effect_algebras",
           "involutions"]


def canonical_form(table: EffectAlgebra) -> tuple:
    """Smallest relabelled triple list over all orderings of the middle elements."""
    n = table.size
    middle = [a for a in range(n) if a not in (table.zero, table.one)]
    triples = table.sum_triples()
    best = None
    for perm in itertools.permutations(range(1, n - 1)):
        m = {table.zero: 0, table.one: n - 1}
        m.update(zip(middle, perm))
        key = tuple(sorted(tuple(sorted((m[a], m[b]))) + (m[c],) for a, b, c in triples))
        if best is None or key < best:
            best = key
    return (n, best)


def find_isomorphism(a: EffectAlgebra, b: EffectAlgebra) -> dict[int, int] | None:
    """A bijection ``a -> b`` preserving 0, 1 and all sums, if one exists."""
    if a.size != b.size:
        return None
    ma = [x for x in range(a.size) if x not in (a.zero, a.one)]
    mb = [x for x in range(b.size) if x not in (b.zero, b.one)]
    for perm in itertools.permutations(mb):
        m = {a.zero: b.zero, a.one: b.one}
        m.update(zip(ma, perm))
        if all(b.add(m[x], m[y]) == (None if a.add(x, y) is None else m[a.add(x, y)])
               for x in range(a.size) for y in range(a.size)):
            return m
    return None


def is_isomorphic(a: EffectAlgebra, b: EffectAlgebra) -> bool:
    return find_isomorphism(a, b) is not None


def involutions(items: list[int]) -> Iterator[dict[int, int]]:
    """All involutions of ``items`` (fixed points allowed)."""
    if not items:
        yield {}
        return
    first, rest = items[0], items[1:]
    for sub in involutions(rest):
        yield {first: first, **sub}
    for i, partner in enumerate(rest):
        remaining = rest[:i] + rest[i + 1:]
        for sub in involutions(remaining):
            yield {first: partner, partner: first, **sub}


def _candidate_triples(middle, comp):
    out = []
    for t in itertools.combinations_with_replacement(middle, 3):
        if any(comp[t[i]] == t[j] for i in range(3) for j in range(3) if i != j):
            continue
        pairs = {tuple(sorted((t[i], t[j]))) for i, j in ((0, 1), (0, 2), (1, 2))}
        out.append((t, frozenset(pairs)))
    return out


def _tables_for(n: int, comp: dict[int, int]) -> Iterator[EffectAlgebra]:
    zero, one = 0, n - 1
    middle = list(range(1, n - 1))
    cands = _candidate_triples(middle, comp)
    base = [(a, comp[a], one) for a in middle if a <= comp[a]] + [(zero, one, one)]

    def build(chosen):
        sums = list(base)
        for x, y, w in chosen:
            sums += [(x, y, comp[w]), (x, w, comp[y]), (y, w, comp[x])]
        sums = sorted(set(tuple(sorted(s[:2])) + (s[2],) for s in sums))
        try:
            return EffectAlgebra(n, zero, one, sums)
        except ValidationError:
            return None

    def rec(i, chosen, used):
        if i == len(cands):
            table = build(chosen)
            if table is not None:
                yield table
            return
        yield from rec(i + 1, chosen, used)
        t, pairs = cands[i]
        if not (pairs & used):
            yield from rec(i + 1, chosen + [t], used | pairs)

    yield from rec(0, [], frozenset())


def _standard_involutions(middle: list[int]) -> Iterator[dict[int, int]]:
    """One involution per conjugacy class: pairs (1,2), (3,4), ... then fixed points."""
    for k in range(len(middle) // 2 + 1):
        comp = {x: x for x in middle}
        for i in range(k):
            a, b = middle[2 * i], middle[2 * i + 1]
            comp[a], comp[b] = b, a
        yield comp


def enumerate_effect_algebras(n: int) -> list[EffectAlgebra]:
    """One representative per isomorphism class of effect algebras of size ``n``."""
    if n < 2:
        return []
    seen: dict[tuple, EffectAlgebra] = {}
    for comp in _standard_involutions(list(range(1, n - 1))):
        for table in _tables_for(n, comp):
            key = canonical_form(table)
            if key not in seen:
                seen[key] = table
    return [seen[k] for k in sorted(seen)]
