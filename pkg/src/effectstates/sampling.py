"""Seeded random rational points in a polytope.

A point is a convex combination of the vertices whose weights are small
random integers ``k_i`` normalised by their sum, so every coordinate has a
small denominator. ``random.Random(seed)`` drives the draws and the output
depends only on the seed and the vertex list.
"""
from __future__ import annotations

import random
from fractions import Fraction
from typing import Sequence


def random_weights(rng: random.Random, k: int, interior: bool = False,
                   high: int = 6) -> tuple[Fraction, ...]:
    low = 1 if interior else 0
    while True:
        raw = [rng.randint(low, high) for _ in range(k)]
        total = sum(raw)
        if total:
            return tuple(Fraction(x, total) for x in raw)


def combine(vertices: Sequence[Sequence[Fraction]], weights: Sequence[Fraction]) -> tuple:
    dim = len(vertices[0])
    return tuple(sum((w * v[j] for w, v in zip(weights, vertices)), Fraction(0))
                 for j in range(dim))


def random_points(vertices: Sequence[Sequence[Fraction]], count: int, seed: int = 0,
                  interior: bool = False) -> list[tuple]:
    """``count`` random rational convex combinations of ``vertices``."""
    if not vertices:
        return []
    rng = random.Random(seed)
    return [combine(vertices, random_weights(rng, len(vertices), interior))
            for _ in range(count)]
