"""Input validation helpers for the estimator API."""
from __future__ import annotations

import numpy as np

from .algebra import EffectAlgebra, validate_effect_algebra
from .pogroup import LexPresentation, UnitalPoGroupPresentation
from .rational import to_fraction


def check_rational_array(X, n_features: int | None = None, name: str = "X") -> np.ndarray:
    """Convert a 2-D array-like of exact rationals to an object array of Fractions.

    Accepts ints, Fractions and ``"p/q"`` strings. Floats are rejected
    since they cannot be interpreted exactly.
    """
    if isinstance(X, np.ndarray) and X.dtype.kind == "f":
        raise TypeError(f"{name} has a floating dtype; pass Fractions, ints or 'p/q' strings")
    rows = [list(r) for r in X]
    if not rows:
        raise ValueError(f"{name} is empty")
    width = len(rows[0])
    if any(len(r) != width for r in rows):
        raise ValueError(f"{name} is ragged")
    if n_features is not None and width != n_features:
        raise ValueError(f"{name} has {width} features, expected {n_features}")
    out = np.empty((len(rows), width), dtype=object)
    for i, r in enumerate(rows):
        for j, v in enumerate(r):
            if isinstance(v, float):
                raise TypeError(f"{name}[{i}, {j}] is a float; exact rationals required")
            out[i, j] = to_fraction(v)
    return out


def check_structure(X):
    """Accept an effect algebra, a po-group presentation, or a fixture mapping."""
    if isinstance(X, (EffectAlgebra, UnitalPoGroupPresentation, LexPresentation)):
        return X
    if isinstance(X, dict):
        from .io import algebra_from_json, group_from_json, is_group_data
        return group_from_json(X) if is_group_data(X) else algebra_from_json(X)
    raise TypeError(f"expected an EffectAlgebra, a po-group presentation or a dict, "
                    f"got {type(X).__name__}")


def check_algebra(X) -> EffectAlgebra:
    if isinstance(X, dict):
        return validate_effect_algebra(X)
    if not isinstance(X, EffectAlgebra):
        raise TypeError(f"expected an EffectAlgebra, got {type(X).__name__}")
    return X

