"""Exact rationals, linear algebra, the simplex method and vertex enumeration."""
import itertools
from fractions import Fraction

import numpy as np
import pytest
import sympy
from hypothesis import assume, given, settings
from hypothesis import strategies as st
from scipy.optimize import linprog

from effectstates import linalg
from effectstates.lp import solve_lp, verify_farkas
from effectstates.polytope import (HPolytope, UnboundedRegion, VPolytope, affine_dimension,
                                   enumerate_vertices)
from effectstates.rational import format_fraction, parse_fraction, primitive, sign_normalized, to_fraction

small = st.integers(-4, 4)


def matrices(rows, cols):
    return st.lists(st.lists(small, min_size=cols, max_size=cols), min_size=rows, max_size=rows)


# --- rationals ----------------------------------------------------------------------------

@pytest.mark.parametrize("value,text", [
    (Fraction(3), "3/1"), (Fraction(0), "0/1"), (Fraction(-2, 4), "-1/2"), (Fraction(7, 10), "7/10"),
])
def test_format(value, text):
    assert format_fraction(value) == text
    assert parse_fraction(text) == value


@pytest.mark.parametrize("bad", [0.5, True, "0.5", "1/0", "x"])
def test_to_fraction_rejects(bad):
    with pytest.raises((TypeError, ValueError, ZeroDivisionError)):
        to_fraction(bad)


def test_to_fraction_accepts():
    assert to_fraction("3/6") == Fraction(1, 2)
    assert to_fraction(np.int64(4)) == 4
    assert to_fraction(Fraction(1, 3)) == Fraction(1, 3)


def test_normalisations():
    assert primitive([Fraction(2, 3), Fraction(-4, 3)]) == (1, -2)
    assert sign_normalized([Fraction(0), Fraction(-2), Fraction(4)]) == (0, 1, -2)


# --- linear algebra against sympy ---------------------------------------------------------

@given(st.integers(1, 4).flatmap(lambda r: st.integers(1, 5).flatmap(lambda c: matrices(r, c))))
@settings(max_examples=80, deadline=None)
def test_rref_rank_nullspace(m):
    ref = sympy.Matrix(m)
    rows, pivots = linalg.rref(m)
    r_ref, p_ref = ref.rref()
    assert tuple(pivots) == p_ref
    assert [[sympy.Rational(x.numerator, x.denominator) for x in r] for r in rows[:len(pivots)]] \
        == r_ref.tolist()[:len(pivots)]
    assert linalg.rank(m) == ref.rank()
    ns = linalg.nullspace(m, len(m[0]))
    assert len(ns) == len(m[0]) - ref.rank()
    for v in ns:
        assert all(x == 0 for x in linalg.matvec(m, v))
    if ns:
        assert linalg.rank(ns) == len(ns)


@given(matrices(3, 3), st.lists(small, min_size=3, max_size=3))
@settings(max_examples=60, deadline=None)
def test_solve(m, b):
    x = linalg.solve(m, b)
    consistent = sympy.Matrix(m).rank() == sympy.Matrix(m).row_join(sympy.Matrix(b)).rank()
    assert (x is not None) == consistent
    if x is not None:
        assert linalg.matvec(m, x) == [Fraction(v) for v in b]


# --- LP against scipy ---------------------------------------------------------------------

@given(st.integers(1, 3).flatmap(lambda r: st.tuples(
    matrices(r, 4), st.lists(small, min_size=r, max_size=r), st.lists(small, min_size=4, max_size=4))))
@settings(max_examples=120, deadline=None)
def test_lp_matches_scipy(data):
    A, b, c = data
    res = solve_lp(A, b, c)
    ref = linprog(c, A_eq=A, b_eq=b, bounds=[(0, None)] * 4, method="highs")
    assert res.status == {0: "optimal", 2: "infeasible", 3: "unbounded"}[ref.status]
    if res.status == "optimal":
        assert all(x >= 0 for x in res.x)
        assert linalg.matvec(A, res.x) == [Fraction(v) for v in b]
        assert abs(float(res.objective) - ref.fun) < 1e-7
    if res.status == "infeasible":
        assert verify_farkas(A, b, res.certificate)


def test_farkas_certificate():
    # x >= 0 and -x = 1
    res = solve_lp([[-1]], [1])
    assert res.status == "infeasible"
    y = res.certificate
    assert verify_farkas([[-1]], [1], y)
    assert not verify_farkas([[-1]], [1], [Fraction(1)])


def test_feasible_without_objective():
    res = solve_lp([[1, 1]], [1])
    assert res.status == "optimal" and sum(res.x) == 1


# --- vertex enumeration against brute force -----------------------------------------------

def brute_vertices(ineqs, dim):
    """Vertices of {x : a.x >= b}: feasible points where dim independent rows are tight."""
    out = set()
    for rows in itertools.combinations(ineqs, dim):
        M = sympy.Matrix([r[0] for r in rows])
        if M.rank() < dim:
            continue
        x = M.LUsolve(sympy.Matrix([r[1] for r in rows]))
        pt = tuple(Fraction(int(v.p), int(v.q)) for v in x)
        if all(sum(Fraction(a) * p for a, p in zip(r[0], pt)) >= r[1] for r in ineqs):
            out.add(pt)
    return sorted(out)


def box_plus(extra, dim):
    rows = [([int(i == j) for j in range(dim)], 0) for i in range(dim)]
    rows += [([-int(i == j) for j in range(dim)], -2) for i in range(dim)]
    return rows + extra


@given(st.integers(2, 3).flatmap(lambda d: st.tuples(st.just(d), st.lists(
    st.tuples(st.lists(small, min_size=d, max_size=d), st.integers(-4, 4)), max_size=4))))
@settings(max_examples=80, deadline=None)
def test_double_description_matches_brute_force(data):
    dim, extra = data
    ineqs = box_plus([(list(a), b) for a, b in extra], dim)
    h = HPolytope.build(dim, (), tuple((tuple(a), b) for a, b in ineqs))
    v = enumerate_vertices(h)
    assert list(v.vertices) == brute_vertices(ineqs, dim)
    for p in v.vertices:
        assert h.contains(p)


def test_equalities_eliminated():
    # simplex x + y + z = 1 in R^3
    h = HPolytope.build(3, (((1, 1, 1), 1),),
                  tuple((tuple(int(i == j) for j in range(3)), 0) for i in range(3)))
    v = enumerate_vertices(h)
    assert v.vertices == ((0, 0, 1), (0, 1, 0), (1, 0, 0))
    assert v.affine_dim == 2


def test_infeasible_is_empty():
    h = HPolytope.build(1, (), (((1,), 0), ((-1,), 1)))
    assert enumerate_vertices(h).empty


def test_unbounded_reported():
    h = HPolytope.build(1, (), (((1,), 0),))
    with pytest.raises(UnboundedRegion):
        enumerate_vertices(h)


def test_json_round_trip():
    h = HPolytope.build(2, (((1, 1), Fraction(1, 3)),), (((1, 0), 0), ((0, 1), 0)))
    assert HPolytope.from_json(h.to_json()) == h
    v = enumerate_vertices(h)
    assert VPolytope.from_json(v.to_json()) == v
    assert v.to_json()["vertices"][0] == ["0/1", "1/3"]


def test_affine_dimension():
    assert affine_dimension([(0, 0), (1, 1), (2, 2)]) == 1
    assert affine_dimension([(0, 0)]) == 0
    assert affine_dimension([]) == -1


@given(st.lists(st.tuples(small, small, small), min_size=1, max_size=6))
@settings(max_examples=40, deadline=None)
def test_duplicate_rows_removed(rows):
    assume(any(any(r) for r in rows))
    ineqs = tuple((r, 0) for r in rows)
    once = HPolytope.build(3, (), ineqs)
    twice = HPolytope.build(3, (), ineqs + tuple((tuple(2 * x for x in r), 0) for r in rows))
    assert once == twice
