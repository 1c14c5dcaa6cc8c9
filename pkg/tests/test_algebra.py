import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import chain
from effectstates import (
    AssociativityViolation, CommutativityViolation, ComplementViolation, DegenerateAlgebra,
    EffectAlgebra, InconsistentSum, NotMv, NotSubalgebra, SizeBoundExceeded, ZeroOneViolation,
    check_rdp, derive_order, enumerate_effect_algebras, enumerate_subalgebras, io, is_lattice,
    is_subalgebra, to_mv, validate_effect_algebra,
)
from effectstates.enumeration import canonical_form


# --- independent brute-force oracle -------------------------------------------------------

def naive_is_effect_algebra(n, table):
    """Check the four axioms straight from the definitions. ``table`` maps (a, b) -> c."""
    zero, one = 0, n - 1
    add = lambda a, b: table.get((a, b))  # noqa: E731
    for a in range(n):
        for b in range(n):
            if add(a, b) != add(b, a):
                return False
            for c in range(n):
                ab = add(a, b)
                lhs = add(ab, c) if ab is not None else None
                bc = add(b, c)
                rhs = add(a, bc) if bc is not None else None
                if ab is not None and lhs is not None and rhs != lhs:
                    return False
        if sum(1 for b in range(n) if add(a, b) == one) != 1:
            return False
        if add(a, one) is not None and a != zero:
            return False
    return True


def naive_effect_algebras(n):
    """Every partial sum table on {0..n-1} with 0 and n-1 as zero and one, up to isomorphism."""
    mids = list(range(1, n - 1))
    pairs = [(a, b) for a in mids for b in mids if a <= b]
    found = set()
    for choice in itertools.product([None, *range(1, n)], repeat=len(pairs)):
        table = {}
        for x in range(n):
            table[(0, x)] = table[(x, 0)] = x
        for (a, b), c in zip(pairs, choice):
            if c is not None:
                table[(a, b)] = table[(b, a)] = c
        if not naive_is_effect_algebra(n, table):
            continue
        forms = []
        for perm in itertools.permutations(mids):
            m = {0: 0, n - 1: n - 1, **dict(zip(mids, perm))}
            forms.append(tuple(sorted((m[a], m[b], m[c]) for (a, b), c in table.items()
                                      if 0 not in (a, b))))
        found.add(min(forms))
    return found


def naive_leq(t, a, b):
    return any(t.add(a, c) == b for c in range(t.size))


def naive_rdp(t):
    n = t.size
    for x, y1, y2 in itertools.product(range(n), repeat=3):
        s = t.add(y1, y2)
        if s is None or not naive_leq(t, x, s):
            continue
        if not any(t.add(x1, x2) == x and naive_leq(t, x1, y1) and naive_leq(t, x2, y2)
                   for x1 in range(n) for x2 in range(n)):
            return False
    return True


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_enumeration_matches_brute_force(n):
    expected = naive_effect_algebras(n)
    got = enumerate_effect_algebras(n)
    assert len(got) == len(expected)
    assert len({canonical_form(t) for t in got}) == len(got)


def test_enumeration_counts():
    assert [len(enumerate_effect_algebras(n)) for n in range(2, 8)] == [1, 1, 3, 4, 10, 14]


# --- validation ---------------------------------------------------------------------------

def test_boolean_2x2_valid():
    t = validate_effect_algebra({"size": 4, "zero": 0, "one": 3, "sums": [[1, 2, 3]]})
    assert t.complement == (3, 2, 1, 0)


def test_mo2_valid(mo2):
    assert mo2.size == 6
    assert mo2.complement[mo2.id_of("a1")] == mo2.id_of("a4")
    assert mo2.complement[mo2.id_of("a2")] == mo2.id_of("a3")


def test_zero_one_violation():
    with pytest.raises(ZeroOneViolation) as exc:
        EffectAlgebra(4, 0, 3, [(1, 2, 3), (1, 3, 3)])
    assert exc.value.axiom == "(iv)"
    assert 1 in exc.value.elements


def test_complement_missing():
    with pytest.raises(ComplementViolation) as exc:
        EffectAlgebra(3, 0, 2, [])
    assert exc.value.axiom == "(iii)"


def test_complement_not_unique():
    with pytest.raises(ComplementViolation):
        EffectAlgebra(4, 0, 3, [(1, 2, 3), (1, 1, 3)])


def test_associativity_violation():
    # 1+1 = 2 and 2+1 = 4 but 1+2 is undefined on the other bracketing
    with pytest.raises(AssociativityViolation) as exc:
        EffectAlgebra(5, 0, 4, [(1, 1, 2), (2, 2, 4), (1, 3, 4)])
    assert exc.value.axiom == "(ii)"


def test_inconsistent_sum():
    with pytest.raises(InconsistentSum):
        EffectAlgebra(4, 0, 3, [(1, 2, 3), (1, 2, 2)])


def test_commutativity_violation_from_dict():
    raw = {"size": 4, "zero": 0, "one": 3, "sums": [[1, 2, 3], [2, 1, 2]]}
    with pytest.raises(CommutativityViolation) as exc:
        validate_effect_algebra(raw)
    assert exc.value.axiom == "(i)"
    assert set(exc.value.elements) == {1, 2}


def test_both_orders_listed_is_fine():
    raw = {"size": 4, "zero": 0, "one": 3, "sums": [[1, 2, 3], [2, 1, 3], [1, 1, 2]]}
    assert validate_effect_algebra(raw).size == 4


def test_degenerate():
    with pytest.raises(DegenerateAlgebra):
        EffectAlgebra(1, 0, 0, [])


# --- order --------------------------------------------------------------------------------

def test_chain_order():
    t = io.load_fixture("chain_3")
    o = derive_order(t)
    m = t.id_of("m")
    assert o.leq[m][t.one] and not o.leq[t.one][m]


def test_mo2_incomparable(mo2):
    o = derive_order(mo2)
    assert not o.comparable(mo2.id_of("a1"), mo2.id_of("a2"))


@pytest.mark.parametrize("name", ["mo2", "chain_6", "boolean_2x2x2", "chain_3x3", "twin_chains"])
def test_order_matches_definition(name):
    t = io.load_fixture(name)
    o = derive_order(t)
    for a in range(t.size):
        assert o.leq[t.zero][a] and o.leq[a][t.one]
        for b in range(t.size):
            assert o.leq[a][b] == naive_leq(t, a, b)
            if a != b:
                assert not (o.leq[a][b] and o.leq[b][a])


# --- RDP ----------------------------------------------------------------------------------

@pytest.mark.parametrize("name,expected", [
    ("boolean_2x2", True), ("mo2", False), ("chain_4", True), ("chain_3x3", True),
    ("twin_chains", False),
])
def test_rdp_fixtures(name, expected):
    t = io.load_fixture(name)
    w = check_rdp(t)
    assert w.confirmed is expected
    assert naive_rdp(t) is expected
    if not expected:
        x, y1, y2 = w.splitting
        assert naive_leq(t, x, t.add(y1, y2))


def test_rdp_two_formulations_agree_up_to_size_8():
    # check_rdp decides both formulations and raises if they disagree
    for n in range(2, 9):
        for t in enumerate_effect_algebras(n):
            w = check_rdp(t)
            assert (w.splitting is None) == (w.refinement is None) == w.confirmed
            if n <= 6:
                assert w.confirmed == naive_rdp(t)


# --- lattices and MV ----------------------------------------------------------------------

def test_lattices(mo2):
    assert is_lattice(derive_order(chain(4)))[0]
    assert is_lattice(derive_order(mo2))[0]
    o = derive_order(mo2)
    assert o.join(mo2.id_of("a1"), mo2.id_of("a2")) == mo2.one


def test_twin_chain_is_lattice_without_rdp():
    t = io.load_fixture("twin_chains")
    with pytest.raises(NotMv) as exc:
        to_mv(t)
    assert exc.value.reason == "NoRdp"


def test_mo2_not_mv(mo2):
    with pytest.raises(NotMv) as exc:
        to_mv(mo2)
    assert exc.value.reason == "NoRdp"


def test_chain3_mv():
    t = io.load_fixture("chain_3")
    mv = to_mv(t)
    m = t.id_of("m")
    assert mv.oplus[m][m] == t.one
    assert mv.star[m] == m


def test_boolean_mv_is_join():
    t = io.load_fixture("boolean_2x2x2")
    mv = to_mv(t)
    o = derive_order(t)
    for a in range(t.size):
        for b in range(t.size):
            assert mv.oplus[a][b] == o.join(a, b)


def test_non_lattice_reports_reason():
    # two incomparable atoms below two incomparable coatoms, no join
    found = None
    for n in range(2, 8):
        for t in enumerate_effect_algebras(n):
            if not is_lattice(derive_order(t))[0]:
                found = t
                break
        if found:
            break
    assert found is not None
    with pytest.raises(NotMv) as exc:
        to_mv(found)
    assert exc.value.reason == "NotLattice"


@pytest.mark.parametrize("name", ["chain_2", "chain_5", "chain_6", "boolean_2x2x2", "chain_3x3"])
def test_mv_properties(name):
    t = io.load_fixture(name)
    mv = to_mv(t)
    o = derive_order(t)
    n = t.size
    op = mv.oplus
    for a in range(n):
        for b in range(n):
            assert op[a][b] == op[b][a]
            if o.leq[a][t.complement[b]]:
                assert t.add(a, b) == op[a][b]
            else:
                assert t.add(a, b) is None
            for c in range(n):
                assert op[op[a][b]][c] == op[a][op[b][c]]
                if o.leq[a][b]:
                    assert o.leq[op[a][c]][op[b][c]]


# --- subalgebras --------------------------------------------------------------------------

def test_subalgebra_examples(mo2):
    ids = lambda *ls: sorted(mo2.id_of(x) for x in ls)  # noqa: E731
    assert is_subalgebra(mo2, ids("0", "1")).subset == (0, 5)
    assert is_subalgebra(mo2, ids("0", "a1", "a4", "1")).table.size == 4
    with pytest.raises(NotSubalgebra):
        is_subalgebra(mo2, ids("0", "a1", "1"))


@pytest.mark.parametrize("name,expected", [
    ("chain_3", [(0, 2), (0, 1, 2)]),
    ("mo2", [(0, 5), (0, 1, 4, 5), (0, 2, 3, 5), (0, 1, 2, 3, 4, 5)]),
    ("boolean_2x2", [(0, 3), (0, 1, 2, 3)]),
])
def test_enumerate_subalgebras(name, expected):
    assert [s.subset for s in enumerate_subalgebras(io.load_fixture(name))] == expected


def test_subalgebra_size_bound():
    with pytest.raises(SizeBoundExceeded):
        enumerate_subalgebras(chain(12))


@pytest.mark.parametrize("name", ["boolean_2x2x2", "chain_3x3", "mo2", "chain_6"])
def test_subalgebras_revalidate(name):
    t = io.load_fixture(name)
    for s in enumerate_subalgebras(t):
        d = s.table.to_dict()
        assert validate_effect_algebra(d) == s.table


# --- properties ---------------------------------------------------------------------------

small_algebras = [t for n in range(2, 7) for t in enumerate_effect_algebras(n)]


@given(st.sampled_from(small_algebras), st.randoms(use_true_random=False))
@settings(max_examples=60, deadline=None)
def test_relabelling_preserves_structure(t, rnd):
    perm = list(range(t.size))
    rnd.shuffle(perm)
    u = t.relabel(perm)
    assert canonical_form(u) == canonical_form(t)
    assert check_rdp(u).confirmed == check_rdp(t).confirmed
    assert is_lattice(derive_order(u))[0] == is_lattice(derive_order(t))[0]


@given(st.sampled_from(small_algebras))
@settings(max_examples=40, deadline=None)
def test_complement_involution(t):
    c = t.complement
    assert all(c[c[a]] == a for a in range(t.size))
    assert c[t.zero] == t.one and c[t.one] == t.zero


@given(st.sampled_from(small_algebras))
@settings(max_examples=40, deadline=None)
def test_round_trip_dict(t):
    assert validate_effect_algebra(t.to_dict()) == t


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_chain_oplus_is_truncated_sum(n):
    t = chain(n)
    mv = to_mv(t)
    for i in range(n + 1):
        assert mv.star[i] == n - i
        for j in range(n + 1):
            assert mv.oplus[i][j] == min(i + j, n)
            assert mv.odot(i, j) == max(i + j - n, 0)


def test_product_oplus_is_coordinatewise():
    from effectstates.pogroup import gamma_effect_algebra
    G = io.load_fixture("z2_unit22")
    t, vecs = gamma_effect_algebra(G)
    mv = to_mv(t)
    for a in range(t.size):
        for b in range(t.size):
            want = tuple(min(x + y, 2) for x, y in zip(vecs[a], vecs[b]))
            assert vecs[mv.oplus[a][b]] == want
