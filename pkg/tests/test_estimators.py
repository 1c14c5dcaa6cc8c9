from fractions import Fraction

import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError

from effectstates import NotAState, StateExtender, StateSpaceDecomposer, io
from effectstates.sampling import random_points


def test_params_and_clone():
    d = StateSpaceDecomposer(require_unique=True)
    assert d.get_params() == {"require_unique": True}
    assert clone(d).get_params() == {"require_unique": True}
    e = StateExtender(subalgebra=("a1", "a4")).set_params(subalgebra=("a2", "a3"))
    assert e.subalgebra == ("a2", "a3")


def test_not_fitted():
    with pytest.raises(NotFittedError):
        StateSpaceDecomposer().transform([[0, 1]])


def test_round_trip_on_simplex():
    t = io.load_fixture("boolean_2x2x2")
    d = StateSpaceDecomposer(require_unique=True).fit(t)
    assert d.n_features_in_ == 8
    assert d.classification_.kind == "Simplex"
    X = np.array(random_points(d.polytope_.vertices, 5, seed=2), dtype=object)
    W = d.transform(X)
    assert W.shape == (5, 3)
    assert all(sum(row) == 1 for row in W)
    assert (d.inverse_transform(W) == X).all()
    assert list(d.get_feature_names_out()) == ["vertex0", "vertex1", "vertex2"]


def test_strings_accepted():
    t = io.load_fixture("chain_3")
    d = StateSpaceDecomposer().fit(t)
    assert d.transform([["0/1", "1/2", "1"]]).tolist() == [[Fraction(1)]]


def test_floats_rejected():
    d = StateSpaceDecomposer().fit(io.load_fixture("chain_3"))
    with pytest.raises(TypeError):
        d.transform(np.array([[0.0, 0.5, 1.0]]))
    with pytest.raises(TypeError):
        d.transform([[0, 0.5, 1]])


def test_wrong_width():
    d = StateSpaceDecomposer().fit(io.load_fixture("chain_3"))
    with pytest.raises(ValueError):
        d.transform([[0, 1]])


def test_require_unique_on_square():
    sq = io.load_fixture("mo2")
    centre = [[0, "1/2", "1/2", "1/2", "1/2", 1]]
    assert StateSpaceDecomposer().fit(sq).transform(centre).shape == (1, 4)
    with pytest.raises(ValueError):
        StateSpaceDecomposer(require_unique=True).fit(sq).transform(centre)


def test_fit_on_group_and_dict():
    d = StateSpaceDecomposer().fit(io.load_fixture("example_6_2"))
    assert d.classification_.kind == "NotSimplex" and d.rdp_ is None
    raw = {"size": 3, "zero": 0, "one": 2, "sums": [[1, 1, 2]]}
    assert StateSpaceDecomposer().fit(raw).vertices_.tolist() == [[0, Fraction(1, 2), 1]]


def test_extender():
    mo2 = io.load_fixture("mo2")
    e = StateExtender(subalgebra=["a1", "a4"]).fit(mo2)
    assert list(e.feature_names_in_) == ["0", "a1", "a4", "1"]
    out = e.transform([[0, "7/10", "3/10", 1]])
    assert out.shape == (1, 6)
    assert out[0, 1] == Fraction(7, 10) and out[0, 4] == Fraction(3, 10)
    with pytest.raises(NotAState):
        e.transform([[0, "7/10", "7/10", 1]])


def test_extender_infeasible():
    t = io.load_fixture("stateless")
    e = StateExtender().fit(t)
    with pytest.raises(NotAState):
        e.transform([[0, 1]])
