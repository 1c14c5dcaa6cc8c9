"""scikit-learn style estimators over state spaces.

:class:`StateSpaceDecomposer` is fitted on an effect algebra or a po-group
presentation; ``transform`` maps states (rows of exact rationals) to their
weights over the extremal states, ``inverse_transform`` maps weights back.

:class:`StateExtender` is fitted on an effect algebra with a chosen
subalgebra; ``transform`` takes states of the subalgebra (columns in the
subalgebra's element order) and returns extensions to the whole algebra.

All arrays are ``dtype=object`` holding :class:`fractions.Fraction`.
"""
from __future__ import annotations


import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .algebra import EffectAlgebra, check_rdp, is_subalgebra
from .extension import ExtensionProblem, NotAState, extend_state
from .pogroup import LexPresentation, group_state_polytope, lex_state_space
from .representation import DiscreteMeasure, decompose_state, unique_decomposition
from .statespace import EmptyStateSpace, classify_state_space, state_polytope
from .validation import check_algebra, check_rational_array, check_structure


class StateSpaceDecomposer(TransformerMixin, BaseEstimator):
    """Representing measures of states over the extremal states.

    Parameters
    ----------
    require_unique : bool, default=False
        Raise if some state has more than one representing measure.
    """

    def __init__(self, require_unique=False):
        self.require_unique = require_unique

    def fit(self, X, y=None):
        X = check_structure(X)
        if isinstance(X, EffectAlgebra):
            self.polytope_ = state_polytope(X)
            self.rdp_ = check_rdp(X)
        elif isinstance(X, LexPresentation):
            self.polytope_ = lex_state_space(X)
            self.rdp_ = None
        else:
            self.polytope_ = group_state_polytope(X)
            self.rdp_ = None
        self.structure_ = X
        self.vertices_ = np.array(self.polytope_.vertices, dtype=object).reshape(
            len(self.polytope_.vertices), self.polytope_.dimension)
        self.classification_ = classify_state_space(self.polytope_.v)
        self.feature_names_in_ = np.array(self.polytope_.coordinates, dtype=object)
        self.n_features_in_ = self.polytope_.dimension
        return self

    def transform(self, X):
        check_is_fitted(self, "polytope_")
        if self.polytope_.empty:
            raise EmptyStateSpace("the fitted structure has no states")
        X = check_rational_array(X, self.n_features_in_)
        n = len(self.polytope_.vertices)
        out = np.empty((X.shape[0], n), dtype=object)
        for i, s in enumerate(X):
            if self.require_unique:
                res = unique_decomposition(tuple(s), self.polytope_, self.classification_)
                if not res.unique:
                    raise ValueError(f"row {i} has more than one representing measure")
                m = res.measure
            else:
                m = decompose_state(tuple(s), self.polytope_)
            out[i] = m.weights(n)
        return out

    def inverse_transform(self, W):
        check_is_fitted(self, "polytope_")
        W = check_rational_array(W, len(self.polytope_.vertices), name="W")
        out = np.empty((W.shape[0], self.n_features_in_), dtype=object)
        for i, w in enumerate(W):
            m = DiscreteMeasure.from_weights(w)
            if not m.is_valid(len(self.polytope_.vertices)):
                raise ValueError(f"row {i} of W is not a probability vector")
            out[i] = m.barycenter(self.polytope_.vertices)
        return out

    def get_feature_names_out(self, input_features=None):
        check_is_fitted(self, "polytope_")
        return np.array([f"vertex{i}" for i in range(len(self.polytope_.vertices))],
                        dtype=object)


class StateExtender(TransformerMixin, BaseEstimator):
    """Extend states of a subalgebra to the ambient effect algebra.

    Parameters
    ----------
    subalgebra : sequence of int or str
        Element ids or labels of the subalgebra; zero and one are added.
    """

    def __init__(self, subalgebra=()):
        self.subalgebra = subalgebra

    def fit(self, X, y=None):
        table = check_algebra(X)
        ids = {table.id_of(k) for k in self.subalgebra} | {table.zero, table.one}
        self.embedding_ = is_subalgebra(table, sorted(ids))
        self.algebra_ = table
        self.n_features_in_ = len(self.embedding_.subset)
        self.feature_names_in_ = np.array(self.embedding_.table.labels, dtype=object)
        return self

    def transform(self, X):
        check_is_fitted(self, "embedding_")
        X = check_rational_array(X, self.n_features_in_)
        out = np.empty((X.shape[0], self.algebra_.size), dtype=object)
        for i, row in enumerate(X):
            given = dict(zip(self.embedding_.subset, row))
            res = extend_state(ExtensionProblem(self.algebra_, self.embedding_, given))
            if not res.extended:
                raise NotAState(f"row {i} does not extend; certificate {res.certificate}")
            out[i] = res.state
        return out

    def get_feature_names_out(self, input_features=None):
        check_is_fitted(self, "embedding_")
        return np.array(self.algebra_.labels, dtype=object)
