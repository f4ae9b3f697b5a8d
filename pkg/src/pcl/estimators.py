"""scikit-learn style wrappers around the two learners.

Both estimators expect binary feature matrices and binary labels; the
fitted rule sets are exposed as literal masks via ``rules_``.
"""

from __future__ import annotations

import numbers

import numpy as np
from sklearn.base import BaseEstimator, ClassifierMixin
from sklearn.utils.validation import check_is_fitted, check_X_y, check_array

from .automata import InitPolicy
from .boolean import format_mask, make_sample
from .machine import PCLMachine
from .tm import TMMachine


def _check_binary(arr, name):
    if not np.isin(arr, (0, 1)).all():
        raise ValueError(f"{name} must contain only 0s and 1s")


def _seed_from(random_state) -> int | None:
    if random_state is None or isinstance(random_state, numbers.Integral):
        return None if random_state is None else int(random_state)
    # accept a np.random.RandomState / Generator for sklearn compatibility
    return int(random_state.randint(2 ** 31)
               if hasattr(random_state, "randint")
               else random_state.integers(2 ** 31))


class PCLClassifier(ClassifierMixin, BaseEstimator):
    """DNF classifier trained by probabilistic literal inclusion.

    Parameters
    ----------
    n_clauses : number of conjunctive clauses in the learned disjunction.
    inclusion_prob : per-clause inclusion probability p, a scalar shared
        by all clauses or a sequence of length ``n_clauses``.  Exact
        single-clause recovery is expected for 0.5 < p < 1.
    n_states : automaton half size N (each automaton has 2N states).
    epochs : training passes over the data per ``fit``.
    shuffle : reshuffle the sample order each epoch.
    init_policy : initial automaton state distribution.
    """

    def __init__(self, n_clauses=1, inclusion_prob=0.75, n_states=8,
                 epochs=100, shuffle=False,
                 init_policy=InitPolicy.FIFTY_FIFTY, random_state=None):
        self.n_clauses = n_clauses
        self.inclusion_prob = inclusion_prob
        self.n_states = n_states
        self.epochs = epochs
        self.shuffle = shuffle
        self.init_policy = init_policy
        self.random_state = random_state

    def fit(self, X, y):
        X, y = check_X_y(X, y)
        _check_binary(X, "X")
        _check_binary(y, "y")
        self.classes_ = np.array([0, 1])
        self.n_features_in_ = X.shape[1]
        self.machine_ = PCLMachine(
            n=X.shape[1], n_clauses=self.n_clauses,
            p=self.inclusion_prob, half_size=self.n_states,
            init=InitPolicy(self.init_policy),
            seed=_seed_from(self.random_state))
        dataset = [make_sample(row, label) for row, label in zip(X, y)]
        self.machine_.train_epochs(dataset, self.epochs,
                                   shuffle=self.shuffle)
        return self

    def predict(self, X):
        check_is_fitted(self, "machine_")
        X = check_array(X)
        _check_binary(X, "X")
        return np.array([self.machine_.classify(tuple(int(b) for b in row))
                         for row in X])

    @property
    def rules_(self):
        check_is_fitted(self, "machine_")
        return [format_mask(c.extract_mask(), self.machine_.n)
                for c in self.machine_.clauses]


class TsetlinMachineClassifier(ClassifierMixin, BaseEstimator):
    """Vanilla Tsetlin Machine with polarity clauses and majority vote.

    ``threshold`` is the voting margin T, ``specificity`` the s
    parameter of Type I feedback.
    """

    def __init__(self, n_clauses=2, threshold=1, specificity=3.9,
                 n_states=8, epochs=100, boost_true_positive=False,
                 random_state=None):
        self.n_clauses = n_clauses
        self.threshold = threshold
        self.specificity = specificity
        self.n_states = n_states
        self.epochs = epochs
        self.boost_true_positive = boost_true_positive
        self.random_state = random_state

    def fit(self, X, y):
        X, y = check_X_y(X, y)
        _check_binary(X, "X")
        _check_binary(y, "y")
        self.classes_ = np.array([0, 1])
        self.n_features_in_ = X.shape[1]
        self.machine_ = TMMachine(
            n=X.shape[1], n_clauses=self.n_clauses, T=self.threshold,
            s=self.specificity, half_size=self.n_states,
            boost_true_positive=self.boost_true_positive,
            seed=_seed_from(self.random_state))
        dataset = [(tuple(int(b) for b in row), int(label))
                   for row, label in zip(X, y)]
        self.machine_.train_epochs(dataset, self.epochs)
        return self

    def predict(self, X):
        check_is_fitted(self, "machine_")
        X = check_array(X)
        _check_binary(X, "X")
        return np.array([self.machine_.classify(tuple(int(b) for b in row))
                         for row in X])
