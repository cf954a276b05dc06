from typing import Dict, Tuple
import numpy as np
from sklearn.tree import DecisionTreeRegressor

from .forest_params import ForestParams
from ..core.forecast_panel import TrainingSet, frozen
from ..core.stack_exception import StackException

MAX_TREE_SEED: int = 2 ** 31 - 1
LEAF: int = -1


"""
One CART regression tree. It is grown on a bootstrap resample, but every
ORIGINAL training pattern is routed down it afterwards so each leaf
knows all the training indices (positions in the training set) it holds
"""
class RegressionTree:
    def __init__(self, estimator: DecisionTreeRegressor, targets, bootstrap_rows=None):
        self.estimator: DecisionTreeRegressor = estimator
        self.bootstrap_rows: np.ndarray = None if bootstrap_rows is None else frozen(bootstrap_rows, dtype=np.int64)
        self.leaf_of_train: np.ndarray = None
        self.node_means: np.ndarray = None
        self._targets: np.ndarray = frozen(targets)


    @property
    def n_leaves(self) -> int:
        return len(np.unique(self.leaf_of_train))


    # training indices held by every
    # populated leaf, keyed by node id
    @property
    def leaf_members(self) -> Dict[int, np.ndarray]:
        order: np.ndarray = np.argsort(self.leaf_of_train, kind="stable")
        ids, starts = np.unique(self.leaf_of_train[order], return_index=True)
        return {int(leaf): members for leaf, members in zip(ids, np.split(order, starts[1:]))}


    # (feature index, threshold) of the root
    # split, None for a single-leaf tree
    @property
    def root_split(self) -> Tuple[int, float]:
        feature: int = int(self.estimator.tree_.feature[0])

        if self.estimator.tree_.children_left[0] == LEAF:
            return None

        return feature, float(self.estimator.tree_.threshold[0])


    def leaf_of(self, inputs) -> np.ndarray:
        inputs = np.asarray(inputs, dtype=float)
        if inputs.ndim == 1:
            inputs = inputs.reshape(1, -1)

        return self.estimator.apply(inputs)


    # route the full training set down the grown
    # tree and record the mean target of every node
    def populate(self, inputs) -> None:
        leaves: np.ndarray = self.leaf_of(inputs)
        node_count: int = self.estimator.tree_.node_count
        counts: np.ndarray = np.bincount(leaves, minlength=node_count)
        sums: np.ndarray = np.bincount(leaves, weights=self._targets, minlength=node_count)

        self.leaf_of_train = frozen(leaves, dtype=np.int64)
        self.node_means = frozen(np.divide(sums, counts, out=np.full(node_count, np.nan), where=counts > 0))


def fit_tree(train: TrainingSet, params: ForestParams, rng: np.random.Generator) -> RegressionTree:
    size: int = len(train)

    if size == 0:
        raise StackException("Cannot fit a regression tree on an empty training set")
    if train.n_features == 0:
        raise StackException("Cannot fit a regression tree without input features")

    rows: np.ndarray = rng.integers(0, size, size=size) if params.bootstrap else np.arange(size)
    estimator = DecisionTreeRegressor(
        criterion="squared_error",
        max_features=params.features_per_split(train.n_features),
        min_samples_leaf=params.q,
        random_state=int(rng.integers(0, MAX_TREE_SEED)))

    # a node whose r drawn features hold no admissible split keeps
    # drawing (sklearn max_features) and only becomes a leaf when no
    # feature splits it. The bootstrap resample is passed with its
    # duplicates so the q constraint counts bootstrap observations
    estimator.fit(train.inputs[rows], train.targets[rows])

    tree = RegressionTree(estimator, train.targets, rows)
    tree.populate(train.inputs)
    return tree
