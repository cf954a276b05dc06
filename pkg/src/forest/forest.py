from typing import List
import numpy as np

from .forest_params import ForestParams
from .regression_tree import RegressionTree, fit_tree
from ..core.forecast_panel import TrainingSet, frozen, input_vector
from ..core.stack_exception import StackException

WEIGHT_TOLERANCE: float = 1e-12


"""
One non-negative weight per training index, summing to one
"""
class WeightVector:
    def __init__(self, weights):
        self.weights: np.ndarray = frozen(weights).reshape(-1)

        if np.any(self.weights < 0):
            raise StackException("Forest weights must be non-negative")
        if abs(float(np.sum(self.weights)) - 1.0) > WEIGHT_TOLERANCE:
            raise StackException("Forest weights must sum to one, got {0!r}".format(float(np.sum(self.weights))))


    def __len__(self) -> int:
        return len(self.weights)


"""
Ensemble of p regression trees plus a copy of the training
targets - shared by the RF point model and the quantile forest
"""
class Forest:
    def __init__(self, trees: List[RegressionTree], training_targets, params: ForestParams, n_features: int):
        self.trees: List[RegressionTree] = trees
        self.training_targets: np.ndarray = frozen(training_targets)
        self.params: ForestParams = params
        self.n_features: int = n_features
        self.train_leaves: np.ndarray = frozen(np.vstack([t.leaf_of_train for t in trees]), dtype=np.int64)

        if len(trees) != params.p:
            raise StackException("Forest holds {0} trees, expected {1}".format(len(trees), params.p))


    @property
    def size(self) -> int:
        return len(self.training_targets)


    # leaf ids of each input in every tree, shape (p, M)
    def leaves_of(self, inputs) -> np.ndarray:
        return np.vstack([tree.leaf_of(inputs) for tree in self.trees])


"""
Grow p trees, each from its own random stream spawned off the
seed, so the same training set and params always give the same forest
"""
def fit_forest(train: TrainingSet, params: ForestParams) -> Forest:
    streams: list = np.random.SeedSequence(params.seed).spawn(params.p)
    trees: List[RegressionTree] = [fit_tree(train, params, np.random.default_rng(s)) for s in streams]
    return Forest(trees, train.targets, params, train.n_features)


# weights of training indices given the leaf each tree holds the
# training patterns in (p, N) and the query's leaf per tree (p,)
def leaf_weights(train_leaves, query_leaves) -> np.ndarray:
    train_leaves = np.asarray(train_leaves)
    query_leaves = np.asarray(query_leaves).reshape(-1, 1)

    same_leaf: np.ndarray = train_leaves == query_leaves
    counts: np.ndarray = same_leaf.sum(axis=1, keepdims=True)
    return (same_leaf / counts).sum(axis=0) / train_leaves.shape[0]


def forest_weights(forest: Forest, query) -> WeightVector:
    query = input_vector(query, forest.n_features)
    return WeightVector(leaf_weights(forest.train_leaves, forest.leaves_of(query)[:, 0]))


def forest_mean(forest: Forest, query) -> float:
    weights: WeightVector = forest_weights(forest, query)
    value: float = float(np.dot(weights.weights, forest.training_targets))
    return float(np.clip(value, forest.training_targets.min(), forest.training_targets.max()))


"""
Batch point forecast from per-tree leaf means, which is the weighted
mean above regrouped tree by tree
"""
def forest_predict(forest: Forest, inputs) -> np.ndarray:
    leaves: np.ndarray = forest.leaves_of(inputs)
    return _average_leaf_means(forest, leaves)


# point forecasts for the training patterns
# themselves, no re-routing needed
def forest_predict_train(forest: Forest) -> np.ndarray:
    return _average_leaf_means(forest, forest.train_leaves)


def _average_leaf_means(forest: Forest, leaves: np.ndarray) -> np.ndarray:
    per_tree: np.ndarray = np.vstack([tree.node_means[leaves[j]] for j, tree in enumerate(forest.trees)])
    return per_tree.mean(axis=0)
