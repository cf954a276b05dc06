import zlib
import numpy as np

from .forecast_panel import ForecastPanel, TrainingSet, input_vector
from .stack_exception import StackException


"""
All (forecast vector, actual) pairs with positions start..t-h of
the panel, in time order. Positions are 0-based panel rows
"""
def make_training_set(panel: ForecastPanel, t: int, h: int, start: int = 0) -> TrainingSet:
    if h < 1:
        raise StackException("Forecast horizon must be at least 1 hour")

    last: int = t - h
    if last < start or last < 0:
        raise StackException("insufficient history for hour {0} with horizon {1}".format(t, h))
    if t >= panel.length:
        raise StackException("Hour {0} is outside the panel of {1} hours".format(t, panel.length))

    positions: np.ndarray = np.arange(max(start, 0), last + 1)
    return TrainingSet(panel.base_forecasts[positions], panel.actuals[positions], positions)


"""
The k training pairs nearest to the query in Euclidean distance; equal
distances go to the earlier time index, output is in time order
"""
def knn_select(train: TrainingSet, query, k: int) -> TrainingSet:
    query = input_vector(query, train.n_features)

    if k < 1:
        raise StackException("k must be at least 1")
    if k > len(train):
        raise StackException("k exceeds available patterns ({0} > {1})".format(k, len(train)))

    # squared distances keep exact ties exact
    dist: np.ndarray = np.sum((train.inputs - query) ** 2, axis=1)
    nearest: np.ndarray = np.lexsort((train.time_indices, dist))[:k]
    nearest = nearest[np.argsort(train.time_indices[nearest], kind="stable")]
    return train.subset(nearest)


# per-task seed independent of scheduling order
def derive_seed(seed: int, series_id: str, hour: int) -> int:
    series_hash: int = zlib.crc32(str(series_id).encode("utf-8"))
    state = np.random.SeedSequence([int(seed), series_hash, int(hour)]).generate_state(1)
    return int(state[0])
