from typing import List
import numpy as np
import pandas as pd

from .dates import is_hourly, final_year_start
from .stack_exception import StackException


def frozen(values, dtype=float) -> np.ndarray:
    arr: np.ndarray = np.array(values, dtype=dtype, copy=True)
    arr.flags.writeable = False
    return arr


"""
One point in time as seen by a meta-model: the n base
forecasts for that hour (MW)
"""
def input_vector(values, n: int = None) -> np.ndarray:
    vec: np.ndarray = frozen(values).reshape(-1)

    if n is not None and len(vec) != n:
        raise StackException("Input vector has {0} values, expected {1}".format(len(vec), n))
    if not np.all(np.isfinite(vec)):
        raise StackException("Input vector holds non-finite values")

    return vec


"""
Time-indexed actual loads with the point forecasts of n base
models for every hour - the raw material for every meta-model
"""
class ForecastPanel:
    def __init__(self, series_id: str, timestamps: pd.DatetimeIndex, actuals, base_forecasts, model_names: List[str]):
        self.series_id: str = series_id
        self.timestamps: pd.DatetimeIndex = pd.DatetimeIndex(timestamps)
        self.actuals: np.ndarray = frozen(actuals).reshape(-1)
        self.base_forecasts: np.ndarray = frozen(base_forecasts)
        self.model_names: List[str] = list(model_names)
        self.validate()


    @property
    def length(self) -> int:
        return len(self.actuals)


    @property
    def n_models(self) -> int:
        return self.base_forecasts.shape[1]


    @property
    def final_year_start(self) -> int:
        return final_year_start(self.timestamps)


    def input_at(self, t: int) -> np.ndarray:
        return self.base_forecasts[t]


    def validate(self) -> None:
        if self.base_forecasts.ndim != 2:
            raise StackException("Base forecasts must be a T x n matrix")

        if not (len(self.timestamps) == len(self.actuals) == self.base_forecasts.shape[0]):
            raise StackException("Panel '{0}': timestamps, actuals and forecast rows differ in length".format(self.series_id))

        if len(self.model_names) != self.base_forecasts.shape[1]:
            raise StackException("Panel '{0}': {1} model names for {2} forecast columns"
                .format(self.series_id, len(self.model_names), self.base_forecasts.shape[1]))

        if self.length == 0:
            raise StackException("Panel '{0}' is empty".format(self.series_id))

        if self.timestamps.tz is None:
            raise StackException("Panel '{0}': timestamps must be UTC aware".format(self.series_id))

        if not is_hourly(self.timestamps):
            raise StackException("Panel '{0}': timestamps must increase in constant 1-hour steps".format(self.series_id))

        if not (np.all(np.isfinite(self.actuals)) and np.all(np.isfinite(self.base_forecasts))):
            raise StackException("Panel '{0}' has missing cells".format(self.series_id))

        if np.any(self.actuals <= 0):
            raise StackException("percentage metrics undefined for nonpositive load")


"""
Pairs of (base forecast vector, actual load) over a set of
source time indices - what a meta-model is fitted on
"""
class TrainingSet:
    def __init__(self, inputs, targets, time_indices):
        self.inputs: np.ndarray = frozen(inputs)
        self.targets: np.ndarray = frozen(targets).reshape(-1)
        self.time_indices: np.ndarray = frozen(time_indices, dtype=np.int64).reshape(-1)

        if self.inputs.ndim != 2:
            self.inputs = frozen(self.inputs.reshape(len(self.targets), -1))

        if not (self.inputs.shape[0] == len(self.targets) == len(self.time_indices)):
            raise StackException("Training set inputs, targets and indices differ in length")

        if len(np.unique(self.time_indices)) != len(self.time_indices):
            raise StackException("Training set time indices must be distinct")


    def __len__(self) -> int:
        return len(self.targets)


    @property
    def n_features(self) -> int:
        return self.inputs.shape[1]


    def subset(self, positions) -> "TrainingSet":
        positions = np.asarray(positions, dtype=np.int64)
        return TrainingSet(self.inputs[positions], self.targets[positions], self.time_indices[positions])
