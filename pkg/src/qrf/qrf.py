import numpy as np

from ..core.forecast_panel import frozen
from ..core.quantile_grid import QuantileGrid, QuantileForecast
from ..core.stack_exception import StackException
from ..forest.forest import Forest, forest_weights

INVERSION_TOLERANCE: float = 1e-12


"""
Step-function conditional CDF: sorted distinct target values
with the cumulative forest weight at each of them
"""
class EmpiricalCDF:
    def __init__(self, support, cum_weights):
        self.support: np.ndarray = frozen(support).reshape(-1)
        self.cum_weights: np.ndarray = frozen(cum_weights).reshape(-1)

        if len(self.support) == 0 or len(self.support) != len(self.cum_weights):
            raise StackException("Empirical CDF needs matching, non-empty support and weights")
        if np.any(np.diff(self.support) <= 0):
            raise StackException("Empirical CDF support must be strictly increasing")
        if abs(self.cum_weights[-1] - 1.0) > INVERSION_TOLERANCE:
            raise StackException("Empirical CDF must end at 1, got {0!r}".format(float(self.cum_weights[-1])))


    def __call__(self, y: float) -> float:
        pos: int = int(np.searchsorted(self.support, y, side="right"))
        return 0.0 if pos == 0 else float(self.cum_weights[pos - 1])


# running sum with Neumaier compensation
def compensated_cumsum(values) -> np.ndarray:
    out: np.ndarray = np.empty(len(values))
    total: float = 0.0
    carry: float = 0.0

    for i, v in enumerate(values):
        v = float(v)
        t: float = total + v
        if abs(total) >= abs(v):
            carry += (total - t) + v
        else:
            carry += (v - t) + total
        total = t
        out[i] = total + carry

    return out


"""
Weighted empirical CDF from targets and weights; duplicate target
values merge onto one support point, zero weights drop out
"""
def weighted_cdf(targets, weights) -> EmpiricalCDF:
    targets = np.asarray(targets, dtype=float)
    weights = np.asarray(weights, dtype=float)
    keep: np.ndarray = weights > 0

    support, inverse = np.unique(targets[keep], return_inverse=True)
    merged: np.ndarray = np.zeros(len(support))
    np.add.at(merged, inverse, weights[keep])

    return EmpiricalCDF(support, compensated_cumsum(merged))


def qrf_cdf(forest: Forest, query) -> EmpiricalCDF:
    return weighted_cdf(forest.training_targets, forest_weights(forest, query).weights)


# smallest support value whose cumulative
# weight reaches alpha
def invert_cdf(cdf: EmpiricalCDF, grid: QuantileGrid) -> QuantileForecast:
    positions: np.ndarray = np.searchsorted(cdf.cum_weights, grid.probabilities - INVERSION_TOLERANCE, side="left")
    positions = np.minimum(positions, len(cdf.support) - 1)
    return QuantileForecast(cdf.support[positions], grid)


def qrf_quantiles(forest: Forest, query, grid: QuantileGrid) -> QuantileForecast:
    return invert_cdf(qrf_cdf(forest, query), grid)
