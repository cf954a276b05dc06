import numpy as np

from .kernel_density import KernelDensity, kde_fit, kde_quantiles
from ..core.forecast_panel import TrainingSet, frozen
from ..core.quantile_grid import QuantileGrid, QuantileForecast
from ..core.stack_exception import StackException
from ..forest.forest import Forest, forest_predict_train
from ..log.log_service import LogService


"""
In-sample residuals y - f(y_hat) of the point meta-model over
the training set it was fitted on (MW)
"""
class ResidualSet:
    def __init__(self, residuals):
        self.residuals: np.ndarray = frozen(residuals).reshape(-1)

        if not np.all(np.isfinite(self.residuals)):
            raise StackException("Residuals must be finite")


    def __len__(self) -> int:
        return len(self.residuals)


def compute_residuals(forest: Forest, train: TrainingSet) -> ResidualSet:
    if len(train) != forest.size:
        raise StackException("Residuals need the training set the forest was fitted on")

    return ResidualSet(train.targets - forest_predict_train(forest))


# kernel density over the point forecast shifted by every
# residual, read off at each grid probability
def qrs_quantiles(point: float, residuals: ResidualSet, grid: QuantileGrid, logger: LogService = None) -> QuantileForecast:
    if not np.isfinite(point):
        raise StackException("Point forecast must be finite")
    if len(residuals) == 0:
        raise StackException("Residual simulation needs at least one residual")

    kde: KernelDensity = kde_fit(point + residuals.residuals, logger)
    quantiles: np.ndarray = kde_quantiles(kde, grid.probabilities)
    return QuantileForecast(np.maximum.accumulate(quantiles), grid)
