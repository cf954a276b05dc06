from ..core.constants import METHOD_QRS, METHOD_QLR, METHOD_QRF
from ..core.forecast_panel import TrainingSet
from ..core.method_config import MethodConfig
from ..core.quantile_grid import QuantileGrid, QuantileForecast, rearrange_quantiles
from ..core.stack_exception import StackException
from ..forest.forest import Forest, fit_forest, forest_mean
from ..log.log_service import LogService
from ..qlr.qlr import qlr_quantiles
from ..qrf.qrf import qrf_quantiles
from ..qrs.qrs import compute_residuals, qrs_quantiles


"""
Fit the configured meta-learner on the training set and return
its quantile forecast for the query's base forecasts. The forest
seed is the per-task seed, not the run seed
"""
def forecast_hour(train: TrainingSet, query, config: MethodConfig, grid: QuantileGrid, seed: int,
                  logger: LogService = None) -> QuantileForecast:
    qf: QuantileForecast = None

    if config.method == METHOD_QLR:
        return qlr_quantiles(train, query, grid, config.rearrange)

    if config.method not in (METHOD_QRS, METHOD_QRF):
        raise StackException("Unknown method '{0}'".format(config.method))

    forest: Forest = fit_forest(train, config.forest.replace(seed=seed))

    if config.method == METHOD_QRF:
        qf = qrf_quantiles(forest, query, grid)
    else:
        qf = qrs_quantiles(forest_mean(forest, query), compute_residuals(forest, train), grid, logger)

    return rearrange_quantiles(qf) if config.rearrange else qf
