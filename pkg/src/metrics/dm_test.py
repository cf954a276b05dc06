import numpy as np
from scipy.stats import norm

from .metrics_reports import DMResult
from ..core.constants import DM_SIGNIFICANCE
from ..core.stack_exception import StackException


"""
Diebold-Mariano test on two per-hour loss series, plain normal
approximation: d = a - b, statistic = mean(d) / sqrt(var(d) / N)
"""
def dm_test(loss_a, loss_b) -> DMResult:
    loss_a = np.asarray(loss_a, dtype=float).reshape(-1)
    loss_b = np.asarray(loss_b, dtype=float).reshape(-1)

    if len(loss_a) != len(loss_b):
        raise StackException("Loss series differ in length ({0} vs {1})".format(len(loss_a), len(loss_b)))
    if len(loss_a) < 2:
        raise StackException("Diebold-Mariano test needs at least two observations")

    d: np.ndarray = loss_a - loss_b
    n_obs: int = len(d)
    mean: float = float(np.mean(d))
    var: float = float(np.var(d, ddof=1))

    if var == 0:
        if mean == 0:
            return DMResult(0.0, 1.0, n_obs)
        raise StackException("degenerate loss differential (constant {0})".format(mean))

    statistic: float = mean / np.sqrt(var / n_obs)
    return DMResult(statistic, float(2.0 * norm.sf(abs(statistic))), n_obs)


# +1 when a is significantly more accurate (lower loss), -1
# when b is, 0 otherwise; one-sided tests at level alpha
def dm_wins(result: DMResult, alpha: float = DM_SIGNIFICANCE) -> int:
    if norm.cdf(result.statistic) < alpha:
        return 1
    if norm.sf(result.statistic) < alpha:
        return -1

    return 0
