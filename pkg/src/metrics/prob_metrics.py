from typing import List, Tuple
import numpy as np

from .metrics_reports import ProbMetricsReport
from .point_metrics import median_point_metrics
from ..core.constants import PI_LOWER, PI_UPPER, PI_MISS_RATE
from ..core.quantile_grid import QuantileGrid, QuantileForecast
from ..core.stack_exception import StackException
from ..qlr.qlr import pinball


def _check_actual(actual: float) -> float:
    actual = float(actual)
    if not actual > 0:
        raise StackException("percentage metric undefined for actual {0}".format(actual))

    return actual


def _check_pairs(actuals, qfs: List[QuantileForecast]) -> np.ndarray:
    actuals = np.asarray(actuals, dtype=float).reshape(-1)

    if len(actuals) != len(qfs):
        raise StackException("Got {0} actuals for {1} quantile forecasts".format(len(actuals), len(qfs)))
    if len(actuals) == 0:
        raise StackException("No forecasts to evaluate")

    return actuals


# per-forecast percentage quantile regression
# error, averaged over the grid
def pqre(actual: float, qf: QuantileForecast) -> float:
    actual = _check_actual(actual)
    losses: np.ndarray = pinball(actual, qf.quantiles, qf.grid.probabilities)
    return 100.0 * float(np.sum(losses)) / (len(qf.grid) * actual)


"""
Mean, median (middle pair averaged when even) and sample
standard deviation (N-1 denominator, zero for a single value)
"""
def aggregate(values) -> Tuple[float, float, float]:
    values = np.asarray(values, dtype=float).reshape(-1)

    if len(values) == 0:
        raise StackException("Cannot aggregate an empty set of values")

    std: float = float(np.std(values, ddof=1)) if len(values) > 1 else 0.0
    return float(np.mean(values)), float(np.median(values)), std


def refr(actuals, qfs: List[QuantileForecast], alpha: float) -> float:
    actuals = _check_pairs(actuals, qfs)
    quantiles: np.ndarray = np.array([qf.at(alpha) for qf in qfs])
    return float(np.mean(actuals <= quantiles))


# |ReFr(alpha) - alpha| for every grid probability
def arfe_table(actuals, qfs: List[QuantileForecast], grid: QuantileGrid) -> np.ndarray:
    actuals = _check_pairs(actuals, qfs)

    if any(qf.grid != grid for qf in qfs):
        raise StackException("Quantile forecasts are not aligned to the requested grid")

    quantiles: np.ndarray = np.vstack([qf.quantiles for qf in qfs])
    frequencies: np.ndarray = np.mean(actuals[:, None] <= quantiles, axis=0)
    return np.abs(frequencies - grid.probabilities)


"""
Interval width plus a 2/alpha penalty per unit the actual falls
outside [q_l, q_u]; boundaries count as inside
"""
def winkler(actual: float, q_l: float, q_u: float, alpha: float) -> float:
    if q_l > q_u:
        raise StackException("Interval lower bound {0} exceeds upper bound {1}".format(q_l, q_u))
    if not 0 < alpha < 1:
        raise StackException("Interval miss rate must lie in (0, 1), got {0}".format(alpha))

    width: float = q_u - q_l

    if actual < q_l:
        return width + (2.0 / alpha) * (q_l - actual)
    if actual > q_u:
        return width + (2.0 / alpha) * (actual - q_u)

    return width


def pws(actual: float, qf: QuantileForecast) -> float:
    actual = _check_actual(actual)
    return 100.0 * winkler(actual, qf.at(PI_LOWER), qf.at(PI_UPPER), PI_MISS_RATE) / actual


def pi_coverage(actuals, qfs: List[QuantileForecast]) -> Tuple[float, float, float]:
    actuals = _check_pairs(actuals, qfs)
    lower: np.ndarray = np.array([qf.at(PI_LOWER) for qf in qfs])
    upper: np.ndarray = np.array([qf.at(PI_UPPER) for qf in qfs])

    below: int = int(np.sum(actuals < lower))
    above: int = int(np.sum(actuals > upper))
    inside: int = len(actuals) - below - above
    total: int = len(actuals)

    return 100.0 * inside / total, 100.0 * below / total, 100.0 * above / total


"""
Full report from per-forecast PQRE and PWS values, the ARFE
population, interval counts and the median forecasts
"""
def build_report(pqres, pwses, arfes, coverage: Tuple[float, float, float], median_errors: Tuple[float, float]) -> ProbMetricsReport:
    mpqre, mdpqre, stdpqre = aggregate(pqres)
    marfe, mdarfe, stdarfe = aggregate(arfes)
    mpws, mdpws, stdpws = aggregate(pwses)

    return ProbMetricsReport(
        MPQRE=mpqre, MdPQRE=mdpqre, StdPQRE=stdpqre,
        MARFE=marfe, MdARFE=mdarfe, StdARFE=stdarfe,
        MPWS=mpws, MdPWS=mdpws, StdPWS=stdpws,
        inPI=coverage[0], belowPI=coverage[1], abovePI=coverage[2],
        QMAPE=median_errors[0], QMdAPE=median_errors[1])


def prob_metrics_report(actuals, qfs: List[QuantileForecast]) -> ProbMetricsReport:
    actuals = _check_pairs(actuals, qfs)
    pqres: list = [pqre(y, qf) for y, qf in zip(actuals, qfs)]
    pwses: list = [pws(y, qf) for y, qf in zip(actuals, qfs)]

    return build_report(pqres, pwses, arfe_table(actuals, qfs, qfs[0].grid),
        pi_coverage(actuals, qfs), median_point_metrics(actuals, qfs))


"""
Summary over several series: PQRE, PWS, coverage and median errors
pool every forecast, ARFE pools one value per (series, alpha)
"""
def pooled_report(series: List[Tuple[np.ndarray, List[QuantileForecast]]]) -> ProbMetricsReport:
    if len(series) == 0:
        raise StackException("No series to pool")

    actuals: np.ndarray = np.concatenate([_check_pairs(a, qfs) for a, qfs in series])
    qfs: list = [qf for _, series_qfs in series for qf in series_qfs]
    arfes: np.ndarray = np.concatenate([arfe_table(a, series_qfs, series_qfs[0].grid) for a, series_qfs in series])

    pqres: list = [pqre(y, qf) for y, qf in zip(actuals, qfs)]
    pwses: list = [pws(y, qf) for y, qf in zip(actuals, qfs)]

    return build_report(pqres, pwses, arfes, pi_coverage(actuals, qfs), median_point_metrics(actuals, qfs))
