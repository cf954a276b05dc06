import math
import numpy as np
from scipy.special import ndtr
from scipy.stats import iqr

from ..core.forecast_panel import frozen
from ..core.stack_exception import StackException
from ..log.log_service import LogService

SILVERMAN_FACTOR: float = 1.06
IQR_TO_SIGMA: float = 1.349
BRACKET_BANDWIDTHS: float = 10.0
RELATIVE_XTOL: float = 1e-10
TABLE_POINTS: int = 257
MAX_NEWTON_STEPS: int = 100
KDE_CONTEXT: str = "qrs"


"""
Gaussian kernel density over a set of centers (MW). When every
center is equal the density is flagged degenerate at that value
"""
class KernelDensity:
    def __init__(self, centers, bandwidth: float, degenerate: bool = False):
        self.centers: np.ndarray = frozen(centers).reshape(-1)
        self.bandwidth: float = float(bandwidth)
        self.degenerate: bool = bool(degenerate)

        if len(self.centers) == 0:
            raise StackException("Kernel density needs at least one center")
        if not self.degenerate and not self.bandwidth > 0:
            raise StackException("Kernel bandwidth must be positive")


    @property
    def low(self) -> float:
        return float(self.centers.min())


    @property
    def high(self) -> float:
        return float(self.centers.max())


    def cdf(self, z) -> np.ndarray:
        z = np.asarray(z, dtype=float)

        if self.degenerate:
            return (z >= self.low).astype(float)

        return ndtr((z[..., None] - self.centers) / self.bandwidth).mean(axis=-1)


    def pdf(self, z) -> np.ndarray:
        z = np.asarray(z, dtype=float)
        u: np.ndarray = (z[..., None] - self.centers) / self.bandwidth
        return np.exp(-0.5 * u * u).mean(axis=-1) / (self.bandwidth * math.sqrt(2.0 * math.pi))


"""
Normal-reference bandwidth 1.06 * sigma * N^(-1/5), sigma being the
smaller of the sample std and IQR/1.349. A zero IQR (more than half the
sample on one value) leaves the std alone; that and a single-valued
sample are reported as warnings when a logger is given
"""
def kde_fit(samples, logger: LogService = None) -> KernelDensity:
    samples = np.asarray(samples, dtype=float).reshape(-1)

    if len(samples) == 0:
        raise StackException("Cannot fit a kernel density to an empty sample")
    if not np.all(np.isfinite(samples)):
        raise StackException("Kernel density samples must be finite")

    if len(samples) == 1 or np.all(samples == samples[0]):
        if logger:
            logger.log_warning("Degenerate kernel density: all {0} samples equal {1}".format(len(samples), samples[0]), KDE_CONTEXT)
        return KernelDensity(samples, 0.0, degenerate=True)

    std: float = float(np.std(samples, ddof=1))
    spread: float = float(iqr(samples)) / IQR_TO_SIGMA

    if spread > 0:
        sigma: float = min(std, spread)
    else:
        sigma = std
        if logger:
            logger.log_warning("Zero IQR over {0} samples, bandwidth taken from the std {1:.6g}".format(len(samples), std), KDE_CONTEXT)

    return KernelDensity(samples, SILVERMAN_FACTOR * sigma * len(samples) ** (-0.2))


"""
Inverse CDF at every probability at once. The CDF tabulated on
[min - 10h, max + 10h] gives each probability a bracket and a first
guess, then safeguarded Newton steps (bisection whenever a step leaves
the bracket) run to an absolute tolerance of 1e-10 * (range + h)
"""
def kde_quantiles(kde: KernelDensity, alphas) -> np.ndarray:
    alphas = np.asarray(alphas, dtype=float).reshape(-1)

    if not np.all((alphas > 0) & (alphas < 1)):
        raise StackException("Probability {0} is outside (0, 1)".format(alphas[~((alphas > 0) & (alphas < 1))][0]))

    if kde.degenerate:
        return np.full(len(alphas), kde.low)

    h: float = kde.bandwidth
    xtol: float = RELATIVE_XTOL * (kde.high - kde.low + h)
    table: np.ndarray = np.linspace(kde.low - BRACKET_BANDWIDTHS * h, kde.high + BRACKET_BANDWIDTHS * h, TABLE_POINTS)
    values: np.ndarray = kde.cdf(table)

    # values[right - 1] < alpha <= values[right]
    right: np.ndarray = np.clip(np.searchsorted(values, alphas, side="left"), 1, TABLE_POINTS - 1)
    lo: np.ndarray = table[right - 1]
    hi: np.ndarray = table[right]
    z: np.ndarray = lo + (alphas - values[right - 1]) * (hi - lo) / np.maximum(values[right] - values[right - 1], np.finfo(float).tiny)

    for _ in range(MAX_NEWTON_STEPS):
        excess: np.ndarray = kde.cdf(z) - alphas
        lo = np.where(excess < 0, z, lo)
        hi = np.where(excess >= 0, z, hi)

        density: np.ndarray = kde.pdf(z)
        step: np.ndarray = np.divide(excess, density, out=np.full_like(excess, np.inf), where=density > 0)
        candidate: np.ndarray = z - step
        candidate = np.where((candidate >= lo) & (candidate <= hi), candidate, 0.5 * (lo + hi))

        converged: bool = bool(np.all((np.abs(candidate - z) <= xtol) | (hi - lo <= xtol)))
        z = candidate
        if converged:
            break

    return z


def kde_icdf(kde: KernelDensity, alpha: float) -> float:
    return float(kde_quantiles(kde, [alpha])[0])
