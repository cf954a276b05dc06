from typing import Dict
import numpy as np

from .constants import GRID_HUNDREDTHS
from .forecast_panel import frozen
from .stack_exception import StackException


"""
The probability set a quantile forecast is aligned to. Probabilities
are kept as integer hundredths so membership and file round trips are exact
"""
class QuantileGrid:
    def __init__(self, hundredths=GRID_HUNDREDTHS):
        self.hundredths: tuple = tuple(int(h) for h in hundredths)

        if len(self.hundredths) == 0:
            raise StackException("Quantile grid is empty")
        if any(h <= 0 or h >= 100 for h in self.hundredths):
            raise StackException("Quantile grid probabilities must lie in (0, 1)")
        if any(b <= a for a, b in zip(self.hundredths, self.hundredths[1:])):
            raise StackException("Quantile grid must be strictly increasing")

        self.probabilities: np.ndarray = frozen(np.array(self.hundredths, dtype=float) / 100.0)
        self._positions: Dict[int, int] = {h: i for i, h in enumerate(self.hundredths)}


    def __len__(self) -> int:
        return len(self.hundredths)


    def __eq__(self, other) -> bool:
        return isinstance(other, QuantileGrid) and self.hundredths == other.hundredths


    def __hash__(self) -> int:
        return hash(self.hundredths)


    def __getitem__(self, i: int) -> float:
        return float(self.probabilities[i])


    def contains(self, alpha: float) -> bool:
        hundredth: int = int(round(alpha * 100))
        return abs(alpha * 100 - hundredth) < 1e-9 and hundredth in self._positions


    def index_of(self, alpha: float) -> int:
        if not self.contains(alpha):
            raise StackException("alpha {0} is not on the quantile grid".format(alpha))

        return self._positions[int(round(alpha * 100))]


"""
Predicted quantiles (MW) aligned to a grid
"""
class QuantileForecast:
    def __init__(self, quantiles, grid: QuantileGrid):
        self.quantiles: np.ndarray = frozen(quantiles).reshape(-1)
        self.grid: QuantileGrid = grid

        if len(self.quantiles) != len(grid):
            raise StackException("Quantile forecast has {0} values for a grid of {1}".format(len(self.quantiles), len(grid)))


    def __len__(self) -> int:
        return len(self.quantiles)


    def at(self, alpha: float) -> float:
        return float(self.quantiles[self.grid.index_of(alpha)])


    @property
    def is_monotone(self) -> bool:
        return bool(np.all(np.diff(self.quantiles) >= 0))


def build_quantile_grid() -> QuantileGrid:
    return QuantileGrid(GRID_HUNDREDTHS)


# repair crossing of independently fitted
# quantiles by sorting the values
def rearrange_quantiles(qf: QuantileForecast) -> QuantileForecast:
    if not np.all(np.isfinite(qf.quantiles)):
        raise StackException("Cannot rearrange a quantile forecast with non-finite entries")

    return QuantileForecast(np.sort(qf.quantiles, kind="stable"), qf.grid)
