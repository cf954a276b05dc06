from typing import List
import numpy as np
from scipy.optimize import linprog

from ..core.forecast_panel import TrainingSet, frozen, input_vector
from ..core.quantile_grid import QuantileGrid, QuantileForecast, rearrange_quantiles
from ..core.stack_exception import StackException

MAX_ITERATIONS: int = 500
SOLVER_TOLERANCE: float = 1e-10
ACTIVE_ROWS_PER_COEFFICIENT: int = 20
ACTIVE_FRACTION: float = 0.1
MAX_WARM_ROUNDS: int = 3
WARM_TOLERANCE: float = 1e-9


"""
Intercept a0 and slopes a of the linear alpha-quantile model
a0 + a . y_hat
"""
class CoefficientVector:
    def __init__(self, a0: float, a, alpha: float):
        self.a0: float = float(a0)
        self.a: np.ndarray = frozen(a).reshape(-1)
        self.alpha: float = float(alpha)

        if not 0 < self.alpha < 1:
            raise StackException("Quantile model probability {0} is outside (0, 1)".format(alpha))
        if not (np.isfinite(self.a0) and np.all(np.isfinite(self.a))):
            raise StackException("Quantile model coefficients must be finite")


# alpha may be one probability or an array
# broadcast against y - q
def pinball(y, q, alpha):
    probabilities = np.asarray(alpha, dtype=float)
    if not np.all((probabilities > 0) & (probabilities < 1)):
        raise StackException("Pinball loss needs alpha in (0, 1), got {0}".format(alpha))

    diff = np.asarray(y, dtype=float) - np.asarray(q, dtype=float)
    loss = np.where(diff >= 0, diff * probabilities, diff * (probabilities - 1))
    return float(loss) if np.ndim(loss) == 0 else loss


def qlr_predict(coeffs: CoefficientVector, query) -> float:
    query = input_vector(query, len(coeffs.a))
    return coeffs.a0 + float(np.dot(coeffs.a, query))


def pinball_objective(train: TrainingSet, coeffs: CoefficientVector) -> float:
    fitted: np.ndarray = coeffs.a0 + train.inputs @ coeffs.a
    return float(np.sum(pinball(train.targets, fitted, coeffs.alpha)))


# center and scale columns, constant
# columns keep a unit scale
def _standardize(values: np.ndarray):
    center = values.mean(axis=0)
    scale = values.std(axis=0)
    scale = np.where(scale > 0, scale, 1.0)
    return (values - center) / scale, center, scale


def _solve_dual(y: np.ndarray, design: np.ndarray, alpha: float, rhs: np.ndarray, max_iterations: int):
    return linprog(
        -y,
        A_eq=design.T,
        b_eq=rhs,
        bounds=(alpha - 1.0, alpha),
        method="highs-ds",
        options={
            "maxiter": max_iterations,
            "primal_feasibility_tolerance": SOLVER_TOLERANCE,
            "dual_feasibility_tolerance": SOLVER_TOLERANCE
        })


"""
Solve the dual over the rows closest to the previous quantile line only. Every
other row keeps the dual value of its side (alpha above, alpha-1 below), which
moves into the right hand side. The result is accepted only when every fixed
row is still on its side of the new line, in which case it is optimal for the
full problem; rows that crossed join the active set. None means the caller
has to solve the full LP
"""
def _warm_solve(y: np.ndarray, design: np.ndarray, alpha: float, previous_residuals: np.ndarray, max_iterations: int) -> np.ndarray:
    size: int = len(y)
    width: int = max(ACTIVE_ROWS_PER_COEFFICIENT * design.shape[1], int(np.ceil(ACTIVE_FRACTION * size)))

    if width >= size:
        return None

    active: np.ndarray = np.zeros(size, dtype=bool)
    active[np.argsort(np.abs(previous_residuals), kind="stable")[:width]] = True
    above: np.ndarray = previous_residuals > 0

    for _ in range(MAX_WARM_ROUNDS):
        fixed: np.ndarray = ~active
        rhs: np.ndarray = -(alpha * design[fixed & above].sum(axis=0) + (alpha - 1.0) * design[fixed & ~above].sum(axis=0))
        result = _solve_dual(y[active], design[active], alpha, rhs, max_iterations)

        if result.status != 0 or result.eqlin is None:
            return None

        beta: np.ndarray = -np.asarray(result.eqlin.marginals, dtype=float)
        residuals: np.ndarray = y - design @ beta
        crossed: np.ndarray = fixed & np.where(above, residuals < -WARM_TOLERANCE, residuals > WARM_TOLERANCE)

        if not crossed.any():
            return beta
        active |= crossed

    return None


"""
Minimize the pinball objective sum over training pairs. The LP is solved in
its dual form: maximize y'd subject to X'd = 0 and alpha-1 <= d <= alpha,
whose equality marginals are (minus) the primal coefficients. With the fit of
a neighbouring alpha as previous, a reduced LP is tried first
"""
def fit_qlr(train: TrainingSet, alpha: float, max_iterations: int = MAX_ITERATIONS,
            previous: CoefficientVector = None) -> CoefficientVector:
    if len(train) == 0:
        raise StackException("Cannot fit a quantile regression on an empty training set")
    if not 0 < alpha < 1:
        raise StackException("Quantile regression needs alpha in (0, 1), got {0}".format(alpha))

    z, x_center, x_scale = _standardize(train.inputs)
    y_center: float = float(np.mean(train.targets))
    y_scale: float = float(np.std(train.targets)) or 1.0
    y: np.ndarray = (train.targets - y_center) / y_scale
    design: np.ndarray = np.hstack([np.ones((len(train), 1)), z])

    beta: np.ndarray = None
    if previous is not None and len(previous.a) == train.n_features:
        previous_residuals: np.ndarray = train.targets - (previous.a0 + train.inputs @ previous.a)
        beta = _warm_solve(y, design, alpha, previous_residuals, max_iterations)

    if beta is None:
        result = _solve_dual(y, design, alpha, np.zeros(design.shape[1]), max_iterations)

        if result.status != 0 or result.eqlin is None:
            raise StackException("Quantile regression LP failed for alpha={0} (N={1}, n={2}): status {3} after {4} iterations: {5}"
                .format(alpha, len(train), train.n_features, result.status, getattr(result, "nit", "?"), result.message))

        beta = -np.asarray(result.eqlin.marginals, dtype=float)

    slopes: np.ndarray = y_scale * beta[1:] / x_scale
    intercept: float = y_center + y_scale * beta[0] - float(np.dot(slopes, x_center))

    return CoefficientVector(intercept, slopes, alpha)


# fits along the probabilities in order, each
# one warm started from the one before
def fit_qlr_path(train: TrainingSet, probabilities, max_iterations: int = MAX_ITERATIONS) -> List[CoefficientVector]:
    path: List[CoefficientVector] = []

    for alpha in probabilities:
        path.append(fit_qlr(train, float(alpha), max_iterations, path[-1] if path else None))

    return path


# one model per grid probability, crossing
# repaired by sorting unless disabled
def qlr_quantiles(train: TrainingSet, query, grid: QuantileGrid, rearrange: bool = True) -> QuantileForecast:
    query = input_vector(query, train.n_features)
    values: list = [qlr_predict(coeffs, query) for coeffs in fit_qlr_path(train, grid.probabilities)]
    qf = QuantileForecast(values, grid)

    return rearrange_quantiles(qf) if rearrange else qf
