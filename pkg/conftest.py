import numpy as np
import pytest

from src.core.dates import hourly_range
from src.core.forecast_panel import ForecastPanel, TrainingSet
from src.core.quantile_grid import QuantileGrid, QuantileForecast, build_quantile_grid
from src.etc.config_service import ConfigService
from src.log.log_service import LogService


@pytest.fixture
def grid() -> QuantileGrid:
    return build_quantile_grid()


@pytest.fixture
def quiet_logger() -> LogService:
    return LogService(do_print=False)


@pytest.fixture
def no_config(tmp_path) -> ConfigService:
    return ConfigService(str(tmp_path / "missing.json"))


# random but positive panel: actuals around 1000 MW
# and n noisy base forecasts of them
@pytest.fixture
def make_panel():
    def _make(length: int = 48, n_models: int = 3, seed: int = 0, series_id: str = "toy", start: str = "2018-01-01") -> ForecastPanel:
        rng = np.random.default_rng(seed)
        actuals = 1000.0 + 100.0 * np.sin(np.arange(length) * 2 * np.pi / 24) + rng.normal(0, 10, length)
        forecasts = actuals[:, None] + rng.normal(0, 20, (length, n_models))
        names = ["m{0}".format(m + 1) for m in range(n_models)]
        return ForecastPanel(series_id, hourly_range(start, length), actuals, forecasts, names)

    return _make


@pytest.fixture
def make_train():
    def _make(inputs, targets, time_indices=None) -> TrainingSet:
        inputs = np.asarray(inputs, dtype=float)
        if inputs.ndim == 1:
            inputs = inputs.reshape(-1, 1)
        indices = np.arange(len(targets)) if time_indices is None else time_indices
        return TrainingSet(inputs, targets, indices)

    return _make


def forecast_on(values, hundredths) -> QuantileForecast:
    return QuantileForecast(values, QuantileGrid(hundredths))


@pytest.fixture
def small_grid_forecast():
    return forecast_on
