import numpy as np
from scipy.signal import lfilter

from .synth_config import SynthConfig
from ..core.dates import hourly_range
from ..core.forecast_panel import ForecastPanel

HOURS_PER_DAY: int = 24
HOURS_PER_WEEK: int = 168
HOURS_PER_YEAR: float = 8766.0
HEAVY_TAIL_DF: int = 3
NOISE_CLIP: float = 6.0


# stationary AR(1) noise with the given
# marginal std, clipped at 6 stds
def ar1_noise(rng: np.random.Generator, size: int, ar1: float, std: float) -> np.ndarray:
    shocks: np.ndarray = rng.standard_normal(size) * std * np.sqrt(1.0 - ar1 ** 2)
    shocks[0] = rng.standard_normal() * std

    noise: np.ndarray = lfilter([1.0], [1.0, -ar1], shocks)
    return np.clip(noise, -NOISE_CLIP * std, NOISE_CLIP * std)


# unit-variance student t
def heavy_tail_noise(rng: np.random.Generator, size: int) -> np.ndarray:
    return rng.standard_t(HEAVY_TAIL_DF, size) / np.sqrt(HEAVY_TAIL_DF / (HEAVY_TAIL_DF - 2.0))


"""
Hourly load with triple seasonality and AR(1) noise, and for each
base model actual * (1 + bias) plus the shared AR(1) forecast error
and its own gaussian or heavy tailed error
"""
def synth_panel(config: SynthConfig) -> ForecastPanel:
    config.validate()

    rng: np.random.Generator = np.random.default_rng(config.seed)
    size: int = config.days * HOURS_PER_DAY
    t: np.ndarray = np.arange(size, dtype=float)

    actuals: np.ndarray = (config.base_level
        + config.daily_amplitude * np.sin(2 * np.pi * t / HOURS_PER_DAY)
        + config.weekly_amplitude * np.sin(2 * np.pi * t / HOURS_PER_WEEK)
        + config.annual_amplitude * np.cos(2 * np.pi * t / HOURS_PER_YEAR)
        + ar1_noise(rng, size, config.ar1, config.noise_std))

    common: np.ndarray = ar1_noise(rng, size, config.ar1, config.common_noise) if config.common_noise > 0 else np.zeros(size)
    forecasts: np.ndarray = np.empty((size, config.n_models))
    for m in range(config.n_models):
        errors: np.ndarray = heavy_tail_noise(rng, size) if config.heavy_tail[m] else rng.standard_normal(size)
        forecasts[:, m] = actuals * (1.0 + config.biases[m]) + common + config.model_noise[m] * errors

    names: list = ["model_{0:02d}".format(m + 1) for m in range(config.n_models)]
    return ForecastPanel(config.series_id, hourly_range(config.start, size), actuals, forecasts, names)
