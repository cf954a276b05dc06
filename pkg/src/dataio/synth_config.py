import json
from typing import List
import numpy as np

from ..core.constants import DEFAULT_SEED
from ..core.stack_exception import StackException

DEFAULT_START: str = "2017-01-01"
HEAVY_TAIL_EVERY: int = 4


"""
Parameters of one synthetic load series with daily, weekly and
annual seasonality plus n base models of varying bias and noise, all
sharing a common forecast error (common_noise, AR(1) like the load). All
levels, amplitudes and noise stds are in MW
"""
class SynthConfig:
    def __init__(self, series_id: str = "synth", n_models: int = 8, days: int = 730, base_level: float = 20000.0,
        daily_amplitude: float = 3000.0, weekly_amplitude: float = 1200.0, annual_amplitude: float = 2500.0,
        ar1: float = 0.9, noise_std: float = 400.0, biases: List[float] = None, model_noise: List[float] = None,
        heavy_tail: List[bool] = None, common_noise: float = 0.0, seed: int = DEFAULT_SEED, start: str = DEFAULT_START):

        self.series_id: str = str(series_id)
        self.n_models: int = int(n_models)
        self.days: int = int(days)
        self.base_level: float = float(base_level)
        self.daily_amplitude: float = float(daily_amplitude)
        self.weekly_amplitude: float = float(weekly_amplitude)
        self.annual_amplitude: float = float(annual_amplitude)
        self.ar1: float = float(ar1)
        self.noise_std: float = float(noise_std)
        self.biases: List[float] = [0.0] * self.n_models if biases is None else [float(b) for b in biases]
        self.model_noise: List[float] = [self.noise_std] * self.n_models if model_noise is None else [float(s) for s in model_noise]
        self.heavy_tail: List[bool] = [False] * self.n_models if heavy_tail is None else [bool(h) for h in heavy_tail]
        self.common_noise: float = float(common_noise)
        self.seed: int = int(seed)
        self.start: str = str(start)
        self.validate()


    @property
    def amplitude_sum(self) -> float:
        return abs(self.daily_amplitude) + abs(self.weekly_amplitude) + abs(self.annual_amplitude)


    def validate(self) -> None:
        if self.n_models < 2:
            raise StackException("A synthetic panel needs at least 2 base models")
        if self.days < 1:
            raise StackException("A synthetic panel needs at least 1 day")
        if not -1 < self.ar1 < 1:
            raise StackException("AR(1) coefficient must lie in (-1, 1), got {0}".format(self.ar1))
        if self.noise_std < 0 or self.common_noise < 0 or any(s < 0 for s in self.model_noise):
            raise StackException("Noise standard deviations must be non-negative")
        if any(b <= -1 for b in self.biases):
            raise StackException("Model bias fractions must exceed -1")
        if not (len(self.biases) == len(self.model_noise) == len(self.heavy_tail) == self.n_models):
            raise StackException("Per-model biases, noise stds and heavy tail flags must have {0} entries".format(self.n_models))

        # actuals stay positive
        if self.base_level <= self.amplitude_sum + 6 * self.noise_std:
            raise StackException("Base level {0} must exceed the amplitudes plus 6 noise stds ({1})"
                .format(self.base_level, self.amplitude_sum + 6 * self.noise_std))


    def as_dict(self) -> dict:
        return {
            "series_id": self.series_id,
            "n_models": self.n_models,
            "days": self.days,
            "base_level": self.base_level,
            "daily_amplitude": self.daily_amplitude,
            "weekly_amplitude": self.weekly_amplitude,
            "annual_amplitude": self.annual_amplitude,
            "ar1": self.ar1,
            "noise_std": self.noise_std,
            "biases": list(self.biases),
            "model_noise": list(self.model_noise),
            "heavy_tail": list(self.heavy_tail),
            "common_noise": self.common_noise,
            "seed": self.seed,
            "start": self.start
        }


def load_synth_config(config_path: str) -> SynthConfig:
    try:
        with open(config_path, "r") as f:
            values: dict = json.load(f)
    except OSError as e:
        raise StackException("Cannot read synthetic config '{0}': {1}".format(config_path, e))
    except ValueError as e:
        raise StackException("Synthetic config '{0}' is not valid JSON: {1}".format(config_path, e))

    try:
        return SynthConfig(**values)
    except TypeError as e:
        raise StackException("Synthetic config '{0}' has unknown keys: {1}".format(config_path, e))


def write_synth_config(config: SynthConfig, config_path: str) -> None:
    with open(config_path, "w") as f:
        json.dump(config.as_dict(), f, indent=2, sort_keys=True)


"""
A varied set of series for a benchmark: levels from 5 to 40 GW,
seasonal shapes scaled to the level, a spread of model biases and every
fourth model heavy tailed. The shared forecast error (1.5 to 2.5% of the
level) dominates the per-model noise (0.1 to 0.4%), so stacking cannot
average it away
"""
def benchmark_configs(count: int, days: int = 730, n_models: int = 8, seed: int = DEFAULT_SEED,
                      start: str = DEFAULT_START) -> List[SynthConfig]:
    if count < 1:
        raise StackException("Benchmark needs at least one series")

    configs: List[SynthConfig] = []
    for i, stream in enumerate(np.random.SeedSequence(seed).spawn(count)):
        rng: np.random.Generator = np.random.default_rng(stream)
        level: float = float(rng.uniform(5000.0, 40000.0))

        configs.append(SynthConfig(
            series_id="S{0:02d}".format(i + 1),
            n_models=n_models,
            days=days,
            base_level=level,
            daily_amplitude=level * float(rng.uniform(0.10, 0.18)),
            weekly_amplitude=level * float(rng.uniform(0.03, 0.07)),
            annual_amplitude=level * float(rng.uniform(0.05, 0.15)),
            ar1=float(rng.uniform(0.8, 0.95)),
            noise_std=level * float(rng.uniform(0.01, 0.025)),
            biases=[float(b) for b in rng.uniform(-0.03, 0.03, n_models)],
            model_noise=[level * float(s) for s in rng.uniform(0.001, 0.004, n_models)],
            heavy_tail=[(m + 1) % HEAVY_TAIL_EVERY == 0 for m in range(n_models)],
            common_noise=level * float(rng.uniform(0.015, 0.025)),
            seed=int(stream.generate_state(1)[0]),
            start=start))

    return configs
