from .constants import \
    METHODS, MODES, METHOD_QRS, METHOD_QLR, METHOD_QRF, MODE_LOCAL, \
    DEFAULT_TREES, DEFAULT_MIN_LEAF_QRS, DEFAULT_MIN_LEAF_QRF, DEFAULT_HORIZON, DEFAULT_SEED
from .stack_exception import StackException
from ..forest.forest_params import ForestParams


"""
Everything needed to train one meta-learner for one
test hour: method, global/local mode, k, forest params, horizon, seed
"""
class MethodConfig:
    def __init__(self, method: str, mode: str, k: int = None, forest: ForestParams = None,
        horizon: int = DEFAULT_HORIZON, seed: int = DEFAULT_SEED, rearrange: bool = None):

        self.method: str = str(method).lower()
        self.mode: str = str(mode).lower()
        self.k: int = None if k is None else int(k)
        self.forest: ForestParams = forest
        self.horizon: int = int(horizon)
        self.seed: int = int(seed)
        self.rearrange: bool = (self.method == METHOD_QLR) if rearrange is None else bool(rearrange)
        self.validate()


    @staticmethod
    def defaults(method: str, mode: str = "global", k: int = None, trees: int = DEFAULT_TREES, min_leaf: int = None,
        horizon: int = DEFAULT_HORIZON, seed: int = DEFAULT_SEED, rearrange: bool = None) -> "MethodConfig":

        forest: ForestParams = None
        method = str(method).lower()

        if method == METHOD_QRS:
            forest = ForestParams(p=trees, q=DEFAULT_MIN_LEAF_QRS if min_leaf is None else min_leaf, seed=seed)
        elif method == METHOD_QRF:
            forest = ForestParams(p=trees, q=DEFAULT_MIN_LEAF_QRF if min_leaf is None else min_leaf, seed=seed)

        return MethodConfig(method, mode, k, forest, horizon, seed, rearrange)


    @property
    def is_local(self) -> bool:
        return self.mode == MODE_LOCAL


    # report/store key, e.g. qrf-global-q10 or qlr-local-k20
    @property
    def label(self) -> str:
        parts: list = [self.method, self.mode]

        if self.is_local:
            parts.append("k{0}".format(self.k))
        if self.forest is not None:
            parts.append("q{0}".format(self.forest.q))

        return "-".join(parts)


    def replace(self, **changes) -> "MethodConfig":
        values: dict = {
            "method": self.method,
            "mode": self.mode,
            "k": self.k,
            "forest": self.forest,
            "horizon": self.horizon,
            "seed": self.seed,
            "rearrange": self.rearrange
        }
        values.update(changes)
        return MethodConfig(**values)


    def validate(self) -> None:
        if self.method not in METHODS:
            raise StackException("Unknown method '{0}', expected one of {1}".format(self.method, ", ".join(METHODS)))
        if self.mode not in MODES:
            raise StackException("Unknown mode '{0}', expected one of {1}".format(self.mode, ", ".join(MODES)))
        if self.is_local and (self.k is None or self.k < 1):
            raise StackException("Local mode needs k >= 1")
        if self.horizon < 1:
            raise StackException("Horizon must be at least 1 hour")
        if self.method in (METHOD_QRS, METHOD_QRF) and self.forest is None:
            raise StackException("Method '{0}' needs forest parameters".format(self.method))
