from collections import OrderedDict

PROB_METRICS: tuple = (
    "MPQRE", "MdPQRE", "StdPQRE",
    "MARFE", "MdARFE", "StdARFE",
    "MPWS", "MdPWS", "StdPWS",
    "inPI", "belowPI", "abovePI",
    "QMAPE", "QMdAPE"
)
POINT_METRICS: tuple = ("MAPE", "MdAPE", "MSE", "MPE", "StdPE")


"""
Probabilistic quality metrics of a set of quantile forecasts,
percentages wherever the values are normalized by the actual load
"""
class ProbMetricsReport:
    def __init__(self, **values):
        missing: list = [m for m in PROB_METRICS if m not in values]
        if missing:
            raise ValueError("Missing metrics: {0}".format(", ".join(missing)))

        self.values: OrderedDict = OrderedDict((m, float(values[m])) for m in PROB_METRICS)


    def __getattr__(self, name: str) -> float:
        values = self.__dict__.get("values")
        if values is not None and name in values:
            return values[name]

        raise AttributeError(name)


    def __eq__(self, other) -> bool:
        return isinstance(other, ProbMetricsReport) and self.values == other.values


    def __repr__(self) -> str:
        return "ProbMetricsReport({0})".format(", ".join("{0}={1:.4g}".format(k, v) for k, v in self.values.items()))


    def as_dict(self) -> dict:
        return dict(self.values)


"""
Point forecast quality: MAPE, MdAPE (%), MSE (MW^2), MPE and StdPE (%)
"""
class PointMetricsReport:
    def __init__(self, MAPE: float, MdAPE: float, MSE: float, MPE: float, StdPE: float):
        self.MAPE: float = float(MAPE)
        self.MdAPE: float = float(MdAPE)
        self.MSE: float = float(MSE)
        self.MPE: float = float(MPE)
        self.StdPE: float = float(StdPE)


    def as_dict(self) -> dict:
        return OrderedDict((m, getattr(self, m)) for m in POINT_METRICS)


"""
Outcome of a Diebold-Mariano comparison of two loss series
"""
class DMResult:
    def __init__(self, statistic: float, p_value: float, n_obs: int):
        self.statistic: float = float(statistic)
        self.p_value: float = float(p_value)
        self.n_obs: int = int(n_obs)


    def __repr__(self) -> str:
        return "DMResult(statistic={0:.4f}, p_value={1:.4g}, n_obs={2})".format(self.statistic, self.p_value, self.n_obs)
