from ..core.method_config import MethodConfig
from ..core.quantile_grid import QuantileGrid, QuantileForecast
from ..evaluation.evaluation_results import HourRecord
from ..forest.forest_params import ForestParams

"""
'Interface' like helpers to map records and
configs to and from tinydb documents
"""
def record_to_document(series_id: str, record: HourRecord) -> dict:
    return {
        "series": series_id,
        "hour": record.hour,
        "actual": record.actual,
        "pqre": record.pqre,
        "pws": record.pws,
        "quantiles": [float(q) for q in record.forecast.quantiles],
        "train_size": record.train_size,
        "max_train_index": record.max_train_index
    }


def document_to_record(doc: dict, grid: QuantileGrid) -> HourRecord:
    return HourRecord(
        int(doc["hour"]),
        float(doc["actual"]),
        QuantileForecast(doc["quantiles"], grid),
        float(doc["pqre"]),
        float(doc["pws"]),
        int(doc["train_size"]),
        int(doc["max_train_index"]))


def config_to_document(config: MethodConfig) -> dict:
    doc: dict = {
        "label": config.label,
        "method": config.method,
        "mode": config.mode,
        "k": config.k,
        "horizon": config.horizon,
        "seed": config.seed,
        "rearrange": config.rearrange,
        "forest": None
    }

    if config.forest is not None:
        doc["forest"] = config.forest.as_dict()

    return doc


def document_to_config(doc: dict) -> MethodConfig:
    forest: ForestParams = None
    if doc.get("forest") is not None:
        forest = ForestParams(**doc["forest"])

    return MethodConfig(doc["method"], doc["mode"], doc["k"], forest, doc["horizon"], doc["seed"], doc["rearrange"])
