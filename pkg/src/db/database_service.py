from collections import OrderedDict
from os import path, makedirs
from typing import Dict, List
from tinydb import TinyDB
from tinydb.table import Table

from .database_constants import DB_FILE, DB_RUNS
from .database_record import record_to_document, document_to_record, config_to_document, document_to_config
from ..core.method_config import MethodConfig
from ..core.quantile_grid import QuantileGrid, build_quantile_grid
from ..core.service import Service
from ..core.stack_exception import StackException
from ..etc.config_service import ConfigService
from ..evaluation.evaluation_results import EvaluationResult
from ..log.log_service import LogService

CONTEXT: str = "database"


"""
Per-hour evaluation records kept in a tinydb file, one table
per method label plus a table of the run configs. Saving replaces the
whole store so the file only depends on the results saved
"""
class DatabaseService(Service):
    def __init__(self, directory: str, config: ConfigService = None, logger: LogService = None):
        super().__init__(config, logger)
        self.db_path: str = path.join(directory, DB_FILE)


    def save_results(self, results: Dict[str, Dict[str, EvaluationResult]]) -> None:
        makedirs(path.dirname(self.db_path) or ".", exist_ok=True)

        with TinyDB(self.db_path, sort_keys=True) as db:
            db.drop_tables()
            runs: Table = db.table(DB_RUNS)

            for label in sorted(results):
                by_series: Dict[str, EvaluationResult] = results[label]
                if len(by_series) == 0:
                    continue

                if label == DB_RUNS:
                    raise StackException("Method label '{0}' is reserved".format(label))

                first: EvaluationResult = by_series[sorted(by_series)[0]]
                runs.insert(config_to_document(first.config))

                docs: List[dict] = [record_to_document(series_id, record)
                    for series_id in sorted(by_series) for record in by_series[series_id].records]
                db.table(label).insert_multiple(docs)

        self.logger.log_info("Saved {0} method(s) to {1}".format(len(results), self.db_path), CONTEXT)


    # rebuild full results (reports are recomputed
    # from the stored per-hour records)
    def load_results(self, grid: QuantileGrid = None) -> Dict[str, Dict[str, EvaluationResult]]:
        grid = grid if grid is not None else build_quantile_grid()

        if not path.exists(self.db_path):
            raise StackException("No record store at '{0}'".format(self.db_path))

        results: Dict[str, Dict[str, EvaluationResult]] = OrderedDict()

        with TinyDB(self.db_path, sort_keys=True) as db:
            for run in sorted(db.table(DB_RUNS).all(), key=lambda doc: doc["label"]):
                config: MethodConfig = document_to_config(run)
                docs: List[dict] = db.table(run["label"]).all()
                by_series: Dict[str, EvaluationResult] = OrderedDict()

                for series_id in sorted(set(doc["series"] for doc in docs)):
                    records = [document_to_record(doc, grid) for doc in docs if doc["series"] == series_id]
                    by_series[series_id] = EvaluationResult(series_id, config, records)

                results[run["label"]] = by_series

        return results
